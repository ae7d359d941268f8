"""Independent brute-force oracles used to check the production code.

These deliberately share no derivation with the library: walls are
found by scanning every candidate subtriple over a provably generous
degree window and keeping exact rational hits, rather than by the
per-rank-pair monotone interval the library uses.
"""

from fractions import Fraction as F


def oracle_walls(T, lo, hi):
    """Every wall location in the closed window [lo, hi], with the full
    witness set per location."""
    n = T.n1 + T.n2
    D = T.d1 + T.d2
    big = max(abs(lo), abs(hi))
    found = {}
    for n1p in range(T.n1 + 1):
        for n2p in range(T.n2 + 1):
            if (n1p, n2p) == (0, 0):
                continue
            det = n1p * T.n2 - T.n1 * n2p
            if det == 0:
                continue
            npr = n1p + n2p
            # |dp| <= (big |det| + |npr D|)/n, padded.
            cap = int((big * abs(det) + abs(npr * D)) / n) + 2
            for dp in range(-cap, cap + 1):
                alpha = F(n * dp - npr * D, det)
                if lo <= alpha <= hi:
                    found.setdefault(alpha, set()).add((n1p, n2p, dp))
    return found


def oracle_critical_at_integer(T, m):
    """Point form of the wall oracle: is the integer m a wall location?"""
    n = T.n1 + T.n2
    D = T.d1 + T.d2
    for n1p in range(T.n1 + 1):
        for n2p in range(T.n2 + 1):
            if (n1p, n2p) == (0, 0):
                continue
            det = n1p * T.n2 - T.n1 * n2p
            if det == 0:
                continue
            if (m * det + (n1p + n2p) * D) % n == 0:
                return True
    return False


def oracle_alpha_independent_witness(T):
    """Is there a proper subtriple destabilizing at every alpha at once?

    Such a witness has a rank pair proportional to (n1, n2) (so the
    parameter cancels) and the same underlying slope, which pins its
    degree sum to n' D / n; it exists iff that value is an integer for
    some proper proportional rank pair.
    """
    n = T.n1 + T.n2
    D = T.d1 + T.d2
    for n1p in range(T.n1 + 1):
        for n2p in range(T.n2 + 1):
            if (n1p, n2p) in ((0, 0), (T.n1, T.n2)):
                continue
            if n1p * T.n2 != T.n1 * n2p:
                continue
            if ((n1p + n2p) * D) % n == 0:
                return True
    return False
