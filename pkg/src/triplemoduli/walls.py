"""Critical values of the stability parameter and what happens across them.

The alpha-slope comparison between a triple of type (n1, n2, d1, d2) and a
subobject candidate of type (n1', n2', d') (d' is the total degree; the
comparison only sees the sum) degenerates to equality on the locus

    alpha = ((n1 + n2) d' - (n1' + n2')(d1 + d2)) / (n1' n2 - n1 n2'),

defined whenever the denominator is nonzero. The alpha values obtained this
way as (n1', n2', d') ranges over numerically admissible data are the walls:
away from them alpha-stability is locally constant, and crossing one changes
the moduli space along flip loci whose dimensions are controlled by the
Euler characteristics chi of the pieces.

Walls here are arithmetic: every geometric critical value appears, but an
arithmetic wall need not be realized by an actual strictly semistable
triple. All outputs are deterministic and exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .rationals import Rational
from .triples import (
    TripleType,
    alpha_range,
    chi,
    dim_stable_moduli,
    _check_genus,
)


@dataclass(frozen=True)
class WallWitness:
    """Numerically admissible subobject data (n1', n2', d1'+d2')."""

    n1p: int
    n2p: int
    dsum: int


@dataclass(frozen=True)
class Wall:
    """A critical parameter value with its arithmetic witnesses.

    ``stabilized`` is set (only for n1 = n2) on walls above the
    stabilization threshold alpha_L = n(n-1)(mu1 - mu2), where crossing no
    longer changes the moduli space.
    """

    alpha: Rational
    witnesses: tuple[WallWitness, ...]
    stabilized: bool = False


@dataclass(frozen=True)
class WallTest:
    """Answer of is_critical at one parameter value."""

    alpha: Rational
    critical: bool
    witnesses: tuple[WallWitness, ...]


@dataclass(frozen=True)
class GenericityFacts:
    """Sufficient-condition checks for an integer parameter m.

    ``guaranteed_noncritical``: gcd(n1+n2, d1+d2 - m n1) = 1 forces m to be
    no wall. ``no_alpha_independent``: gcd(n2, n1+n2, d1+d2) = 1 rules out
    subobject data that destabilizes for every alpha simultaneously. Both
    are sufficient only: False means "no guarantee", never "critical".
    """

    guaranteed_noncritical: bool
    no_alpha_independent: bool


@dataclass(frozen=True)
class Chamber:
    """Maximal open parameter interval containing no wall."""

    lo: Rational
    hi: Rational
    contains_2g_minus_2: bool
    is_large_chamber: bool


@dataclass(frozen=True)
class ChamberReport:
    """Chamber decomposition of the admissible range.

    ``walls`` are the separators strictly inside (alpha_m, top). The marker
    is alpha = 2g-2 (where triple moduli meet Higgs moduli);
    ``marker_status`` is one of inside, on_wall, at_alpha_m, at_alpha_M,
    below_range, above_range. ``flips_to_large`` counts the walls between
    the marker's chamber and the nearest large chamber (None when the
    marker is not interior to a chamber). ``alpha_L`` is reported for
    n1 = n2 only.
    """

    chambers: tuple[Chamber, ...]
    walls: tuple[Wall, ...]
    alpha_m: Rational
    top: Rational
    top_is_alpha_M: bool
    alpha_L: Optional[Rational]
    marker: Rational
    marker_status: str
    marker_chamber: Optional[int]
    flips_to_large: Optional[int]


@dataclass(frozen=True)
class FlipDims:
    """Dimension data of the flip locus attached to one split T' + T'' = T.

    The locus of triples sitting in extensions 0 -> T' -> T -> T'' -> 0
    fibers over the product of the factor moduli with projectivized
    extension spaces as fibers, giving

        stilde_dim = 1 - chi(T',T') - chi(T'',T'') - chi(T'',T''->T' cross)

    with fiber dimension ``minus_chi_cross`` - 1 = -chi(T'',T') - 1 (a
    negative value certifies the extension space is empty for every choice
    of factors; reported, not raised). The two cross terms need not be
    equal; by additivity of chi the exact identity is

        dim_moduli = stilde_dim + minus_chi_cross_rev,

    with minus_chi_cross_rev = -chi(T',T''), and codim_in_moduli is defined
    by that difference. ``guaranteed_codim`` = g-1 is the general lower
    bound for genuine flip loci. ``side`` says which one-sided locus the
    split can feed: "plus" when n2'/(n1'+n2') < n2''/(n1''+n2''), else
    "minus".
    """

    stilde_dim: int
    minus_chi_cross: int
    minus_chi_cross_rev: int
    guaranteed_codim: int
    alpha_c: Rational
    side: str
    fiber_dim: int
    fiber_nonempty: bool
    dim_moduli: int
    codim_in_moduli: int


def _admissible_rank_pairs(T: TripleType):
    for n1p in range(T.n1 + 1):
        for n2p in range(T.n2 + 1):
            if n1p == 0 and n2p == 0:
                continue
            det = n1p * T.n2 - T.n1 * n2p
            if det == 0:
                continue
            yield n1p, n2p, det


def wall_alpha(T: TripleType, n1p: int, n2p: int, dsum: int) -> Rational:
    """Parameter value where the candidate's alpha-slope meets T's.

    Requires 0 <= nip <= ni, (n1p, n2p) != (0, 0) and a non-proportional
    rank pair (n1p n2 != n1 n2p), else no single wall exists.
    """
    if not (0 <= n1p <= T.n1 and 0 <= n2p <= T.n2):
        raise DomainError("witness ranks out of bounds")
    if n1p == 0 and n2p == 0:
        raise DomainError("witness ranks must not both be zero")
    det = n1p * T.n2 - T.n1 * n2p
    if det == 0:
        raise DomainError(
            "rank pair (%d, %d) is proportional to (%d, %d); the slopes are "
            "parallel in alpha" % (n1p, n2p, T.n1, T.n2)
        )
    return Fraction(
        T.total_rank * dsum - (n1p + n2p) * T.total_degree, det
    )


def _alpha_L_equal_ranks(T: TripleType) -> Fraction:
    gap = Fraction(T.d1, T.n1) - Fraction(T.d2, T.n2)
    return T.n1 * (T.n1 - 1) * gap


def enumerate_walls(
    T: TripleType,
    interval: Optional[tuple[Rational, Rational]] = None,
    include_endpoints: bool = False,
    g: Optional[int] = None,
) -> tuple[Wall, ...]:
    """All walls inside a closed parameter window, sorted ascending.

    The window defaults to the admissible range [alpha_m, alpha_M]; an
    empty default range (mu1 < mu2) yields no walls. For n1 = n2 the range
    is unbounded, so either an explicit interval or g must be given, the
    latter selecting the default horizon max(alpha_L, 2g-2, alpha_m) + 1; walls
    above alpha_L are tagged ``stabilized``. Unless ``include_endpoints``
    is set, walls sitting exactly at alpha_m or alpha_M are dropped (the
    window edges themselves are not filtered; a window endpoint that is
    not a range endpoint stays, which is how (1, 5] style queries behave).

    Per admissible rank pair the wall equation is affine and monotone in
    the degree sum d', so d' runs over one computable integer interval;
    witnesses sharing an alpha are merged. Output is independent of scan
    order.
    """
    if T.n1 < 1 or T.n2 < 1:
        raise DomainError("enumerate_walls needs both ranks >= 1")
    rng = alpha_range(T)
    if interval is None:
        if rng.empty:
            return ()
        lo = rng.lo
        if T.n1 == T.n2:
            if g is None:
                raise DomainError(
                    "the wall set for n1 = n2 is unbounded; pass an explicit "
                    "interval or g for the default horizon max(alpha_L, 2g-2, alpha_m)+1"
                )
            _check_genus(g)
            hi = max(_alpha_L_equal_ranks(T), Fraction(2 * g - 2), lo) + 1
        else:
            assert rng.hi is not None
            hi = rng.hi
    else:
        lo = Fraction(interval[0])
        hi = Fraction(interval[1])
        if lo > hi:
            raise DomainError("interval lo > hi")
    n = T.total_rank
    D = T.total_degree
    found: dict[Fraction, set[tuple[int, int, int]]] = {}
    for n1p, n2p, det in _admissible_rank_pairs(T):
        npr = n1p + n2p
        b1 = lo * det + npr * D
        b2 = hi * det + npr * D
        if b1 > b2:
            b1, b2 = b2, b1
        for dp in range(math.ceil(b1 / n), math.floor(b2 / n) + 1):
            alpha = Fraction(n * dp - npr * D, det)
            found.setdefault(alpha, set()).add((n1p, n2p, dp))
    if not include_endpoints:
        found.pop(rng.lo, None)
        if rng.hi is not None:
            found.pop(rng.hi, None)
    equal_ranks = T.n1 == T.n2
    aL = _alpha_L_equal_ranks(T) if equal_ranks else None
    walls = []
    for alpha in sorted(found):
        wits = tuple(WallWitness(*w) for w in sorted(found[alpha]))
        stab = equal_ranks and aL is not None and alpha > aL
        walls.append(Wall(alpha, wits, stab))
    return tuple(walls)


def is_critical(T: TripleType, alpha: Rational) -> WallTest:
    """Arithmetic criticality test at one alpha, with witnesses.

    True iff some admissible (n1', n2', d') solves the wall equation at
    alpha exactly. No range filtering is applied; in particular alpha_m
    itself usually tests critical.
    """
    if T.n1 < 1 or T.n2 < 1:
        raise DomainError("is_critical needs both ranks >= 1")
    a = Fraction(alpha)
    n = T.total_rank
    D = T.total_degree
    wits = set()
    for n1p, n2p, det in _admissible_rank_pairs(T):
        dp = (a * det + (n1p + n2p) * D) / n
        if dp.denominator == 1:
            wits.add((n1p, n2p, int(dp)))
    witnesses = tuple(WallWitness(*w) for w in sorted(wits))
    return WallTest(a, bool(witnesses), witnesses)


def integer_genericity(T: TripleType, m: int) -> GenericityFacts:
    """Sufficient genericity tests for the integer parameter m."""
    if not isinstance(m, int) or isinstance(m, bool):
        raise DomainError("m must be an integer, got %r" % (m,))
    n = T.total_rank
    D = T.total_degree
    return GenericityFacts(
        guaranteed_noncritical=math.gcd(n, D - m * T.n1) == 1,
        no_alpha_independent=math.gcd(T.n2, n, D) == 1,
    )


def chambers(
    T: TripleType, g: int, cutoff: Optional[Rational] = None
) -> ChamberReport:
    """Chamber decomposition of the admissible range, with 2g-2 located.

    For n1 != n2 the range [alpha_m, alpha_M] is cut at its interior
    walls ("cutoff" is not used there); for n1 = n2 the window runs up to
    ``cutoff`` (default max(alpha_L, 2g-2, alpha_m) + 1). The last chamber is
    always flagged large: for n1 != n2 it is the one adjacent to alpha_M,
    and for n1 = n2 every wall beyond the window is above alpha_L, where
    crossing is stabilized; chambers entirely above alpha_L are flagged
    large as well. Raises on an empty or degenerate range.
    """
    _check_genus(g)
    if T.n1 < 1 or T.n2 < 1:
        raise DomainError("chambers needs both ranks >= 1")
    rng = alpha_range(T)
    if rng.empty:
        raise DomainError(
            "empty admissible range (mu1 < mu2); no chamber decomposition"
        )
    if rng.single_point:
        raise DomainError(
            "admissible range degenerates to the point alpha = %s; no "
            "chambers" % (rng.lo,)
        )
    lo = rng.lo
    equal_ranks = T.n1 == T.n2
    alpha_L = _alpha_L_equal_ranks(T) if equal_ranks else None
    if equal_ranks:
        if cutoff is not None:
            top = Fraction(cutoff)
            if top <= lo:
                raise DomainError("cutoff must exceed alpha_m = %s" % (lo,))
        else:
            assert alpha_L is not None
            top = max(alpha_L, Fraction(2 * g - 2), lo) + 1
        top_is_alpha_M = False
    else:
        assert rng.hi is not None
        top = rng.hi
        top_is_alpha_M = True
    all_walls = enumerate_walls(T, interval=(lo, top))
    separators = tuple(w for w in all_walls if lo < w.alpha < top)
    bounds = [lo] + [w.alpha for w in separators] + [top]
    marker = Fraction(2 * g - 2)
    spans = list(zip(bounds[:-1], bounds[1:]))
    large_flags = []
    for i, (c_lo, c_hi) in enumerate(spans):
        large = i == len(spans) - 1
        if equal_ranks and alpha_L is not None and c_lo >= alpha_L:
            large = True
        large_flags.append(large)
    marker_chamber: Optional[int] = None
    if marker < lo:
        status = "below_range"
    elif marker == lo:
        status = "at_alpha_m"
    elif top_is_alpha_M and marker == top:
        status = "at_alpha_M"
    elif marker > top:
        status = "above_range"
    elif any(marker == w.alpha for w in separators):
        status = "on_wall"
    else:
        status = "inside"
        for i, (c_lo, c_hi) in enumerate(spans):
            if c_lo < marker < c_hi:
                marker_chamber = i
                break
    chamber_objs = tuple(
        Chamber(
            lo=c_lo,
            hi=c_hi,
            contains_2g_minus_2=(marker_chamber == i),
            is_large_chamber=large_flags[i],
        )
        for i, (c_lo, c_hi) in enumerate(spans)
    )
    flips: Optional[int] = None
    if marker_chamber is not None:
        large_idx = [i for i, f in enumerate(large_flags) if f]
        flips = min(abs(i - marker_chamber) for i in large_idx)
    return ChamberReport(
        chambers=chamber_objs,
        walls=separators,
        alpha_m=lo,
        top=top,
        top_is_alpha_M=top_is_alpha_M,
        alpha_L=alpha_L,
        marker=marker,
        marker_status=status,
        marker_chamber=marker_chamber,
        flips_to_large=flips,
    )


def flip_dims(T: TripleType, Tp: TripleType, g: int) -> FlipDims:
    """Flip locus dimension data for the split T' + T'' = T, T' = Tp.

    Tp plays the subobject role (extensions 0 -> T' -> T -> T'' -> 0) and
    carries an explicit degree split (d1', d2'), which the chi values need
    even though the wall location only sees their sum. Preconditions,
    violations raised as DomainError naming the condition:

    (C1) componentwise complement: T'' = T - T' must have nonnegative
         ranks, not both zero (and T' likewise, enforced by its type);
    (C2) equal alpha-slopes at a critical value: the wall equation for
         (n1', n2', d1'+d2') must put alpha_c strictly inside the
         admissible range (for n1 = n2 that means alpha_c > alpha_m).

    No minimization over splits is attempted; each call reports one split.
    """
    _check_genus(g)
    if T.n1 < 1 or T.n2 < 1:
        raise DomainError("flip_dims needs both ranks of T >= 1")
    n1pp = T.n1 - Tp.n1
    n2pp = T.n2 - Tp.n2
    if Tp.n1 < 0 or Tp.n2 < 0 or n1pp < 0 or n2pp < 0:
        raise DomainError(
            "(C1) violated: complement ranks (%d, %d) must be nonnegative"
            % (n1pp, n2pp)
        )
    if n1pp == 0 and n2pp == 0:
        raise DomainError("(C1) violated: complement T'' is zero (T' = T)")
    det = Tp.n1 * T.n2 - T.n1 * Tp.n2
    if det == 0:
        raise DomainError(
            "(C2) violated: rank pair (%d, %d) is proportional to (%d, %d), "
            "the slopes never cross" % (Tp.n1, Tp.n2, T.n1, T.n2)
        )
    alpha_c = wall_alpha(T, Tp.n1, Tp.n2, Tp.total_degree)
    rng = alpha_range(T)
    inside = alpha_c > rng.lo and (rng.hi is None or alpha_c < rng.hi)
    if not inside:
        raise DomainError(
            "(C2) violated: slopes meet only at alpha = %s, not strictly "
            "inside the admissible range (%s, %s)"
            % (alpha_c, rng.lo, "inf" if rng.hi is None else rng.hi)
        )
    Tpp = TripleType(n1pp, n2pp, T.d1 - Tp.d1, T.d2 - Tp.d2)
    chi_sub = chi(Tp, Tp, g)
    chi_quot = chi(Tpp, Tpp, g)
    cross = chi(Tpp, Tp, g)
    cross_rev = chi(Tp, Tpp, g)
    stilde = 1 - chi_sub - chi_quot - cross
    dim = dim_stable_moduli(T, g)
    codim = dim - stilde
    # additivity of chi makes this exact for every split
    assert codim == -cross_rev
    lam_sub = Fraction(Tp.n2, Tp.total_rank)
    lam_quot = Fraction(n2pp, n1pp + n2pp)
    return FlipDims(
        stilde_dim=stilde,
        minus_chi_cross=-cross,
        minus_chi_cross_rev=-cross_rev,
        guaranteed_codim=g - 1,
        alpha_c=alpha_c,
        side="plus" if lam_sub < lam_quot else "minus",
        fiber_dim=-cross - 1,
        fiber_nonempty=-cross - 1 >= 0,
        dim_moduli=dim,
        codim_in_moduli=codim,
    )
