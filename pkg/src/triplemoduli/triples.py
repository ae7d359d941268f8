"""Core invariants of holomorphic triples.

A holomorphic triple on a smooth projective curve of genus g is a pair of
bundles with a connecting map, T = (E1, E2, phi) with phi: E2 -> E1. Its
discrete type is (n1, n2, d1, d2) = (rk E1, rk E2, deg E1, deg E2), and all
of the invariants computed here depend on the type alone. Stability depends
on a rational parameter alpha through the alpha-slope

    mu_alpha(T) = (d1 + d2)/(n1 + n2) + alpha * n2/(n1 + n2),

and T is alpha-(semi)stable when every proper subtriple has strictly smaller
(or equal) alpha-slope. This module implements the closed-form consequences:
the admissible alpha interval, the named parameter thresholds, the duality
on types, the Euler characteristic chi(T'', T') of the hypercohomology
complex controlling Hom/Ext between triples, and the dimension formulas it
induces for the moduli space N_alpha(n1, n2, d1, d2) and for the large-alpha
fibration over bundle moduli.

Everything is exact: inputs are integers, outputs are integers or
``fractions.Fraction``. ``None`` marks +infinity for interval endpoints.
Violated preconditions raise :class:`~triplemoduli.errors.DomainError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError
from .rationals import Rational


@dataclass(frozen=True)
class TripleType:
    """Discrete type (n1, n2, d1, d2) of a holomorphic triple.

    Ranks are nonnegative and not both zero; zero rank is allowed so that
    sub- and quotient-triple data (e.g. (0, 1, 0, 0)) can be expressed.
    """

    n1: int
    n2: int
    d1: int
    d2: int

    def __post_init__(self) -> None:
        for name in ("n1", "n2", "d1", "d2"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise DomainError("%s must be an integer, got %r" % (name, v))
        if self.n1 < 0 or self.n2 < 0:
            raise DomainError("ranks must be nonnegative")
        if self.n1 == 0 and self.n2 == 0:
            raise DomainError("ranks must not both be zero")

    @property
    def total_rank(self) -> int:
        return self.n1 + self.n2

    @property
    def total_degree(self) -> int:
        return self.d1 + self.d2

    @property
    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.d1, self.d2)


@dataclass(frozen=True)
class WitnessOutcome:
    """Evaluation of one claimed destabilizer against a triple."""

    witness: TripleType
    delta: Optional[Rational]
    satisfies: Optional[bool]
    error: Optional[str]


@dataclass(frozen=True)
class WitnessReport:
    """Result of checking a list of subtriple candidates at one alpha.

    ``passed`` is True when every witness was a valid candidate and every
    delta satisfied the required inequality. This certifies only that the
    listed witnesses do not destabilize; it is not a stability decision
    procedure, since the full subtriple set is never enumerated.
    """

    alpha: Rational
    strict: bool
    passed: bool
    items: tuple[WitnessOutcome, ...]


@dataclass(frozen=True)
class AlphaInterval:
    """Admissible stability parameters for a type.

    ``hi`` is None when n1 = n2 (the interval is unbounded above). ``empty``
    flags mu1 < mu2, where no alpha admits stable triples; ``single_point``
    flags mu1 = mu2 with n1 != n2, where the interval degenerates to {0}.
    """

    lo: Rational
    hi: Optional[Rational]
    empty: bool
    single_point: bool


@dataclass(frozen=True)
class Thresholds:
    """Named parameter thresholds of a type with mu1 >= mu2.

    When the input had n1 < n2 it is replaced by its dual (``dualized`` is
    then True) and every field refers to the dualized type; alpha_m and
    alpha_M are unchanged by that move. alpha_js lists alpha_j for
    j = 0..n2-1 (alpha_0 is its first entry), alpha_t exists only for
    n1 > n2, alpha_e = max(alpha_m, alpha_0, alpha_t), and alpha_L is the
    stabilization threshold: the closed form n(n-1)(mu1 - mu2) when n1 = n2,
    otherwise the largest interior wall (falling back to alpha_m, flagged,
    when there is none).
    """

    alpha_m: Rational
    alpha_M: Optional[Rational]
    alpha_0: Rational
    alpha_js: tuple[Rational, ...]
    alpha_t: Optional[Rational]
    alpha_e: Rational
    alpha_L: Rational
    alpha_L_is_fallback: bool
    dualized: bool


@dataclass(frozen=True)
class BaseFactor:
    """One factor of the base of the large-alpha fibration.

    kind is "stable_bundles" (params: rank, degree) or "symmetric_product"
    (params: degree of the divisors).
    """

    kind: str
    rank: Optional[int]
    degree: int


@dataclass(frozen=True)
class FibrationDims:
    """Projective fiber dimension and base of the large-alpha fibration.

    fiber_dim may be negative; that is reported through ``empty_fiber``
    rather than raised, since it simply certifies the fibration has empty
    fibers for that type. When the input had n1 < n2 the computation runs
    on the dual type (``via_duality``) and the base factors describe the
    dual's fibration; the moduli spaces are isomorphic.
    """

    fiber_dim: int
    base_factors: tuple[BaseFactor, ...]
    via_duality: bool
    empty_fiber: bool


def _check_genus(g: int) -> None:
    if not isinstance(g, int) or isinstance(g, bool) or g < 2:
        raise DomainError("genus must be an integer >= 2, got %r" % (g,))


def slope(n: int, d: int) -> Rational:
    """Slope d/n of a bundle of rank n >= 1 and degree d."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError("slope needs rank >= 1, got %r" % (n,))
    return Fraction(d, n)


def triple_slope(T: TripleType) -> Rational:
    """Plain slope mu(T) = (d1 + d2)/(n1 + n2)."""
    return Fraction(T.total_degree, T.total_rank)


def alpha_slope(T: TripleType, alpha: Rational) -> Rational:
    """alpha-slope mu_alpha(T) = mu(T) + alpha * n2/(n1 + n2)."""
    a = Fraction(alpha)
    return triple_slope(T) + a * Fraction(T.n2, T.total_rank)


def delta_alpha(T: TripleType, W: TripleType, alpha: Rational) -> Rational:
    """mu_alpha(W) - mu_alpha(T) for a subobject candidate W of T.

    W must satisfy 0 <= W.ni <= T.ni componentwise; W = T is allowed and
    gives 0. The sign convention: alpha-stability of T demands delta < 0
    for every proper subtriple.
    """
    if not (0 <= W.n1 <= T.n1 and 0 <= W.n2 <= T.n2):
        raise DomainError(
            "witness ranks (%d, %d) not within (%d, %d)" % (W.n1, W.n2, T.n1, T.n2)
        )
    return alpha_slope(W, alpha) - alpha_slope(T, alpha)


def witness_check(
    T: TripleType,
    witnesses: Sequence[TripleType],
    alpha: Rational,
    strict: bool = True,
) -> WitnessReport:
    """Evaluate claimed destabilizers of T at one parameter value.

    Each witness is checked independently; an invalid one (ranks outside
    [0, ni], zero ranks, or, in strict mode, W = T, which is not a proper
    subtriple) is recorded as a per-item error and the rest are still
    evaluated. A valid witness satisfies the stability inequality when
    delta < 0 (strict) or delta <= 0 (non-strict). ``passed`` requires all
    items valid and satisfied. Witnesses certify only themselves: this
    checks certificates, it does not decide alpha-stability.
    """
    a = Fraction(alpha)
    items = []
    passed = True
    for W in witnesses:
        err = None
        if not (0 <= W.n1 <= T.n1 and 0 <= W.n2 <= T.n2):
            err = "ranks (%d, %d) not within (%d, %d)" % (W.n1, W.n2, T.n1, T.n2)
        elif strict and W == T:
            err = "equal to T, not a proper subtriple"
        if err is not None:
            items.append(WitnessOutcome(W, None, None, err))
            passed = False
            continue
        d = delta_alpha(T, W, a)
        ok = d < 0 if strict else d <= 0
        items.append(WitnessOutcome(W, d, ok, None))
        if not ok:
            passed = False
    return WitnessReport(a, strict, passed, tuple(items))


def alpha_range(T: TripleType) -> AlphaInterval:
    """Admissible interval [alpha_m, alpha_M] of stability parameters.

    alpha_m = mu1 - mu2 and, for n1 != n2,
    alpha_M = (1 + (n1 + n2)/|n1 - n2|) (mu1 - mu2); for n1 = n2 the
    interval is unbounded above (hi is None).
    """
    if T.n1 < 1 or T.n2 < 1:
        raise DomainError("alpha_range needs both ranks >= 1")
    mu1 = Fraction(T.d1, T.n1)
    mu2 = Fraction(T.d2, T.n2)
    gap = mu1 - mu2
    lo = gap
    if T.n1 == T.n2:
        hi: Optional[Fraction] = None
    else:
        hi = (1 + Fraction(T.total_rank, abs(T.n1 - T.n2))) * gap
    return AlphaInterval(
        lo=lo,
        hi=hi,
        empty=gap < 0,
        single_point=(gap == 0 and T.n1 != T.n2),
    )


def dual(T: TripleType) -> TripleType:
    """Dual type (n2, n1, -d2, -d1); an involution preserving mu1 - mu2."""
    return TripleType(T.n2, T.n1, -T.d2, -T.d1)


def thresholds(T: TripleType) -> Thresholds:
    """Named thresholds alpha_m, alpha_M, alpha_j, alpha_t, alpha_e, alpha_L.

    Requires mu1 >= mu2 (otherwise the admissible range is empty and no
    threshold exists). Types with n1 < n2 are replaced by their dual, which
    preserves mu1 - mu2 and hence alpha_m and alpha_M; the remaining fields
    then refer to the dualized type and ``dualized`` is set.

    For j = 0..n2-1 (computed on the dualized type, where n1 >= n2),

        alpha_j = 2 n1 n2 (mu1 - mu2) / (n2 (n1 - n2) + (j + 1)(n1 + n2)),

    a strictly decreasing sequence when mu1 > mu2; alpha_0 bounds the region
    where the connecting map must be injective-generic, and for n1 > n2

        alpha_t = alpha_M - (n1 + n2)/(n2 (n1 - n2))

    bounds where it must be surjective-generic. alpha_e is the entry
    threshold max(alpha_m, alpha_0, alpha_t).
    """
    if T.n1 < 1 or T.n2 < 1:
        raise DomainError("thresholds needs both ranks >= 1")
    dualized = False
    S = T
    if S.n1 < S.n2:
        S = dual(S)
        dualized = True
    mu1 = Fraction(S.d1, S.n1)
    mu2 = Fraction(S.d2, S.n2)
    gap = mu1 - mu2
    if gap < 0:
        raise DomainError(
            "thresholds needs mu1 >= mu2; mu1 - mu2 = %s < 0 means the "
            "admissible alpha range is empty" % (gap,)
        )
    n1, n2 = S.n1, S.n2
    n = n1 + n2
    rng = alpha_range(S)
    alpha_m = rng.lo
    alpha_M = rng.hi
    alpha_js = tuple(
        2 * n1 * n2 * gap / (n2 * (n1 - n2) + (j + 1) * n)
        for j in range(n2)
    )
    alpha_0 = alpha_js[0]
    alpha_t: Optional[Fraction] = None
    if n1 > n2:
        assert alpha_M is not None
        alpha_t = alpha_M - Fraction(n, n2 * (n1 - n2))
    candidates = [alpha_m, alpha_0]
    if alpha_t is not None:
        candidates.append(alpha_t)
    alpha_e = max(candidates)
    if n1 == n2:
        alpha_L = n1 * (n1 - 1) * gap
        fallback = False
    else:
        # largest interior wall; the import is deferred because walls.py
        # builds on this module
        from .walls import enumerate_walls

        interior = enumerate_walls(S, interval=(alpha_m, alpha_M))
        if interior:
            alpha_L = interior[-1].alpha
            fallback = False
        else:
            alpha_L = alpha_m
            fallback = True
    return Thresholds(
        alpha_m=alpha_m,
        alpha_M=alpha_M,
        alpha_0=alpha_0,
        alpha_js=alpha_js,
        alpha_t=alpha_t,
        alpha_e=alpha_e,
        alpha_L=alpha_L,
        alpha_L_is_fallback=fallback,
        dualized=dualized,
    )


def chi(Tpp: TripleType, Tp: TripleType, g: int) -> int:
    """Euler characteristic chi(T'', T') of the Hom complex on genus g.

    This is chi of the two-term complex computing Hom(T'', T') and
    Ext^1(T'', T'), whose value depends only on the two types:

        chi = (1-g)(n1'' n1' + n2'' n2' - n2'' n1')
              + n1'' d1' - n1' d1'' + n2'' d2' - n2' d2''
              - n2'' d1' + n1' d2''.

    In particular extensions 0 -> T' -> T -> T'' -> 0 are governed by
    Ext^1(T'', T'), of dimension -chi(T'', T') whenever the boundary
    cohomologies vanish.
    """
    _check_genus(g)
    a1, a2, x1, x2 = Tpp.as_tuple
    b1, b2, y1, y2 = Tp.as_tuple
    rank_part = (1 - g) * (a1 * b1 + a2 * b2 - a2 * b1)
    deg_part = a1 * y1 - b1 * x1 + a2 * y2 - b2 * x2 - a2 * y1 + b1 * x2
    return rank_part + deg_part


def dim_stable_moduli(T: TripleType, g: int) -> int:
    """Dimension of the smooth stable moduli space at a generic parameter.

    Equals 1 - chi(T, T) = (g-1)(n1^2 + n2^2 - n1 n2) + n2 d1 - n1 d2 + 1.
    """
    _check_genus(g)
    return 1 - chi(T, T, g)


def fibration_dims(T: TripleType, g: int) -> FibrationDims:
    """Fiber and base of the fibration of the large-alpha moduli space.

    For n1 > n2 the space fibers over M(n1 - n2, d1 - d2) x M(n2, d2) with
    projective fibers of dimension

        N = n2 d1 - n1 d2 + n1 (n1 - n2)(g - 1) - 1,

    and for n1 = n2 = n over M(n, d2) x Sym^(d1 - d2)(X) with fibers of
    dimension N = n (d1 - d2) - 1. Types with n1 < n2 are handled through
    the dual. Negative N is reported, not raised.
    """
    _check_genus(g)
    if T.n1 < 1 or T.n2 < 1:
        raise DomainError("fibration_dims needs both ranks >= 1")
    via_duality = False
    S = T
    if S.n1 < S.n2:
        S = dual(S)
        via_duality = True
    n1, n2, d1, d2 = S.as_tuple
    if n1 > n2:
        fiber = n2 * d1 - n1 * d2 + n1 * (n1 - n2) * (g - 1) - 1
        base = (
            BaseFactor("stable_bundles", n1 - n2, d1 - d2),
            BaseFactor("stable_bundles", n2, d2),
        )
    else:
        fiber = n1 * (d1 - d2) - 1
        base = (
            BaseFactor("stable_bundles", n1, d2),
            BaseFactor("symmetric_product", None, d1 - d2),
        )
    return FibrationDims(
        fiber_dim=fiber,
        base_factors=base,
        via_duality=via_duality,
        empty_fiber=fiber < 0,
    )
