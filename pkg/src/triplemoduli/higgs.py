"""Bridge between U(p,q) Higgs data and triple types.

A U(p,q)-Higgs bundle is V + W with Higgs field components b: W -> V x K
and c: V -> W x K; its discrete data is (p, q, a, b) = (rk V, rk W, deg V,
deg W) together with the genus g. The Toledo invariant

    tau = 2 (q a - p b)/(p + q)

is bounded by tau_M = min(p, q)(2g - 2), and the minima of the Morse
function on the moduli space are exactly the loci where one Higgs component
vanishes; those minima form a triple moduli space at parameter alpha =
2g - 2. This module computes tau and its bound, the minima triple type, the
resulting placement facts relating 2g - 2 to the triple thresholds, the
expected moduli dimension 1 + (p+q)^2 (g-1), the vanishing pattern, the
coprimality smoothness test, and the decomposition forced at maximal tau
with p != q (rigidity), whose total dimension falls below the expected one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .rationals import Rational
from .triples import TripleType, alpha_range


@dataclass(frozen=True)
class HiggsType:
    """Discrete type (p, q, a, b) on a curve of genus g."""

    p: int
    q: int
    a: int
    b: int
    g: int

    def __post_init__(self) -> None:
        for name in ("p", "q", "a", "b", "g"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise DomainError("%s must be an integer, got %r" % (name, v))
        if self.p < 1 or self.q < 1:
            raise DomainError("ranks p, q must be >= 1")
        if self.g < 2:
            raise DomainError("genus must be an integer >= 2")

    @property
    def total_rank(self) -> int:
        return self.p + self.q

    @property
    def total_degree(self) -> int:
        return self.a + self.b


@dataclass(frozen=True)
class ToledoReport:
    tau: Rational
    tau_M: int
    within_bound: bool
    saturated: bool


@dataclass(frozen=True)
class MinimaRealization:
    """Triple-moduli description of the Morse minima for one Higgs type.

    case_tag records which Higgs component vanishes on the minima locus
    (gamma_zero when a/p < b/q, beta_zero when a/p > b/q, both_zero at the
    tie); the triple is taken at alpha = 2g - 2. At the tie the minima are
    plain bundle pairs and ``product_factors`` lists the two bundle moduli
    (rank, degree) factors.
    """

    case_tag: str
    triple: TripleType
    alpha: Rational
    product_factors: Optional[tuple[tuple[int, int], tuple[int, int]]]


@dataclass(frozen=True)
class MWReport:
    """Placement of 2g - 2 against the minima triple's thresholds.

    The named facts are theorems and should all hold; they are reported as
    booleans so sweeps can assert them. alpha_M is None when p = q (the
    minima triple then has equal ranks and an unbounded range, and the
    bound is governed by alpha_m >= 0 instead).
    """

    tau: Rational
    tau_M: int
    within_bound: bool
    saturated: bool
    triple: TripleType
    alpha_m: Rational
    alpha_M: Optional[Rational]
    two_g_minus_2: int
    alpha_m_vs_2g2: str
    alpha_M_vs_2g2: Optional[str]
    facts: tuple[tuple[str, bool], ...]


@dataclass(frozen=True)
class RigidityReport:
    """Forced decomposition at |tau| = tau_M with p != q.

    Every semistable object then splits as a maximal-Toledo U(m,m) piece
    (m = min(p,q)) and a bundle of rank |p - q|; factor1 is the U(m,m)
    type, factor2 the (rank, degree) of the bundle. dim_sum adds the two
    factor moduli dimensions; dim_sum_closed_form evaluates
    2 + (4 m^2 + (p-q)^2)(g-1), which equals 2 + (5p^2 + q^2 - 2pq)(g-1)
    when p < q. The stable locus is empty and dim_sum < expected_dim.
    """

    applies: bool
    reason: Optional[str]
    factor1: Optional[HiggsType]
    factor2_rank: Optional[int]
    factor2_degree: Optional[int]
    dim_sum: Optional[int]
    dim_sum_closed_form: Optional[int]
    expected_dim: int
    below_expected: Optional[bool]
    warnings: tuple[str, ...]


RIGIDITY_DIM_WARNING = (
    "rigidity-dimension-erratum: the closed form is sometimes printed with "
    "transposed rank coefficients as 2+(p^2+5q^2-2pq)(g-1); the component "
    "sum, 2+(5p^2+q^2-2pq)(g-1) for p < q, is the correct value and is what "
    "dim_sum reports"
)


def toledo(H: HiggsType) -> ToledoReport:
    """Toledo invariant, its bound tau_M = min(p,q)(2g-2), and flags."""
    tau = Fraction(2 * (H.q * H.a - H.p * H.b), H.total_rank)
    tau_M = min(H.p, H.q) * (2 * H.g - 2)
    return ToledoReport(
        tau=tau,
        tau_M=tau_M,
        within_bound=abs(tau) <= tau_M,
        saturated=abs(tau) == tau_M,
    )


def expected_dim(H: HiggsType) -> int:
    """Expected (smooth) moduli dimension 1 + (p+q)^2 (g-1)."""
    return 1 + H.total_rank ** 2 * (H.g - 1)


def vanishing_pattern(H: HiggsType) -> str:
    """Which Higgs component vanishes on the minima locus.

    gamma_zero iff a/p < b/q, beta_zero iff a/p > b/q, both_zero at the
    tie (equivalently tau = 0).
    """
    lhs = H.a * H.q
    rhs = H.b * H.p
    if lhs < rhs:
        return "gamma_zero"
    if lhs > rhs:
        return "beta_zero"
    return "both_zero"


def minima_triple_type(H: HiggsType) -> MinimaRealization:
    """Triple type whose (2g-2)-moduli realizes the Morse minima.

    For a/p <= b/q the minima are N_{2g-2}(p, q, a + p(2g-2), b); for
    a/p >= b/q they are N_{2g-2}(q, p, b + q(2g-2), a). At the tie both
    descriptions degenerate to the product of bundle moduli
    M(p, a) x M(q, b); the gamma_zero-form triple is reported there.
    """
    two = 2 * H.g - 2
    pattern = vanishing_pattern(H)
    if pattern == "gamma_zero":
        triple = TripleType(H.p, H.q, H.a + H.p * two, H.b)
        product = None
    elif pattern == "beta_zero":
        triple = TripleType(H.q, H.p, H.b + H.q * two, H.a)
        product = None
    else:
        triple = TripleType(H.p, H.q, H.a + H.p * two, H.b)
        product = ((H.p, H.a), (H.q, H.b))
    return MinimaRealization(
        case_tag=pattern,
        triple=triple,
        alpha=Fraction(two),
        product_factors=product,
    )


def mw_relations(H: HiggsType) -> MWReport:
    """Milnor-Wood bound restated through the minima triple's range.

    Always 2g-2 >= alpha_m, with equality iff tau = 0. For p != q the
    bound |tau| <= tau_M is equivalent to 2g-2 <= alpha_M, saturation to
    equality; for p = q it is equivalent to alpha_m >= 0, saturation to
    alpha_m = 0.
    """
    t = toledo(H)
    realization = minima_triple_type(H)
    Tm = realization.triple
    rng = alpha_range(Tm)
    alpha_m = rng.lo
    alpha_M = rng.hi
    two = 2 * H.g - 2

    def cmp_sym(x: Fraction, y: Fraction) -> str:
        if x < y:
            return "<"
        if x == y:
            return "="
        return ">"

    facts = [
        ("two_g_minus_2_ge_alpha_m", two >= alpha_m),
        ("alpha_m_equality_iff_tau_zero", (two == alpha_m) == (t.tau == 0)),
    ]
    alpha_M_vs: Optional[str] = None
    if H.p != H.q:
        assert alpha_M is not None
        alpha_M_vs = cmp_sym(Fraction(two), alpha_M)
        facts.append(
            ("within_bound_iff_2g2_le_alpha_M", t.within_bound == (two <= alpha_M))
        )
        facts.append(
            ("saturated_iff_2g2_eq_alpha_M", t.saturated == (two == alpha_M))
        )
    else:
        facts.append(
            ("within_bound_iff_alpha_m_nonneg", t.within_bound == (alpha_m >= 0))
        )
        facts.append(("saturated_iff_alpha_m_zero", t.saturated == (alpha_m == 0)))
    return MWReport(
        tau=t.tau,
        tau_M=t.tau_M,
        within_bound=t.within_bound,
        saturated=t.saturated,
        triple=Tm,
        alpha_m=alpha_m,
        alpha_M=alpha_M,
        two_g_minus_2=two,
        alpha_m_vs_2g2=cmp_sym(alpha_m, Fraction(two)),
        alpha_M_vs_2g2=alpha_M_vs,
        facts=tuple(facts),
    )


def coprime_smooth(H: HiggsType) -> bool:
    """gcd(p+q, a+b) = 1: no strictly semistable objects exist."""
    return math.gcd(H.total_rank, H.total_degree) == 1


def rigidity(H: HiggsType) -> RigidityReport:
    """Decomposition data at maximal Toledo invariant with p != q.

    Applies iff p != q and |tau| = tau_M. The U(min,min) factor keeps the
    sign of tau (its own Toledo invariant is saturated with the same
    sign); the leftover bundle absorbs the remaining rank and degree.
    When not applicable the factor fields are None and ``reason`` says
    why.
    """
    t = toledo(H)
    exp = expected_dim(H)
    if H.p == H.q or not t.saturated:
        reason = (
            "requires p != q" if H.p == H.q else "requires |tau| = tau_M"
        )
        return RigidityReport(
            applies=False,
            reason=reason,
            factor1=None,
            factor2_rank=None,
            factor2_degree=None,
            dim_sum=None,
            dim_sum_closed_form=None,
            expected_dim=exp,
            below_expected=None,
            warnings=(),
        )
    two = 2 * H.g - 2
    positive = t.tau > 0
    if H.p < H.q:
        if positive:
            f1 = HiggsType(H.p, H.p, H.a, H.a - H.p * two, H.g)
            f2 = (H.q - H.p, H.b - H.a + H.p * two)
        else:
            f1 = HiggsType(H.p, H.p, H.a, H.a + H.p * two, H.g)
            f2 = (H.q - H.p, H.b - H.a - H.p * two)
    else:
        if positive:
            f1 = HiggsType(H.q, H.q, H.b + H.q * two, H.b, H.g)
            f2 = (H.p - H.q, H.a - H.b - H.q * two)
        else:
            f1 = HiggsType(H.q, H.q, H.b - H.q * two, H.b, H.g)
            f2 = (H.p - H.q, H.a - H.b + H.q * two)
    m = min(H.p, H.q)
    dim_sum = expected_dim(f1) + (1 + f2[0] ** 2 * (H.g - 1))
    closed = 2 + (4 * m * m + (H.p - H.q) ** 2) * (H.g - 1)
    assert dim_sum == closed
    return RigidityReport(
        applies=True,
        reason=None,
        factor1=f1,
        factor2_rank=f2[0],
        factor2_degree=f2[1],
        dim_sum=dim_sum,
        dim_sum_closed_form=closed,
        expected_dim=exp,
        below_expected=dim_sum < exp,
        warnings=(RIGIDITY_DIM_WARNING,),
    )
