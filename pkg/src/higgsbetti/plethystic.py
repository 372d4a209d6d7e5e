"""Hook products, their generating series, and the plethystic logarithm.

For a genus g the pipeline builds, degree by degree in the bookkeeping
variable T, the series

    Omega(T) = sum over Young diagrams mu of T^|mu| * Hook(mu)

where Hook(mu) is a product over boxes of mu of two-term factors in q, z and
the alpha variables (arm and leg statistics fix the exponents).  Applying
the plethystic logarithm and the prefactor (z-1)(1-q) produces, for every
rank r, a two-variable refinement ``H_{g,r}``: a Laurent polynomial in q, z,
alpha_1 .. alpha_g.  That the denominators cancel completely is a theorem;
:func:`h_poly` asserts it.  Evaluating at z = 1 yields ``A_{g,r}``, the
polynomial all Betti specializations start from.

The plethystic logarithm convention used throughout:

    Log U = sum_{k >= 1} (mobius(k)/k) * psi_k(log U)

with the Adams operation psi_k raising every variable (and T) to its k-th
power.  The convention is pinned down by Log(1/(1-T)) = T, which the test
suite checks.

Alpha variables can be collapsed: an :class:`AlphaLayout` assigns the g
conceptual alpha slots to named variable lanes with multiplicities.  The
generic layout uses g separate lanes; the specialized layouts share one lane
per eventual substitution value, which shrinks every intermediate object.
Collapsing is a plain variable identification (coefficient-1 monomial
substitution), so it commutes with psi_k; substituting actual values does
not, and happens only after normalization.

In-memory memoization is per process and not thread-safe; parallel callers
should use separate processes (results are deterministic either way).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (
    BinomialFactor,
    FactoredRational,
    LaurentPoly,
    TSeries,
    VarContext,
    fr_sum,
    fr_sum_or_zero,
)
from .errors import ConstantTermNotOneError, NotPolynomialError
from .partitions import Partition, enumerate_partitions


# ----------------------------------------------------------------------
# number-theory helpers for the Moebius sum
# ----------------------------------------------------------------------

def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> List[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


# ----------------------------------------------------------------------
# alpha layouts
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AlphaLayout:
    """Assignment of the g alpha slots to variable lanes.

    ``lanes`` lists (variable name, multiplicity); multiplicities sum to g.
    """

    genus: int
    lanes: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be >= 1")
        if sum(m for _, m in self.lanes) != self.genus:
            raise ValueError("lane multiplicities must sum to the genus")

    @property
    def ctx(self) -> VarContext:
        return VarContext(("q", "z") + tuple(name for name, _ in self.lanes))

    @property
    def z_free_ctx(self) -> VarContext:
        return VarContext(("q",) + tuple(name for name, _ in self.lanes))

    @property
    def key(self) -> Tuple:
        return (self.genus, self.lanes)


def generic_layout(g: int) -> AlphaLayout:
    return AlphaLayout(g, tuple((f"a{i}", 1) for i in range(1, g + 1)))


def collapsed_real_layout(g: int, b: int) -> AlphaLayout:
    """One lane v for the g-b slots headed to -t^(1/2), one lane w for the -1 slots."""
    lanes = []
    if g - b > 0:
        lanes.append(("v", g - b))
    if b > 0:
        lanes.append(("w", b))
    return AlphaLayout(g, tuple(lanes))


def collapsed_complex_layout(g: int) -> AlphaLayout:
    """A single lane c: all alpha slots receive the same value t."""
    return AlphaLayout(g, (("c", g),))


# ----------------------------------------------------------------------
# hook products and the generating series
# ----------------------------------------------------------------------

def hook_term_for(mu: Partition, layout: AlphaLayout) -> FactoredRational:
    """The rational function attached to a Young diagram.

    Product over boxes (arm a, leg l) of

        prod over alpha lanes of (z^(a+1) - alpha q^l)^m (z^a - alpha^-1 q^(l+1))^m
        -----------------------------------------------------------------------
                        (z^(a+1) - q^l) (z^a - q^(l+1))

    The empty diagram gives 1.
    """
    ctx = layout.ctx
    qi, zi = ctx.index["q"], ctx.index["z"]
    num = LaurentPoly.one(ctx)
    den: Dict[BinomialFactor, int] = {}
    scale = Fraction(1)

    def mono(q_exp: int, z_exp: int, lane: Optional[int] = None, lane_exp: int = 0):
        exps = [0] * ctx.n
        exps[qi] = q_exp
        exps[zi] = z_exp
        if lane is not None:
            exps[lane] = lane_exp
        return tuple(exps)

    for box in mu.boxes():
        a, l = mu.arm_leg(box)
        for name, mult in layout.lanes:
            lane = ctx.index[name]
            f1 = LaurentPoly.from_dict(
                ctx, {mono(0, a + 1): 1, mono(l, 0, lane, 1): -1}
            )
            f2 = LaurentPoly.from_dict(
                ctx, {mono(0, a): 1, mono(l + 1, 0, lane, -1): -1}
            )
            num = num * f1**mult * f2**mult
        for dpoly in (
            LaurentPoly.from_dict(ctx, {mono(0, a + 1): 1, mono(l, 0): -1}),
            LaurentPoly.from_dict(ctx, {mono(0, a): 1, mono(l + 1, 0): -1}),
        ):
            factor, s = BinomialFactor.canonical(dpoly)
            den[factor] = den.get(factor, 0) + 1
            scale /= s
    return FactoredRational(num, den, scale)


def hook_term(mu: Partition, g: int) -> FactoredRational:
    """Hook product in the generic layout (g separate alpha variables)."""
    return hook_term_for(mu, generic_layout(g))


def omega_series_for(layout: AlphaLayout, order: int) -> TSeries:
    """T-series whose degree-n coefficient sums the hook products over |mu| = n."""
    if order < 0:
        raise ValueError("order must be >= 0")
    ctx = layout.ctx
    coeffs = [FactoredRational.one(ctx)]
    for n in range(1, order + 1):
        coeffs.append(
            fr_sum([hook_term_for(mu, layout) for mu in enumerate_partitions(n)])
        )
    return TSeries(coeffs)


def omega_series(g: int, order: int) -> TSeries:
    return omega_series_for(generic_layout(g), order)


# ----------------------------------------------------------------------
# plethystic logarithm / exponential
# ----------------------------------------------------------------------

def pleth_log(s: TSeries) -> TSeries:
    """Plethystic logarithm: Moebius-weighted Adams images of the ordinary log."""
    if not s.coeffs[0].is_one():
        raise ConstantTermNotOneError("plethystic log needs constant term 1")
    L = s.log()
    ctx = s.ctx
    out = [FactoredRational.zero(ctx)]
    for n in range(1, s.order + 1):
        parts = []
        for k in divisors(n):
            m = mobius(k)
            if m:
                parts.append(L[n // k].substitute_powers(k) * Fraction(m, k))
        out.append(fr_sum_or_zero(parts, ctx))
    return TSeries(out)


def pleth_exp(s: TSeries) -> TSeries:
    """Plethystic exponential (inverse of pleth_log); constant term must be 0."""
    if not s.coeffs[0].is_zero():
        raise ConstantTermNotOneError("plethystic exp needs constant term 0")
    ctx = s.ctx
    R = s.order
    acc: List[List[FactoredRational]] = [[] for _ in range(R + 1)]
    for k in range(1, R + 1):
        inv_k = Fraction(1, k)
        for n in range(1, R // k + 1):
            if not s.coeffs[n].is_zero():
                acc[k * n].append(s.coeffs[n].substitute_powers(k) * inv_k)
    summed = TSeries([fr_sum_or_zero(parts, ctx) for parts in acc])
    return summed.exp()


# ----------------------------------------------------------------------
# the invariant polynomials
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class HPoly:
    """Normalized T^r coefficient: Laurent polynomial in q, z and the alpha lanes."""

    value: LaurentPoly
    genus: int
    rank: int


@dataclass(frozen=True)
class APoly:
    """HPoly at z = 1: Laurent polynomial in q and the alpha lanes."""

    value: LaurentPoly
    genus: int
    rank: int


_H_MEMO: Dict[Tuple, LaurentPoly] = {}
_A_MEMO: Dict[Tuple, LaurentPoly] = {}


def _prefactor_cancel(f: FactoredRational, factor_poly: LaurentPoly) -> FactoredRational:
    """Multiply by a binomial, preferring to cancel a denominator factor."""
    factor, s = BinomialFactor.canonical(factor_poly)
    if f.den.get(factor, 0) > 0:
        den = dict(f.den)
        den[factor] -= 1
        if not den[factor]:
            del den[factor]
        return FactoredRational(f.num, den, f.scale * s)
    return FactoredRational(f.num * factor_poly, dict(f.den), f.scale)


def h_series_for(layout: AlphaLayout, order: int) -> List[Optional[LaurentPoly]]:
    """Normalized coefficients H_1 .. H_order for the given layout.

    Entry r is the T^r coefficient of (z-1)(1-q) Log Omega, cancelled down
    to an honest Laurent polynomial.  Entry 0 is None.
    """
    memo_hit = all(
        (layout.key, r) in _H_MEMO for r in range(1, order + 1)
    )
    if memo_hit:
        return [None] + [_H_MEMO[(layout.key, r)] for r in range(1, order + 1)]

    ctx = layout.ctx
    qi, zi = ctx.index["q"], ctx.index["z"]

    def mono(q_exp: int, z_exp: int):
        exps = [0] * ctx.n
        exps[qi] = q_exp
        exps[zi] = z_exp
        return tuple(exps)

    z_minus_1 = LaurentPoly.from_dict(ctx, {mono(0, 1): 1, mono(0, 0): -1})
    one_minus_q = LaurentPoly.from_dict(ctx, {mono(0, 0): 1, mono(1, 0): -1})

    omega = omega_series_for(layout, order)
    log_coeffs = pleth_log(omega)
    out: List[Optional[LaurentPoly]] = [None]
    for r in range(1, order + 1):
        f = log_coeffs[r]
        f = _prefactor_cancel(f, z_minus_1)
        f = _prefactor_cancel(f, one_minus_q)
        h = f.normalize()
        if not h.coefficients_are_integers():
            raise NotPolynomialError(f"H_{layout.genus},{r} has non-integer coefficients")
        h = h.map_coefficients(int)
        if h.valuation("q") < 0 or h.valuation("z") < 0:
            raise NotPolynomialError(f"H_{layout.genus},{r} has negative q or z exponents")
        _H_MEMO[(layout.key, r)] = h
        out.append(h)
    return out


def h_poly_for(layout: AlphaLayout, r: int) -> LaurentPoly:
    if r < 1:
        raise ValueError("rank must be >= 1")
    hit = _H_MEMO.get((layout.key, r))
    if hit is not None:
        return hit
    return h_series_for(layout, r)[r]


def h_poly(g: int, r: int) -> HPoly:
    """The rank-r coefficient for genus g, generic alpha variables."""
    return HPoly(h_poly_for(generic_layout(g), r), g, r)


def a_poly_for(layout: AlphaLayout, r: int) -> LaurentPoly:
    key = (layout.key, r)
    hit = _A_MEMO.get(key)
    if hit is not None:
        return hit
    h = h_poly_for(layout, r)
    a = h.substitute({"z": (1, {})}, layout.z_free_ctx)
    _A_MEMO[key] = a
    return a


def a_poly(g: int, r: int) -> APoly:
    """h_poly at z = 1 (legal: the z-dependence is polynomial)."""
    return APoly(a_poly_for(generic_layout(g), r), g, r)


def clear_memo():
    """Drop the in-process memo (used by tests)."""
    _H_MEMO.clear()
    _A_MEMO.clear()
