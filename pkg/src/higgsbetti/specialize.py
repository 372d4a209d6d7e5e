"""Variable substitutions turning A_{g,r} into Betti polynomials.

Real case: q -> -t, the first g-b alpha slots -> -t^(1/2), the rest -> -1,
then multiply by (-t)^((g-1)r^2+1).  Half powers of t never appear as
fractional exponents: the substitution is tracked through u = t^(1/2), each
monomial lands on the u-exponent 2*e_q + sum of half-slot exponents, and the
surviving exponents are asserted even before dividing by two.

Complex case: q -> t^2, every alpha slot -> t, times t^(2(g-1)r^2+2).

Two permanent pipelines compute the same real polynomial and serve as
mutual oracles: the generic one substitutes into A_{g,r} with g separate
alpha variables; the fast one collapses the alpha slots to at most two
shared lanes before the plethystic machinery runs (a coefficient-1 variable
identification, the only kind of early substitution that commutes with the
Adams operations) and substitutes values at the very end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .algebra import FactoredRational, LaurentPoly, TSeries, VarContext
from .errors import (
    InvalidTopologyError,
    NotDivisibleError,
    NotPolynomialError,
    OddUPowerError,
)
from . import plethystic
from .plethystic import (
    AlphaLayout,
    collapsed_complex_layout,
    collapsed_real_layout,
    generic_layout,
)

T_CTX = VarContext(("t",))

PIPELINE_GENERIC = "generic"
PIPELINE_FAST = "fast-specialized"
PIPELINE_RANK2 = "rank2-closed"

FIELD_REAL = "real"
FIELD_COMPLEX = "complex"


@dataclass(frozen=True)
class CurveTopology:
    """Genus plus real locus: b means b+1 circles, None means empty real locus."""

    g: int
    b: Optional[int]

    def __post_init__(self):
        if self.g < 0:
            raise InvalidTopologyError(f"genus {self.g} is negative")
        if self.b is not None:
            if self.b < 0:
                raise InvalidTopologyError(f"b = {self.b} is negative")
            if self.b > self.g:
                raise InvalidTopologyError(
                    f"b = {self.b} exceeds the genus {self.g}: a genus-g real curve "
                    f"has at most g+1 real circles"
                )


@dataclass(frozen=True)
class BettiResult:
    """A computed signed Poincare polynomial with its provenance."""

    curve: CurveTopology
    r: int
    d: Optional[int]
    poly: LaurentPoly  # in t
    field_case: str
    pipeline: str

    def degree(self) -> int:
        return self.poly.degree("t")


#: documentation alias: polynomials following the sign convention
#: sum_k (-1)^k t^k dim H^k_cpt
SignedPoincare = LaurentPoly


def _validate_real(g: int, b: int, r: int) -> CurveTopology:
    if g < 1:
        raise InvalidTopologyError("the pipeline needs genus g >= 1")
    if r < 1:
        raise InvalidTopologyError("rank must be >= 1")
    return CurveTopology(g, b)


def _real_substitute(
    a: LaurentPoly, half_lanes: Tuple[str, ...], one_lanes: Tuple[str, ...], n: int
) -> LaurentPoly:
    """Evaluate t^n * A(-1/t, -1/sqrt(t), ..., -1, ...) as a polynomial in t.

    This is the ordinary-cohomology normalization of the real Betti
    polynomial: the Poincare dual (coefficient reversal in degree n) of the
    compactly supported one, and the form the published rank-2 example
    values take.  Half powers of t ride on u = t^(1/2): a monomial
    c q^e alpha^v contributes sign (-1)^(e + sum v) at u-exponent
    2n - 2e - (half-lane part of v).  Only even, non-negative u-exponents
    may survive the sum.
    """
    ctx = a.ctx
    qi = ctx.index["q"]
    half = [ctx.index[i] for i in half_lanes]
    ones = [ctx.index[i] for i in one_lanes]
    acc: Dict[int, int] = {}
    for exps, c in a.items():
        e_q = exps[qi]
        s_half = sum(exps[i] for i in half)
        s_all = s_half + sum(exps[i] for i in ones)
        u_exp = 2 * n - 2 * e_q - s_half
        if (e_q + s_all) & 1:
            c = -c
        acc[u_exp] = acc.get(u_exp, 0) + c
    terms = {}
    for u_exp, c in acc.items():
        if not c:
            continue
        if u_exp & 1:
            raise OddUPowerError(f"odd power u^{u_exp} survived the real substitution")
        if u_exp < 0:
            raise OddUPowerError(f"negative power u^{u_exp} survived the real substitution")
        terms[(u_exp // 2,)] = c
    return LaurentPoly.from_dict(T_CTX, terms)


def _divisibility_post_check(poly: LaurentPoly, g: int, b: int) -> None:
    """Theorem-backed post-check: the result is divisible by 2^b (1-t)^g."""
    one_minus_t = LaurentPoly.from_dict(T_CTX, {(0,): 1, (1,): -1})
    p = poly
    try:
        for _ in range(g):
            p = p.exact_divide(one_minus_t)
    except NotDivisibleError as exc:
        raise NotPolynomialError(f"result not divisible by (1-t)^{g}") from exc
    if any(c % (1 << b) for c in p.terms.values()):
        raise NotPolynomialError(f"quotient by (1-t)^{g} not divisible by 2^{b}")


def real_betti(
    g: int,
    b: int,
    r: int,
    *,
    pipeline: str = PIPELINE_GENERIC,
    d: Optional[int] = None,
    a_value: Optional[LaurentPoly] = None,
) -> BettiResult:
    """Signed Z/2 Betti polynomial of the real moduli space, degree (2g-2)r^2+2.

    The polynomial is t^n A(-1/t, -1/sqrt(t) x (g-b), -1 x b) with
    n = (2g-2)r^2+2: the ordinary-cohomology normalization, whose lowest
    term sits at t^m, m = (g-1)r^2+1, with coefficient (-1)^m times the
    number of connected components.  ``a_value`` lets callers supply a
    cached polynomial: the generic A_{g,r} for the generic pipeline, the
    collapsed z=1 polynomial for the fast one.
    """
    curve = _validate_real(g, b, r)
    n = (2 * g - 2) * r * r + 2
    if pipeline == PIPELINE_GENERIC:
        layout = generic_layout(g)
        a = a_value if a_value is not None else plethystic.a_poly_for(layout, r)
        half = tuple(f"a{i}" for i in range(1, g - b + 1))
        ones = tuple(f"a{i}" for i in range(g - b + 1, g + 1))
    elif pipeline == PIPELINE_FAST:
        layout = collapsed_real_layout(g, b)
        a = a_value if a_value is not None else plethystic.a_poly_for(layout, r)
        half = ("v",) if g - b > 0 else ()
        ones = ("w",) if b > 0 else ()
    else:
        raise ValueError(f"unknown pipeline {pipeline!r}")
    poly = _real_substitute(a, half, ones, n)
    _divisibility_post_check(poly, g, b)
    return BettiResult(curve, r, d, poly, FIELD_REAL, pipeline)


def complex_betti(
    g: int,
    r: int,
    *,
    d: Optional[int] = None,
    a_value: Optional[LaurentPoly] = None,
) -> BettiResult:
    """Signed rational Betti polynomial of the complex moduli space."""
    if g < 1:
        raise InvalidTopologyError("the pipeline needs genus g >= 1")
    if r < 1:
        raise InvalidTopologyError("rank must be >= 1")
    layout = generic_layout(g)
    a = a_value if a_value is not None else plethystic.a_poly_for(layout, r)
    ctx = a.ctx
    qi = ctx.index["q"]
    shift = 2 * (g - 1) * r * r + 2
    acc: Dict[int, int] = {}
    for exps, c in a.items():
        t_exp = 2 * exps[qi] + sum(exps[i] for i in range(len(exps)) if i != qi) + shift
        acc[t_exp] = acc.get(t_exp, 0) + c
    terms = {}
    for t_exp, c in acc.items():
        if not c:
            continue
        if t_exp < 0:
            raise OddUPowerError(f"negative power t^{t_exp} in the complex substitution")
        terms[(t_exp,)] = c
    poly = LaurentPoly.from_dict(T_CTX, terms)
    return BettiResult(CurveTopology(g, None), r, d, poly, FIELD_COMPLEX, PIPELINE_GENERIC)


def complex_betti_collapsed(g: int, r: int) -> BettiResult:
    """Complex Betti polynomial recomputed through the collapsed single-lane
    pipeline; exists as an independent code path for cross-checking."""
    if g < 1 or r < 1:
        raise InvalidTopologyError("need g >= 1 and r >= 1")
    layout = collapsed_complex_layout(g)
    a = plethystic.a_poly_for(layout, r)
    ctx = a.ctx
    qi, ci = ctx.index["q"], ctx.index["c"]
    shift = 2 * (g - 1) * r * r + 2
    acc: Dict[int, int] = {}
    for exps, c in a.items():
        t_exp = 2 * exps[qi] + exps[ci] + shift
        acc[t_exp] = acc.get(t_exp, 0) + c
    terms = {(e,): c for e, c in acc.items() if c}
    poly = LaurentPoly.from_dict(T_CTX, terms)
    return BettiResult(CurveTopology(g, None), r, None, poly, FIELD_COMPLEX, PIPELINE_FAST)


def specialize_alpha_early(g: int, b: int, order: int) -> TSeries:
    """Run the whole pipeline with collapsed alpha lanes; T^r holds H_r.

    The coefficients come back denominator-free (normalization already
    happened); substituting u-values into them reproduces real_betti.
    """
    _validate_real(g, b, 1)
    if order < 1:
        raise ValueError("order must be >= 1")
    layout = collapsed_real_layout(g, b)
    hs = plethystic.h_series_for(layout, order)
    ctx = layout.ctx
    coeffs = [FactoredRational.zero(ctx)]
    for r in range(1, order + 1):
        coeffs.append(FactoredRational(hs[r]))
    return TSeries(coeffs)
