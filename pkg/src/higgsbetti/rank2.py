"""Explicit rank-2 closed form, an independent oracle for the full pipeline.

The rank-2 real Betti polynomial equals

    2^b * t^(4(g-1)+1) * (1-t)^g * f(t^(1/2), 1)

where f(t^(1/2), z) is an explicit four-term rational function.  Each term
has poles at z = 1 or z = -1 which cancel in the sum; evaluation therefore
combines the four terms over a common denominator, divides the numerator
exactly by (z - 1) once per denominator factor vanishing at z = 1, and only
then substitutes z = 1.  Failure of any of these exact divisions means the
transcription is wrong and raises PoleAtOneError.

Half powers of t are carried by u = t^(1/2), as everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .algebra import (
    BinomialFactor,
    FactoredRational,
    LaurentPoly,
    VarContext,
    fr_sum,
)
from .errors import (
    InvalidTopologyError,
    NotDivisibleError,
    OddUPowerError,
    PoleAtOneError,
)
from .specialize import (
    FIELD_REAL,
    PIPELINE_RANK2,
    BettiResult,
    CurveTopology,
    T_CTX,
)

ZU_CTX = VarContext(("z", "u"))
U_CTX = VarContext(("u",))


def _zu(pairs) -> LaurentPoly:
    return LaurentPoly.from_dict(ZU_CTX, pairs)


def _factor(pairs) -> Tuple[BinomialFactor, Fraction]:
    return BinomialFactor.canonical(_zu(pairs))


@dataclass(frozen=True)
class RankTwoForm:
    """The four summands of f(t^(1/2), z), kept as factored rationals in z, u."""

    g: int
    b: int
    terms: Tuple[FactoredRational, ...]


def f_rank2(g: int, b: int) -> RankTwoForm:
    """Transcription of the four-term closed form, with t = u^2."""
    if g < 1:
        raise InvalidTopologyError("rank-2 closed form needs g >= 1")
    if b < 0 or b > g:
        raise InvalidTopologyError(f"b = {b} outside 0..g = {g}")
    gb = g - b

    def term(num_factors: List[Tuple[LaurentPoly, int]], den_polys, scale) -> FactoredRational:
        num = LaurentPoly.one(ZU_CTX)
        for poly, power in num_factors:
            num = num * poly**power
        den = {}
        s = Fraction(scale)
        for dpoly in den_polys:
            factor, fs = BinomialFactor.canonical(dpoly)
            den[factor] = den.get(factor, 0) + 1
            s /= fs
        return FactoredRational(num, den, s)

    # (z^2 + u)^(g-b) (z - u)^(g-b) (z^2 + 1)^b (z - u^2)^b / ((z^2 - 1)(z + u^2))
    t1 = term(
        [
            (_zu({(2, 0): 1, (0, 1): 1}), gb),
            (_zu({(1, 0): 1, (0, 1): -1}), gb),
            (_zu({(2, 0): 1, (0, 0): 1}), b),
            (_zu({(1, 0): 1, (0, 2): -1}), b),
        ],
        [_zu({(2, 0): 1, (0, 0): -1}), _zu({(1, 0): 1, (0, 2): 1})],
        1,
    )
    # (z - u^3)^(g-b) (1 + u^3)^(g-b) (z - u^2)^b (1 + u^4)^b / ((z + u^2)(1 - u^4))
    t2 = term(
        [
            (_zu({(1, 0): 1, (0, 3): -1}), gb),
            (_zu({(0, 0): 1, (0, 3): 1}), gb),
            (_zu({(1, 0): 1, (0, 2): -1}), b),
            (_zu({(0, 0): 1, (0, 4): 1}), b),
        ],
        [_zu({(1, 0): 1, (0, 2): 1}), _zu({(0, 0): 1, (0, 4): -1})],
        1,
    )
    # -(z + u)^(g-b) (1 - u)^(g-b) (z + 1)^b (1 - u^2)^b / (2 (z - 1)(1 + u^2))
    t3 = term(
        [
            (_zu({(1, 0): 1, (0, 1): 1}), gb),
            (_zu({(0, 0): 1, (0, 1): -1}), gb),
            (_zu({(1, 0): 1, (0, 0): 1}), b),
            (_zu({(0, 0): 1, (0, 2): -1}), b),
        ],
        [_zu({(1, 0): 1, (0, 0): -1}), _zu({(0, 0): 1, (0, 2): 1})],
        Fraction(-1, 2),
    )
    # -(z - u)^(g-b) (1 + u)^(g-b) (z - 1)^b (1 + u^2)^b / (2 (z + 1)(1 - u^2))
    t4 = term(
        [
            (_zu({(1, 0): 1, (0, 1): -1}), gb),
            (_zu({(0, 0): 1, (0, 1): 1}), gb),
            (_zu({(1, 0): 1, (0, 0): -1}), b),
            (_zu({(0, 0): 1, (0, 2): 1}), b),
        ],
        [_zu({(1, 0): 1, (0, 0): 1}), _zu({(0, 0): 1, (0, 2): -1})],
        Fraction(-1, 2),
    )
    return RankTwoForm(g, b, (t1, t2, t3, t4))


def _evaluate_at_z1(f: FactoredRational) -> FactoredRational:
    """Evaluate a z,u factored rational at z = 1, cancelling its z = 1 poles.

    Every denominator factor vanishing at z = 1 has valuation exactly one
    there (two-term factors cannot vanish doubly), so the numerator must be
    exactly divisible by (z - 1) once per vanishing factor.
    """
    z_minus_1 = _zu({(1, 0): 1, (0, 0): -1})
    vanishing = []
    surviving = []
    for factor, mult in f.den.items():
        at_one = factor.poly.substitute({"z": (1, {})}, U_CTX)
        if at_one.is_zero():
            vanishing.extend([factor] * mult)
        else:
            surviving.extend([(factor, at_one)] * mult)
    num = f.num
    try:
        for _ in vanishing:
            num = num.exact_divide(z_minus_1)
    except NotDivisibleError as exc:
        raise PoleAtOneError(
            "the z = 1 poles of the rank-2 form failed to cancel"
        ) from exc
    scale = f.scale
    den = {}
    num_u = num.substitute({"z": (1, {})}, U_CTX)
    for factor in vanishing:
        # the cofactor (factor / (z-1)) at z = 1 is a constant times a
        # u-monomial; fold it into the scale and a monomial shift
        cof = factor.poly.exact_divide(z_minus_1).substitute({"z": (1, {})}, U_CTX)
        if len(cof.terms) != 1:
            raise PoleAtOneError("unexpected cofactor shape at z = 1")
        (exps, c), = cof.items()
        scale /= c
        if exps[0]:
            num_u = num_u * LaurentPoly.monomial(U_CTX, (-exps[0],))
    for factor, at_one in surviving:
        if len(at_one.terms) == 1:
            (exps, c), = at_one.items()
            scale /= c
            if exps[0]:
                num_u = num_u * LaurentPoly.monomial(U_CTX, (-exps[0],))
        else:
            bf, s = BinomialFactor.canonical(at_one)
            den[bf] = den.get(bf, 0) + 1
            scale /= s
    return FactoredRational(num_u, den, scale)


def p_rank2(g: int, b: int, *, d=None) -> BettiResult:
    """Rank-2 real Betti polynomial straight from the closed form.

    Assembles 2^b t^(4(g-1)+1) (1-t)^g f(t^(1/2), 1) and converts it to the
    ordinary-cohomology normalization used across the package (coefficient
    reversal in degree m+n = 12g-9 and a global sign; the raw assembly is
    minus the compactly supported polynomial).
    """
    form = f_rank2(g, b)
    combined = fr_sum(list(form.terms))
    at_one = _evaluate_at_z1(combined)
    value = at_one.normalize()
    # prefactor 2^b t^(4(g-1)+1) (1-t)^g with t = u^2
    one_minus_t = LaurentPoly.from_dict(U_CTX, {(0,): 1, (2,): -1})
    value = value * one_minus_t**g * (1 << b)
    shift = 8 * (g - 1) + 2
    value = value * LaurentPoly.monomial(U_CTX, (shift,))
    reversal_degree = 12 * g - 9
    terms = {}
    for (e,), c in value.items():
        if e & 1:
            raise OddUPowerError(f"odd power u^{e} in the rank-2 evaluation")
        if e < 0:
            raise OddUPowerError(f"negative power u^{e} in the rank-2 evaluation")
        terms[(reversal_degree - e // 2,)] = c
    poly = LaurentPoly.from_dict(T_CTX, terms)
    return BettiResult(CurveTopology(g, b), 2, d, poly, FIELD_REAL, PIPELINE_RANK2)
