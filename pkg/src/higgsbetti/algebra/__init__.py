"""Exact arithmetic foundation: Laurent polynomials, factored rationals, series."""

from .factored import (
    BinomialFactor,
    FactoredRational,
    fr_sum,
    fr_sum_or_zero,
    multiset_add,
    multiset_diff,
    multiset_union,
    rational_normalize,
)
from .poly import (
    Coeff,
    LaurentPoly,
    VarContext,
    exact_divide,
    poly_add,
    poly_mul,
    substitute_powers,
)
from .series import TSeries, series_exp, series_log

__all__ = [
    "BinomialFactor",
    "Coeff",
    "FactoredRational",
    "LaurentPoly",
    "TSeries",
    "VarContext",
    "exact_divide",
    "fr_sum",
    "fr_sum_or_zero",
    "multiset_add",
    "multiset_diff",
    "multiset_union",
    "poly_add",
    "poly_mul",
    "rational_normalize",
    "series_exp",
    "series_log",
    "substitute_powers",
]
