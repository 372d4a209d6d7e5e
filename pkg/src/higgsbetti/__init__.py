"""Exact Betti polynomials of moduli spaces of stable Higgs bundles.

Computes the signed, compactly supported Poincare polynomials of the moduli
space of stable rank-r, degree-d Higgs bundles over a curve of genus g: with
Z/2 coefficients for a real curve whose real locus is a union of b+1
circles, and with rational coefficients over the complex numbers.  The
engine is exact throughout: sparse Laurent polynomials over arbitrary
precision rationals, a plethystic-logarithm pipeline, and specializations.
"""

from .algebra import (
    BinomialFactor,
    FactoredRational,
    LaurentPoly,
    TSeries,
    VarContext,
    exact_divide,
    poly_add,
    poly_mul,
    rational_normalize,
    series_exp,
    series_log,
    substitute_powers,
)
from .partitions import Partition, arm_leg, enumerate_partitions
from .plethystic import (
    APoly,
    HPoly,
    a_poly,
    h_poly,
    hook_term,
    omega_series,
    pleth_exp,
    pleth_log,
)
from .specialize import (
    BettiResult,
    CurveTopology,
    complex_betti,
    real_betti,
    specialize_alpha_early,
)
from .rank2 import RankTwoForm, f_rank2, p_rank2
from .symzeta import (
    ZSeries,
    component_sum_series,
    empty_locus_series,
    real_sym_series,
    sym_nonorientable_series,
    zeta_substitution_check,
)
from .checks import CheckReport, run_suite
from .version import ENGINE_VERSION

__version__ = "0.1.0"

__all__ = [
    "APoly",
    "BettiResult",
    "BinomialFactor",
    "CheckReport",
    "CurveTopology",
    "ENGINE_VERSION",
    "FactoredRational",
    "HPoly",
    "LaurentPoly",
    "Partition",
    "RankTwoForm",
    "TSeries",
    "VarContext",
    "ZSeries",
    "a_poly",
    "arm_leg",
    "complex_betti",
    "component_sum_series",
    "empty_locus_series",
    "enumerate_partitions",
    "exact_divide",
    "f_rank2",
    "h_poly",
    "hook_term",
    "omega_series",
    "p_rank2",
    "pleth_exp",
    "pleth_log",
    "poly_add",
    "poly_mul",
    "rational_normalize",
    "real_betti",
    "real_sym_series",
    "run_suite",
    "series_exp",
    "series_log",
    "specialize_alpha_early",
    "substitute_powers",
    "sym_nonorientable_series",
    "zeta_substitution_check",
]
