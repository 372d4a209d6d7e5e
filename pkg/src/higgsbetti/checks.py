"""Cross-cutting verification suite.

Every independent identity the computed polynomials must satisfy is bound
into an executable check.  Failures are data, not exceptions: a check
returns a :class:`CheckReport` with a serialized witness, so a full grid
always completes and reports every violation at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .algebra import LaurentPoly, VarContext
from . import plethystic
from .plethystic import collapsed_real_layout, generic_layout
from .rank2 import p_rank2
from .specialize import PIPELINE_FAST, PIPELINE_GENERIC, T_CTX, real_betti
from .symzeta import component_sum_series, real_sym_series, zeta_substitution_check
from .errors import NotDivisibleError

#: z-order used by the symmetric-product decomposition check
COMPONENT_SUM_ORDER = 10


@dataclass(frozen=True)
class CheckReport:
    """One verification outcome; failing reports carry a reproducible witness."""

    name: str
    params: Tuple[Tuple[str, int], ...]
    passed: bool
    witness: Optional[str] = None

    def sort_key(self):
        return (self.name, self.params)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params)
        return f"{status} {self.name} {params}"

    def as_dict(self) -> Dict:
        out = {"name": self.name, "params": dict(self.params), "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _witness(label_a: str, a: LaurentPoly, label_b: str, b: LaurentPoly) -> str:
    return f"{label_a}: {' | '.join(a.to_lines())}\n{label_b}: {' | '.join(b.to_lines())}"


_ONE_MINUS_T = LaurentPoly.from_dict(T_CTX, {(0,): 1, (1,): -1})


def divisibility_quotient(poly: LaurentPoly, g: int, b: int) -> LaurentPoly:
    """poly / (2^b (1-t)^g); raises NotDivisibleError when it does not divide."""
    p = poly
    for _ in range(g):
        p = p.exact_divide(_ONE_MINUS_T)
    return p.exact_divide(LaurentPoly.constant(T_CTX, 1 << b))


def check_divisibility(g: int, b: int, r: int, *, a_value=None) -> CheckReport:
    """The real Betti polynomial divides exactly by 2^b (1-t)^g with an
    integer-coefficient quotient (the average over connected components)."""
    params = (("g", g), ("b", b), ("r", r))
    result = real_betti(g, b, r, a_value=a_value)
    try:
        quotient = divisibility_quotient(result.poly, g, b)
    except NotDivisibleError as exc:
        rem = exc.remainder.to_lines() if exc.remainder is not None else "?"
        return CheckReport("divisibility", params, False, witness=f"remainder {rem}")
    if not quotient.coefficients_are_integers():
        return CheckReport(
            "divisibility", params, False,
            witness=f"non-integer quotient: {' | '.join(quotient.to_lines())}",
        )
    return CheckReport("divisibility", params, True)


def check_symmetry(g: int, r: int, *, a_value=None) -> CheckReport:
    """A_{g,r} is fixed by every alpha transposition and by alpha_i -> q/alpha_i."""
    params = (("g", g), ("r", r))
    a = a_value if a_value is not None else plethystic.a_poly_for(generic_layout(g), r)
    ctx = a.ctx
    for i in range(1, g + 1):
        image = a.substitute({f"a{i}": (1, {"q": 1, f"a{i}": -1})}, ctx)
        if image != a:
            return CheckReport(
                "symmetry", params, False,
                witness=_witness(f"a{i} -> q/a{i}", image, "original", a),
            )
    for i in range(1, g):
        image = a.substitute(
            {f"a{i}": (1, {f"a{i+1}": 1}), f"a{i+1}": (1, {f"a{i}": 1})}, ctx
        )
        if image != a:
            return CheckReport(
                "symmetry", params, False,
                witness=_witness(f"swap a{i} a{i+1}", image, "original", a),
            )
    return CheckReport("symmetry", params, True)


def check_degree(g: int, b: int, r: int, *, a_value=None) -> CheckReport:
    """deg_t of the real Betti polynomial is (2g-2) r^2 + 2."""
    params = (("g", g), ("b", b), ("r", r))
    result = real_betti(g, b, r, a_value=a_value)
    expected = (2 * g - 2) * r * r + 2
    actual = result.poly.degree("t")
    if actual != expected:
        return CheckReport(
            "degree", params, False, witness=f"expected {expected}, got {actual}"
        )
    return CheckReport("degree", params, True)


def check_rank2_closed_form(g: int, b: int, *, a_value=None) -> CheckReport:
    """The explicit rank-2 closed form agrees with the pipeline."""
    params = (("g", g), ("b", b))
    closed = p_rank2(g, b).poly
    pipeline = real_betti(g, b, 2, a_value=a_value).poly
    if closed != pipeline:
        return CheckReport(
            "rank2_closed_form", params, False,
            witness=_witness("closed form", closed, "pipeline", pipeline),
        )
    return CheckReport("rank2_closed_form", params, True)


def check_zeta_substitution(g: int, b: int) -> CheckReport:
    params = (("g", g), ("b", b))
    res = zeta_substitution_check(g, b)
    if res.ok:
        return CheckReport("zeta_substitution", params, True)
    return CheckReport(
        "zeta_substitution", params, False,
        witness=_witness("lhs", res.lhs, "rhs", res.rhs),
    )


def check_component_sum(g: int, b: int, order: int = COMPONENT_SUM_ORDER) -> CheckReport:
    params = (("g", g), ("b", b))
    closed = real_sym_series(g, b, order)
    decomposed = component_sum_series(g, b, order)
    for n in range(order + 1):
        if closed[n] != decomposed[n]:
            return CheckReport(
                "component_sum", params, False,
                witness=f"z^{n}: " + _witness("closed", closed[n], "sum", decomposed[n]),
            )
    return CheckReport("component_sum", params, True)


def check_pipeline_agreement(g: int, b: int, r: int, *, a_value=None) -> CheckReport:
    """Generic and alpha-collapsed pipelines produce identical polynomials."""
    params = (("g", g), ("b", b), ("r", r))
    generic = real_betti(g, b, r, pipeline=PIPELINE_GENERIC, a_value=a_value).poly
    fast = real_betti(g, b, r, pipeline=PIPELINE_FAST).poly
    if generic != fast:
        return CheckReport(
            "pipeline_agreement", params, False,
            witness=_witness("generic", generic, "fast", fast),
        )
    return CheckReport("pipeline_agreement", params, True)


def run_suite(
    max_g: int = 3,
    max_r: int = 3,
    *,
    a_provider: Optional[Callable[[int, int], LaurentPoly]] = None,
    progress: Optional[Callable[[CheckReport], None]] = None,
) -> List[CheckReport]:
    """Run every check over the grid 1 <= g <= max_g, 0 <= b <= g, 1 <= r <= max_r.

    ``a_provider(g, r)`` may supply cached generic polynomials (the CLI wires
    the on-disk cache through here).  Reports come back in a deterministic
    order, independent of how they were computed.
    """
    if max_g < 1 or max_r < 1:
        return []
    reports: List[CheckReport] = []

    def emit(report: CheckReport):
        reports.append(report)
        if progress is not None:
            progress(report)

    for g in range(1, max_g + 1):
        for r in range(1, max_r + 1):
            a = a_provider(g, r) if a_provider is not None else None
            emit(check_symmetry(g, r, a_value=a))
            for b in range(0, g + 1):
                emit(check_divisibility(g, b, r, a_value=a))
                emit(check_degree(g, b, r, a_value=a))
                emit(check_pipeline_agreement(g, b, r, a_value=a))
                if r == 2:
                    emit(check_rank2_closed_form(g, b, a_value=a))
        for b in range(0, g + 1):
            emit(check_zeta_substitution(g, b))
            emit(check_component_sum(g, b))
    reports.sort(key=CheckReport.sort_key)
    return reports
