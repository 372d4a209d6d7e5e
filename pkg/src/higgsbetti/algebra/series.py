"""Truncated formal power series in the auxiliary variable T.

Coefficients are :class:`FactoredRational` values; all arithmetic truncates
at the series order R.  The ordinary logarithm and exponential use the
derivative recurrences

    n L_n = n U_n - sum_{j<n} j L_j U_{n-j}        (L = log U, U_0 = 1)
    n E_n = sum_{j<=n} j S_j E_{n-j}               (E = exp S, S_0 = 0)

so no series powers are ever formed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Sequence

from ..errors import ConstantTermNotOneError
from .factored import FactoredRational, fr_sum_or_zero
from .poly import LaurentPoly, VarContext


class TSeries:
    """Power series in T, truncated at order R, coefficients FactoredRational."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[FactoredRational]):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = list(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ctx(self) -> VarContext:
        return self.coeffs[0].ctx

    def __getitem__(self, n: int) -> FactoredRational:
        return self.coeffs[n]

    @classmethod
    def one(cls, ctx: VarContext, order: int) -> "TSeries":
        return cls([FactoredRational.one(ctx)] + [FactoredRational.zero(ctx)] * order)

    @classmethod
    def zero(cls, ctx: VarContext, order: int) -> "TSeries":
        return cls([FactoredRational.zero(ctx)] * (order + 1))

    def __mul__(self, other: "TSeries") -> "TSeries":
        order = min(self.order, other.order)
        ctx = self.ctx
        out = []
        for n in range(order + 1):
            out.append(
                fr_sum_or_zero(
                    [self.coeffs[j] * other.coeffs[n - j] for j in range(n + 1)], ctx
                )
            )
        return TSeries(out)

    def __add__(self, other: "TSeries") -> "TSeries":
        order = min(self.order, other.order)
        return TSeries(
            [self.coeffs[n] + other.coeffs[n] for n in range(order + 1)]
        )

    def __sub__(self, other: "TSeries") -> "TSeries":
        order = min(self.order, other.order)
        return TSeries(
            [self.coeffs[n] - other.coeffs[n] for n in range(order + 1)]
        )

    def map(self, fn: Callable[[FactoredRational], FactoredRational]) -> "TSeries":
        return TSeries([fn(c) for c in self.coeffs])

    def log(self) -> "TSeries":
        """Ordinary formal logarithm; the constant coefficient must be 1."""
        if not self.coeffs[0].is_one():
            raise ConstantTermNotOneError("series log needs constant term 1")
        ctx = self.ctx
        R = self.order
        L: List[FactoredRational] = [FactoredRational.zero(ctx)]
        for n in range(1, R + 1):
            parts = [self.coeffs[n] * n]
            parts.extend(L[j] * self.coeffs[n - j] * (-j) for j in range(1, n))
            L.append(fr_sum_or_zero(parts, ctx) * Fraction(1, n))
        return TSeries(L)

    def exp(self) -> "TSeries":
        """Ordinary formal exponential; the constant coefficient must be 0."""
        if not self.coeffs[0].is_zero():
            raise ConstantTermNotOneError("series exp needs constant term 0")
        ctx = self.ctx
        R = self.order
        E: List[FactoredRational] = [FactoredRational.one(ctx)]
        for n in range(1, R + 1):
            parts = [self.coeffs[j] * E[n - j] * j for j in range(1, n + 1)]
            E.append(fr_sum_or_zero(parts, ctx) * Fraction(1, n))
        return TSeries(E)


def series_log(s: TSeries) -> TSeries:
    """Spec-level name for :meth:`TSeries.log`."""
    return s.log()


def series_exp(s: TSeries) -> TSeries:
    """Spec-level name for :meth:`TSeries.exp`."""
    return s.exp()
