"""Betti generating series of real symmetric products of a curve.

Closed rational forms are expanded as truncated power series in z with
coefficients in Z[t], by multiplying with the exact inverse series of each
denominator factor (never by floating point).  The module also checks, by
cross-multiplied polynomial identity, that substituting the real curve's
values into the formal zeta function reproduces the closed form; that
identity is what grounds the real Betti substitution upstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from .algebra import LaurentPoly, VarContext
from .errors import InvalidTopologyError

T_CTX = VarContext(("t",))
ZU_CTX = VarContext(("z", "u"))


def _t(exp: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.from_dict(T_CTX, {(exp,): coeff})


_T_ONE = _t(0)


@dataclass(frozen=True)
class ZSeries:
    """Truncated series in z; coefficient n is a polynomial in t."""

    coeffs: Tuple[LaurentPoly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeffs[n]

    def __eq__(self, other):
        return isinstance(other, ZSeries) and self.coeffs == other.coeffs


def _mul_trunc(a: List[LaurentPoly], b: List[LaurentPoly], order: int) -> List[LaurentPoly]:
    out = []
    for n in range(order + 1):
        acc = LaurentPoly.zero(T_CTX)
        for j in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
            acc = acc + a[j] * b[n - j]
        out.append(acc)
    return out


def _inverse_trunc(den: List[LaurentPoly], order: int) -> List[LaurentPoly]:
    """Inverse of a z-series with constant coefficient 1."""
    assert den and den[0] == _T_ONE
    inv = [_T_ONE]
    for n in range(1, order + 1):
        acc = LaurentPoly.zero(T_CTX)
        for j in range(1, min(n, len(den) - 1) + 1):
            acc = acc + den[j] * inv[n - j]
        inv.append(-acc)
    return inv


def _binomial_series(coeff0: LaurentPoly, coeff1: LaurentPoly, power: int, order: int) -> List[LaurentPoly]:
    """(coeff0 + coeff1 * z)^power as a truncated z-series."""
    out = [coeff0 ** power if power else _T_ONE]
    for m in range(1, order + 1):
        if m > power:
            out.append(LaurentPoly.zero(T_CTX))
        else:
            out.append((coeff0 ** (power - m)) * (coeff1**m) * comb(power, m))
    return out


def sym_nonorientable_series(gp: int, order: int) -> ZSeries:
    """Signed Betti series of symmetric powers of the non-orientable surface N_gp.

    Closed form (1 - t z)^(gp+1) / ((1 - z)(1 - t^2 z)).  gp = -1 is allowed
    as a formal degenerate case; it is needed by the component decomposition
    when every circle carries a point.
    """
    if gp < -1:
        raise ValueError("the surface index must be >= -1")
    if order < 0:
        raise ValueError("order must be >= 0")
    num = _binomial_series(_T_ONE, _t(1, -1), gp + 1, order)
    inv1 = _inverse_trunc([_T_ONE, -_T_ONE], order)           # 1/(1-z)
    inv2 = _inverse_trunc([_T_ONE, _t(2, -1)], order)         # 1/(1-t^2 z)
    out = _mul_trunc(_mul_trunc(num, inv1, order), inv2, order)
    return ZSeries(tuple(out))


def real_sym_series(g: int, b: int, order: int) -> ZSeries:
    """Signed Betti series of real symmetric products, non-empty real locus.

    Closed form (1 - t z^2)^(g-b) (1 + z)^b (1 - t z)^b / ((1 - z)(1 + t z)).
    """
    _validate_gb(g, b)
    if order < 0:
        raise ValueError("order must be >= 0")
    num = [_T_ONE]
    # (1 - t z^2)^(g-b): a series in z^2
    sq = [LaurentPoly.zero(T_CTX)] * (order + 1)
    for m in range(0, order // 2 + 1):
        if m <= g - b:
            sq[2 * m] = _t(m, (-1) ** m * comb(g - b, m))
    num = _mul_trunc(num, sq, order)
    num = _mul_trunc(num, _binomial_series(_T_ONE, _T_ONE, b, order), order)
    num = _mul_trunc(num, _binomial_series(_T_ONE, _t(1, -1), b, order), order)
    inv1 = _inverse_trunc([_T_ONE, -_T_ONE], order)           # 1/(1-z)
    inv2 = _inverse_trunc([_T_ONE, _t(1)], order)             # 1/(1+t z)
    out = _mul_trunc(_mul_trunc(num, inv1, order), inv2, order)
    return ZSeries(tuple(out))


def component_sum_series(g: int, b: int, order: int) -> ZSeries:
    """The same series assembled from its connected components.

    Coefficient n sums, over k + 2s = n, the binomial(b+1, k) components
    homeomorphic to a k-fold circle factor times Sym^s of the surface
    N_(g-k), each contributing (1-t)^k times that symmetric-power polynomial.
    """
    _validate_gb(g, b)
    if order < 0:
        raise ValueError("order must be >= 0")
    a = b + 1
    one_minus_t = _t(0) + _t(1, -1)
    sym = {
        k: sym_nonorientable_series(g - k, order // 2) for k in range(0, min(a, order) + 1)
    }
    out = []
    for n in range(order + 1):
        acc = LaurentPoly.zero(T_CTX)
        for k in range(min(a, n) + 1):
            if (n - k) % 2:
                continue
            s = (n - k) // 2
            acc = acc + (one_minus_t**k) * sym[k][s] * comb(a, k)
        out.append(acc)
    return ZSeries(tuple(out))


def empty_locus_series(g: int, order: int) -> ZSeries:
    """Real symmetric-product series when the real locus is empty.

    Closed form (1 - t z^2)^(g+1) / ((1 - z^2)(1 - t^2 z^2)): odd
    coefficients vanish (an odd divisor has no real residue-free matching).
    """
    if g < 0:
        raise ValueError("genus must be >= 0")
    if order < 0:
        raise ValueError("order must be >= 0")
    half = sym_nonorientable_series(g, order // 2)
    out = []
    for n in range(order + 1):
        out.append(half[n // 2] if n % 2 == 0 else LaurentPoly.zero(T_CTX))
    return ZSeries(tuple(out))


def _validate_gb(g: int, b: int) -> None:
    if g < 0:
        raise InvalidTopologyError("genus must be >= 0")
    if b < 0 or b > g:
        raise InvalidTopologyError(f"b = {b} outside 0..g = {g}")


@dataclass(frozen=True)
class ZetaCheckResult:
    """Outcome of the zeta substitution identity, with witnesses on failure."""

    g: int
    b: int
    ok: bool
    lhs: Optional[LaurentPoly] = None
    rhs: Optional[LaurentPoly] = None


def zeta_substitution_check(g: int, b: int) -> ZetaCheckResult:
    """Cross-multiplied identity between the substituted formal zeta function
    and the closed real symmetric-product form, exact in z and u = t^(1/2).

    Substituting q = -u^2 and the alpha values -u (g-b times) and -1
    (b times) into

        prod (1 - alpha z)(1 - alpha^-1 q z) / ((1 - z)(1 - q z))

    must equal (1 - u^2 z^2)^(g-b) (1 + z)^b (1 - u^2 z)^b / ((1 - z)(1 + u^2 z)).
    Both sides are compared after cross multiplication, with no rational
    function canonicalization anywhere.
    """
    _validate_gb(g, b)
    ctx = ZU_CTX

    def p(pairs) -> LaurentPoly:
        return LaurentPoly.from_dict(ctx, pairs)

    one = p({(0, 0): 1})
    # substituted zeta numerator: (1 + u z)^(g-b) (1 - u z)^(g-b) (1 + z)^b (1 - u^2 z)^b
    lhs_num = (
        p({(0, 0): 1, (1, 1): 1}) ** (g - b)
        * p({(0, 0): 1, (1, 1): -1}) ** (g - b)
        * p({(0, 0): 1, (1, 0): 1}) ** b
        * p({(0, 0): 1, (1, 2): -1}) ** b
    )
    lhs_den = p({(0, 0): 1, (1, 0): -1}) * p({(0, 0): 1, (1, 2): 1})
    # closed form: (1 - u^2 z^2)^(g-b) (1 + z)^b (1 - u^2 z)^b / ((1 - z)(1 + u^2 z))
    rhs_num = (
        p({(0, 0): 1, (2, 2): -1}) ** (g - b)
        * p({(0, 0): 1, (1, 0): 1}) ** b
        * p({(0, 0): 1, (1, 2): -1}) ** b
    )
    rhs_den = lhs_den
    left = lhs_num * rhs_den
    right = rhs_num * lhs_den
    if left == right:
        return ZetaCheckResult(g, b, True)
    return ZetaCheckResult(g, b, False, left, right)
