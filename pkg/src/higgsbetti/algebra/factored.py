"""Rational functions kept as numerator / multiset-of-binomial-factors.

The hook-product pipeline only ever divides by two-term polynomials (the
hook denominators ``z^(a+1) - q^l`` and ``z^a - q^(l+1)`` and their Adams
images), so no general rational-function arithmetic is needed: a value is

    scale * num / product(factors)

with ``scale`` a rational number, ``num`` an integer-coefficient
:class:`LaurentPoly` and the denominator a multiset of canonical
:class:`BinomialFactor` objects.  The representation is not canonical --
two different triples may be equal as rational functions -- and cancellation
is lazy: it happens only in :meth:`FactoredRational.normalize`, by repeated
exact division.  Keeping the rational ``scale`` outside the polynomial lets
every polynomial operation run on plain integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from ..errors import ArityMismatchError, NotDivisibleError, NotPolynomialError
from .poly import Coeff, LaurentPoly, VarContext


class BinomialFactor:
    """A canonical two-term Laurent polynomial used as a denominator factor.

    Canonical form: integer coefficients with gcd 1 and a positive leading
    (lexicographically largest) coefficient.  Construction returns the factor
    together with the rational scalar that was pulled out, so callers can
    fold it into a FactoredRational scale.
    """

    __slots__ = ("poly", "_key")

    def __init__(self, poly: LaurentPoly):
        if len(poly.terms) != 2:
            raise ValueError("a binomial factor needs exactly two terms")
        self.poly = poly
        (ka, ca), (kb, cb) = sorted(poly.terms.items(), reverse=True)
        self._key = (poly.ctx.names, ka, ca, kb, cb)

    @classmethod
    def canonical(cls, poly: LaurentPoly) -> Tuple["BinomialFactor", Fraction]:
        """Split ``poly`` into unit-content factor and scalar: poly = s * f."""
        if len(poly.terms) != 2:
            raise ValueError("a binomial factor needs exactly two terms")
        (ka, ca), (kb, cb) = sorted(poly.terms.items(), reverse=True)
        ca = Fraction(ca) if not isinstance(ca, int) else ca
        cb = Fraction(cb) if not isinstance(cb, int) else cb
        if isinstance(ca, int) and isinstance(cb, int):
            s = Fraction(gcd(ca, cb))
        else:
            fa, fb = Fraction(ca), Fraction(cb)
            s = Fraction(gcd(fa.numerator, fb.numerator), (fa.denominator * fb.denominator) // gcd(fa.denominator, fb.denominator))
        if ca < 0:
            s = -s
        na = int(ca / s)
        nb = int(cb / s)
        factor = cls(LaurentPoly(poly.ctx, {ka: na, kb: nb}, poly._bound))
        return factor, s

    @property
    def ctx(self) -> VarContext:
        return self.poly.ctx

    def substitute_powers(self, k: int) -> "BinomialFactor":
        return BinomialFactor(self.poly.substitute_powers(k))

    def __eq__(self, other):
        return isinstance(other, BinomialFactor) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"BinomialFactor({self.poly.pretty()})"


#: multiset of factors: factor -> positive multiplicity
FactorMultiset = Dict[BinomialFactor, int]


def multiset_union(a: FactorMultiset, b: FactorMultiset) -> FactorMultiset:
    """Lcm-like union: per-factor maximum of multiplicities."""
    out = dict(a)
    for f, m in b.items():
        if out.get(f, 0) < m:
            out[f] = m
    return out


def multiset_add(a: FactorMultiset, b: FactorMultiset) -> FactorMultiset:
    """Product of denominators: multiplicities add."""
    out = dict(a)
    for f, m in b.items():
        out[f] = out.get(f, 0) + m
    return out


def multiset_diff(a: FactorMultiset, b: FactorMultiset) -> FactorMultiset:
    """a - b, assuming b is contained in a."""
    out = {}
    for f, m in a.items():
        d = m - b.get(f, 0)
        if d < 0:
            raise ValueError("multiset difference would be negative")
        if d:
            out[f] = d
    return out


def _gcd_fraction(a: Fraction, b: Fraction) -> Fraction:
    """Positive generator of the fractional ideal (a, b): both a/g and b/g are integers."""
    if a == 0:
        return abs(b)
    if b == 0:
        return abs(a)
    return Fraction(
        gcd(a.numerator, b.numerator),
        (a.denominator * b.denominator) // gcd(a.denominator, b.denominator),
    )


class FactoredRational:
    """scale * num / product of binomial factors, with lazy cancellation."""

    __slots__ = ("scale", "num", "den")

    def __init__(self, num: LaurentPoly, den: Optional[FactorMultiset] = None,
                 scale: Coeff = 1):
        self.num = num
        self.den = den or {}
        self.scale = Fraction(scale) if num else Fraction(1)
        if not num:
            self.den = {}

    # -- constructors ----------------------------------------------------

    @classmethod
    def one(cls, ctx: VarContext) -> "FactoredRational":
        return cls(LaurentPoly.one(ctx))

    @classmethod
    def zero(cls, ctx: VarContext) -> "FactoredRational":
        return cls(LaurentPoly.zero(ctx))

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "FactoredRational":
        return cls(p)

    # -- queries ----------------------------------------------------------

    @property
    def ctx(self) -> VarContext:
        return self.num.ctx

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        if self.den:
            return self.normalize_or_none() == LaurentPoly.one(self.ctx)
        if self.scale == 1:
            return self.num.is_one()
        return len(self.num.terms) == 1 and self.scale * self.num.terms.get(self.ctx.kb, 0) == 1

    def den_poly(self) -> LaurentPoly:
        """Expanded denominator (test/diagnostic helper)."""
        out = LaurentPoly.one(self.ctx)
        for f, m in self.den.items():
            for _ in range(m):
                out = out * f.poly
        return out

    # -- arithmetic -------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return FactoredRational.zero(self.ctx)
            return FactoredRational(self.num, dict(self.den), self.scale * other)
        if isinstance(other, LaurentPoly):
            return FactoredRational(self.num * other, dict(self.den), self.scale)
        if self.ctx is not other.ctx:
            raise ArityMismatchError("factored rationals from different contexts")
        if self.is_zero() or other.is_zero():
            return FactoredRational.zero(self.ctx)
        return FactoredRational(
            self.num * other.num,
            multiset_add(self.den, other.den),
            self.scale * other.scale,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return FactoredRational(self.num, dict(self.den), -self.scale)

    def __add__(self, other):
        return fr_sum([self, other])

    def __sub__(self, other):
        return fr_sum([self, -other])

    def substitute_powers(self, k: int) -> "FactoredRational":
        """Adams operation, applied to numerator and factors independently."""
        if k == 1:
            return self
        return FactoredRational(
            self.num.substitute_powers(k),
            {f.substitute_powers(k): m for f, m in self.den.items()},
            self.scale,
        )

    # -- cancellation -----------------------------------------------------

    def normalize(self) -> LaurentPoly:
        """Cancel every denominator factor by exact division.

        Returns the resulting Laurent polynomial (with the scale folded in);
        raises NotPolynomialError when some factor does not divide.
        """
        p = self.num
        if p.is_zero():
            return p
        for f, m in self.den.items():
            for _ in range(m):
                try:
                    p = p.exact_divide(f.poly)
                except NotDivisibleError as exc:
                    raise NotPolynomialError(
                        f"denominator factor {f.poly.pretty()} does not divide: {exc}"
                    ) from exc
        if self.scale != 1:
            s = self.scale
            if s.denominator == 1:
                p = p * s.numerator
            else:
                p = p.map_coefficients(lambda c: Fraction(c) * s)
                if p.coefficients_are_integers():
                    p = p.map_coefficients(lambda c: int(c))
        return p

    def normalize_or_none(self) -> Optional[LaurentPoly]:
        try:
            return self.normalize()
        except NotPolynomialError:
            return None

    def cross_equal(self, other: "FactoredRational") -> bool:
        """Equality as rational functions via cross multiplication (no canonical forms)."""
        left = self.num * other.den_poly() * self.scale
        right = other.num * self.den_poly() * other.scale
        return left == right


def fr_sum(values: Sequence[FactoredRational]) -> FactoredRational:
    """Sum over a common denominator (per-factor max multiplicity).

    Scales are recombined so the summed numerator keeps integer
    coefficients: the common scale is the fraction-gcd of the input scales.
    """
    values = [v for v in values if not v.is_zero()]
    if not values:
        raise ValueError("empty sum needs an explicit context")
    ctx = values[0].ctx
    for v in values[1:]:
        if v.ctx is not ctx:
            raise ArityMismatchError("factored rationals from different contexts")
    if len(values) == 1:
        return values[0]
    den: FactorMultiset = {}
    for v in values:
        den = multiset_union(den, v.den)
    scale = Fraction(0)
    for v in values:
        scale = _gcd_fraction(scale, v.scale)
    total = LaurentPoly.zero(ctx)
    for v in values:
        part = v.num
        for f, m in multiset_diff(den, v.den).items():
            for _ in range(m):
                part = part * f.poly
        mult = v.scale / scale
        if mult != 1:
            assert mult.denominator == 1
            part = part * mult.numerator
        total = total + part
    if total.is_zero():
        return FactoredRational.zero(ctx)
    return FactoredRational(total, den, scale)


def fr_sum_or_zero(values: Sequence[FactoredRational], ctx: VarContext) -> FactoredRational:
    values = [v for v in values if not v.is_zero()]
    if not values:
        return FactoredRational.zero(ctx)
    return fr_sum(values)


def rational_normalize(f: FactoredRational) -> LaurentPoly:
    """Spec-level name for :meth:`FactoredRational.normalize`."""
    return f.normalize()
