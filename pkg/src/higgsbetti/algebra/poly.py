"""Sparse exact Laurent polynomials over the rationals.

A polynomial lives in a :class:`VarContext` (an ordered tuple of variable
names) and stores a map from monomials to nonzero coefficients.  Monomial
exponent vectors are packed into a single Python integer, one 16-bit biased
lane per variable, most significant lane first:

    key = sum over i of (exp_i + 2^15) << (16 * (n - 1 - i))

Packing makes the hot operations branch-free integer arithmetic: monomials
multiply by adding keys (and subtracting the constant bias term), divide by
subtracting them, and the numeric order of keys is exactly the lexicographic
order on exponent vectors.  Coefficients are Python ints in the computational
pipeline; ``fractions.Fraction`` values are accepted anywhere and mix freely
(rational scalars are normally carried outside the polynomial by
:class:`~higgsbetti.algebra.factored.FactoredRational`).

Exponents may be negative (Laurent).  The pipeline keeps q, z, u exponents
non-negative; only the alpha variables genuinely use negative exponents.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from ..errors import (
    ArityMismatchError,
    ExponentOverflowError,
    NotDivisibleError,
)

Coeff = Union[int, Fraction]
Exponents = Tuple[int, ...]

_LANE_BITS = 16
_LANE_BIAS = 1 << 15
_LANE_MASK = (1 << _LANE_BITS) - 1

#: largest |exponent| accepted when building a polynomial from tuples
_ENCODE_LIMIT = (1 << 13) - 1
#: largest |exponent| a stored monomial may reach through arithmetic
_SAFE_LIMIT = (1 << 15) - 1
#: (bound_p + bound_d) limit under which integer chain grouping in binomial
#: division provably cannot alias distinct chains (see _divide_binomial)
_FAST_DIV_LIMIT = 480
_FAST_DIV_DIVISOR_LIMIT = 32


class VarContext:
    """An ordered, interned set of variable names.

    Contexts are interned so that identity comparison is enough to detect
    arity mismatches cheaply on every operation.
    """

    __slots__ = ("names", "n", "shifts", "kb", "index")
    _interned: dict = {}

    def __new__(cls, names: Sequence[str]):
        names = tuple(names)
        hit = cls._interned.get(names)
        if hit is not None:
            return hit
        self = object.__new__(cls)
        self.names = names
        self.n = len(names)
        # names[0] occupies the most significant lane: packed-key order is
        # lexicographic order with names[0] dominant
        self.shifts = tuple(_LANE_BITS * (self.n - 1 - i) for i in range(self.n))
        self.kb = sum(_LANE_BIAS << s for s in self.shifts)
        self.index = {name: i for i, name in enumerate(names)}
        cls._interned[names] = self
        return self

    def encode(self, exps: Sequence[int]) -> int:
        if len(exps) != self.n:
            raise ArityMismatchError(
                f"expected {self.n} exponents for {self.names}, got {len(exps)}"
            )
        key = 0
        for e, s in zip(exps, self.shifts):
            if not -_ENCODE_LIMIT <= e <= _ENCODE_LIMIT:
                raise ExponentOverflowError(f"exponent {e} out of range")
            key |= (e + _LANE_BIAS) << s
        return key

    def decode(self, key: int) -> Exponents:
        return tuple(((key >> s) & _LANE_MASK) - _LANE_BIAS for s in self.shifts)

    def __repr__(self):
        return f"VarContext{self.names}"


def _as_coeff(value) -> Coeff:
    if isinstance(value, (int, Fraction)):
        return value
    raise TypeError(f"coefficient must be int or Fraction, not {type(value).__name__}")


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial.

    ``terms`` maps packed monomial keys to nonzero coefficients.  ``_bound``
    is a conservative upper bound on the absolute value of any stored
    exponent; it is propagated through arithmetic so overflow of the packed
    lanes can be ruled out without decoding.
    """

    __slots__ = ("ctx", "terms", "_bound")

    def __init__(self, ctx: VarContext, terms: dict, bound: int):
        self.ctx = ctx
        self.terms = terms
        self._bound = bound

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def from_dict(cls, ctx: VarContext, coeffs: Mapping[Sequence[int], Coeff]) -> "LaurentPoly":
        """Build from a mapping of exponent tuples to coefficients."""
        terms = {}
        bound = 0
        for exps, c in coeffs.items():
            c = _as_coeff(c)
            if c == 0:
                continue
            key = ctx.encode(exps)
            if key in terms:
                c = terms[key] + c
                if c == 0:
                    del terms[key]
                    continue
            terms[key] = c
            m = max(abs(e) for e in exps) if exps else 0
            if m > bound:
                bound = m
        return cls(ctx, terms, bound)

    @classmethod
    def zero(cls, ctx: VarContext) -> "LaurentPoly":
        return cls(ctx, {}, 0)

    @classmethod
    def constant(cls, ctx: VarContext, c: Coeff) -> "LaurentPoly":
        c = _as_coeff(c)
        if c == 0:
            return cls.zero(ctx)
        return cls(ctx, {ctx.kb: c}, 0)

    @classmethod
    def one(cls, ctx: VarContext) -> "LaurentPoly":
        return cls.constant(ctx, 1)

    @classmethod
    def monomial(cls, ctx: VarContext, exps: Sequence[int], c: Coeff = 1) -> "LaurentPoly":
        return cls.from_dict(ctx, {tuple(exps): c})

    @classmethod
    def variable(cls, ctx: VarContext, name: str, power: int = 1) -> "LaurentPoly":
        exps = [0] * ctx.n
        exps[ctx.index[name]] = power
        return cls.monomial(ctx, exps)

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(self.ctx.kb) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ctx.kb in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> Iterator[Tuple[Exponents, Coeff]]:
        decode = self.ctx.decode
        for key, c in self.terms.items():
            yield decode(key), c

    def sorted_terms(self) -> list:
        """Terms in canonical order: descending lexicographic on exponents."""
        decode = self.ctx.decode
        return [(decode(key), self.terms[key]) for key in sorted(self.terms, reverse=True)]

    def coefficient(self, exps: Sequence[int]) -> Coeff:
        return self.terms.get(self.ctx.encode(exps), 0)

    def degree(self, name: str) -> int:
        """Largest exponent of ``name``; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        s = self.ctx.shifts[self.ctx.index[name]]
        return max((k >> s) & _LANE_MASK for k in self.terms) - _LANE_BIAS

    def valuation(self, name: str) -> int:
        """Smallest exponent of ``name``; 0 for the zero polynomial."""
        if not self.terms:
            return 0
        s = self.ctx.shifts[self.ctx.index[name]]
        return min((k >> s) & _LANE_MASK for k in self.terms) - _LANE_BIAS

    def exponent_bound(self) -> int:
        """Exact max |exponent| over all stored monomials (tightens _bound)."""
        if not self.terms:
            self._bound = 0
            return 0
        decode = self.ctx.decode
        m = 0
        for key in self.terms:
            for e in decode(key):
                if e > m:
                    m = e
                elif -e > m:
                    m = -e
        self._bound = m
        return m

    def content(self) -> int:
        """Positive gcd of all (integer) coefficients; 0 for the zero polynomial."""
        g = 0
        for c in self.terms.values():
            if not isinstance(c, int):
                raise TypeError("content is defined for integer-coefficient polynomials")
            g = gcd(g, c)
            if g == 1:
                return 1
        return g

    def coefficients_are_integers(self) -> bool:
        return all(isinstance(c, int) or c.denominator == 1 for c in self.terms.values())

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _check_ctx(self, other: "LaurentPoly"):
        if self.ctx is not other.ctx:
            raise ArityMismatchError(f"contexts differ: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.ctx, other)
        self._check_ctx(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return LaurentPoly(self.ctx, out, max(self._bound, other._bound))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ctx, {k: -c for k, c in self.terms.items()}, self._bound)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.ctx, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_coeff(other)
            if other == 0:
                return LaurentPoly.zero(self.ctx)
            if other == 1:
                return self
            return LaurentPoly(
                self.ctx, {k: c * other for k, c in self.terms.items()}, self._bound
            )
        self._check_ctx(other)
        if not self.terms or not other.terms:
            return LaurentPoly.zero(self.ctx)
        bound = self._bound + other._bound
        if bound > _SAFE_LIMIT:
            # conservative estimate tripped: recompute exactly, then retry
            bound = self.exponent_bound() + other.exponent_bound()
            if bound > _SAFE_LIMIT:
                raise ExponentOverflowError(
                    f"product exponents may reach {bound}, beyond the packed range"
                )
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        kb = self.ctx.kb
        out = {}
        if len(a) <= 2:
            # very common case: multiplying by a binomial or monomial
            for ka, ca in a.items():
                shift = ka - kb
                if not out:
                    for k2, c2 in b.items():
                        out[k2 + shift] = ca * c2
                else:
                    get = out.get
                    for k2, c2 in b.items():
                        k = k2 + shift
                        v = get(k)
                        out[k] = ca * c2 if v is None else v + ca * c2
        else:
            get = out.get
            for ka, ca in a.items():
                shift = ka - kb
                for k2, c2 in b.items():
                    k = k2 + shift
                    v = get(k)
                    out[k] = ca * c2 if v is None else v + ca * c2
        if len(a) > 1:
            out = {k: v for k, v in out.items() if v}
        return LaurentPoly(self.ctx, out, bound)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = LaurentPoly.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed and n:
                base = base * base
        return result

    def map_coefficients(self, fn) -> "LaurentPoly":
        out = {}
        for k, c in self.terms.items():
            v = _as_coeff(fn(c))
            if v:
                out[k] = v
        return LaurentPoly(self.ctx, out, self._bound)

    # ------------------------------------------------------------------
    # power substitution (Adams operation)
    # ------------------------------------------------------------------

    def substitute_powers(self, k: int) -> "LaurentPoly":
        """Replace every variable v by v**k (exponent vectors scaled by k)."""
        if not isinstance(k, int) or k < 1:
            raise ValueError("power substitution requires k >= 1")
        if k == 1 or not self.terms:
            return self
        bound = self._bound * k
        if bound > _SAFE_LIMIT:
            bound = self.exponent_bound() * k
            if bound > _SAFE_LIMIT:
                raise ExponentOverflowError(f"exponents would reach {bound} under psi_{k}")
        kb_shift = (k - 1) * self.ctx.kb
        out = {key * k - kb_shift: c for key, c in self.terms.items()}
        return LaurentPoly(self.ctx, out, bound)

    # ------------------------------------------------------------------
    # monomial substitution / context change
    # ------------------------------------------------------------------

    def substitute(
        self,
        assignments: Mapping[str, Tuple[int, Mapping[str, int]]],
        target: VarContext,
    ) -> "LaurentPoly":
        """Substitute signed monomials for variables and land in ``target``.

        ``assignments`` maps a source variable name to ``(sign, monomial)``
        where ``sign`` is +1 or -1 and ``monomial`` maps target variable
        names to exponents.  Source variables without an assignment keep
        their name, which must then exist in the target context.  The empty
        monomial substitutes a constant (+1 or -1).
        """
        src = self.ctx
        # per source variable: (sign, exponent row on the target context)
        rows = []
        for i, name in enumerate(src.names):
            if name in assignments:
                sign, mono = assignments[name]
                if sign not in (1, -1):
                    raise ValueError("substitution sign must be +1 or -1")
                row = [0] * target.n
                for tname, e in mono.items():
                    row[target.index[tname]] = e
            else:
                sign = 1
                row = [0] * target.n
                row[target.index[name]] = 1
            rows.append((sign, tuple(row)))
        out: dict = {}
        get = out.get
        decode = src.decode
        encode = target.encode
        for key, c in self.terms.items():
            exps = decode(key)
            acc = [0] * target.n
            neg = False
            for e, (sign, row) in zip(exps, rows):
                if e == 0:
                    continue
                if sign < 0 and e & 1:
                    neg = not neg
                for j, r in enumerate(row):
                    if r:
                        acc[j] += e * r
            tkey = encode(acc)
            v = (-c if neg else c)
            old = get(tkey)
            if old is None:
                out[tkey] = v
            else:
                old = old + v
                if old:
                    out[tkey] = old
                else:
                    del out[tkey]
        bound = max((max(abs(e) for e in target.decode(k)) for k in out), default=0) if target.n else 0
        return LaurentPoly(target, out, bound)

    def evaluate(self, values: Mapping[str, Coeff]) -> Coeff:
        """Evaluate at a rational point; every variable needs a value."""
        missing = [n for n in self.ctx.names if n not in values]
        if missing:
            raise ValueError(f"no value for {missing}")
        total: Coeff = 0
        for exps, c in self.items():
            term = Fraction(c) if not isinstance(c, int) else c
            for e, name in zip(exps, self.ctx.names):
                if e == 0:
                    continue
                v = values[name]
                term = term * (Fraction(v) ** e if e < 0 or not isinstance(v, int) else v**e)
            total += term
        return total

    # ------------------------------------------------------------------
    # exact division
    # ------------------------------------------------------------------

    def exact_divide(self, d: "LaurentPoly") -> "LaurentPoly":
        """Return q with q * d == self, or raise NotDivisibleError.

        Dispatches on the shape of the divisor: monomials divide termwise,
        two-term divisors use a linear-time chain walk, anything larger
        falls back to ordinary lexicographic multivariate division.
        """
        self._check_ctx(d)
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LaurentPoly.zero(self.ctx)
        bound = self._bound + d._bound
        if bound > _SAFE_LIMIT:
            bound = self.exponent_bound() + d.exponent_bound()
            if bound > _SAFE_LIMIT:
                raise ExponentOverflowError("quotient exponents beyond the packed range")
        if len(d.terms) == 1:
            return self._divide_monomial(d, bound)
        if len(d.terms) == 2:
            return self._divide_binomial(d, bound)
        return self._divide_general(d, bound)

    def _divide_monomial(self, d: "LaurentPoly", bound: int) -> "LaurentPoly":
        (kd, cd), = d.terms.items()
        shift = kd - self.ctx.kb
        out = {}
        for k, c in self.terms.items():
            if isinstance(c, int) and isinstance(cd, int):
                q, r = divmod(c, cd)
                if r:
                    raise NotDivisibleError(
                        "coefficient not divisible by monomial divisor", remainder=self
                    )
            else:
                q = Fraction(c) / cd
            out[k - shift] = q
        return LaurentPoly(self.ctx, out, bound)

    def _divide_binomial(self, d: "LaurentPoly", bound: int) -> "LaurentPoly":
        ctx = self.ctx
        kb = ctx.kb
        (k1, c1), (k2, c2) = sorted(d.terms.items(), reverse=True)
        step = k1 - k2  # positive: walking down a chain subtracts step
        e1 = ctx.decode(k1)
        e2 = ctx.decode(k2)
        pivot = next(i for i in range(ctx.n) if e1[i] != e2[i])
        delta = e1[pivot] - e2[pivot]  # > 0 because k1 > k2 lexicographically
        shift = ctx.shifts[pivot]

        unit = c1 == 1 or c1 == -1
        # group the dividend's monomials into chains e, e - step, e - 2*step, ...
        # chain index j = (biased pivot lane) // delta; rep = key - j*step is a
        # chain invariant.  Integer grouping is provably alias-free only for
        # small exponents; otherwise group by exact exponent tuples.
        d_bound = d._bound if d._bound <= _FAST_DIV_DIVISOR_LIMIT else d.exponent_bound()
        fast = bound <= _FAST_DIV_LIMIT and d_bound <= _FAST_DIV_DIVISOR_LIMIT
        groups: dict = {}
        if fast:
            for key in self.terms:
                j = (((key >> shift) & _LANE_MASK) // delta)
                rep = key - j * step
                bucket = groups.get(rep)
                if bucket is None:
                    groups[rep] = [(j, key)]
                else:
                    bucket.append((j, key))
        else:
            dvec = tuple(a - b for a, b in zip(e1, e2))
            decode = ctx.decode
            for key in self.terms:
                exps = decode(key)
                j = exps[pivot] // delta
                rep = tuple(e - j * dv for e, dv in zip(exps, dvec))
                bucket = groups.get(rep)
                if bucket is None:
                    groups[rep] = [(j, key)]
                else:
                    bucket.append((j, key))

        out = {}
        terms = self.terms
        residual = {}
        for bucket in groups.values():
            bucket.sort(reverse=True)
            carry: Coeff = 0
            prev_j = 0
            u = 0
            for j, key in bucket:
                if carry:
                    # propagate the carry through chain positions with no
                    # dividend term (their quotient coefficients are forced)
                    for _ in range(prev_j - j - 1):
                        u -= step
                        if unit:
                            carry = -c2 * carry if c1 == 1 else c2 * carry
                        else:
                            carry = Fraction(-c2 * carry, 1) / c1
                        if not carry:
                            break
                        out[u] = carry
                num = terms[key] - c2 * carry
                u = key - k1 + kb
                if num:
                    if unit:
                        q = num if c1 == 1 else -num
                    else:
                        if isinstance(num, int) and isinstance(c1, int):
                            q, r = divmod(num, c1)
                            if r:
                                q = Fraction(num, c1)
                        else:
                            q = Fraction(num) / c1
                    out[u] = q
                    carry = q
                else:
                    carry = 0
                prev_j = j
            if carry:
                # trailing product term that nothing in the dividend cancels
                residual[u + k2 - kb] = -c2 * carry
        if residual:
            rem = LaurentPoly(ctx, residual, bound)
            raise NotDivisibleError("binomial division left a remainder", remainder=rem)
        return LaurentPoly(ctx, out, bound)

    def _divide_general(self, d: "LaurentPoly", bound: int) -> "LaurentPoly":
        import heapq

        ctx = self.ctx
        kb = ctx.kb
        # shift both operands into the non-negative cone so that ordinary
        # polynomial lex division applies (exactness is unaffected)
        def cone_shift(p: "LaurentPoly") -> Tuple[dict, int]:
            mins = [min(((k >> s) & _LANE_MASK) for k in p.terms) for s in ctx.shifts]
            offset = sum((_LANE_BIAS - m) << s for m, s in zip(mins, ctx.shifts))
            return {k + offset: c for k, c in p.terms.items()}, offset

        rem, off_p = cone_shift(self)
        dterms, off_d = cone_shift(d)
        kd = max(dterms)
        cd = dterms[kd]
        dothers = [(k, c) for k, c in dterms.items() if k != kd]
        heap = [-k for k in rem]
        heapq.heapify(heap)
        out = {}
        while heap:
            k = -heapq.heappop(heap)
            c = rem.get(k)
            if not c:
                continue
            del rem[k]
            # in the shifted cone, divisibility is componentwise on exponents
            diff = k - kd + kb
            if any(qe < 0 for qe in ctx.decode(diff)):
                rem[k] = c
                witness = LaurentPoly(
                    ctx, {kk - off_p: cc for kk, cc in rem.items()}, bound
                )
                raise NotDivisibleError("leading term not divisible", remainder=witness)
            if isinstance(c, int) and isinstance(cd, int) and c % cd == 0:
                qc = c // cd
            else:
                qc = Fraction(c) / cd
            out[diff] = qc
            for k2, c2 in dothers:
                pos = diff + k2 - kb
                v = rem.get(pos)
                nv = (v if v is not None else 0) - qc * c2
                if nv:
                    if v is None:
                        heapq.heappush(heap, -pos)
                    rem[pos] = nv
                elif v is not None:
                    del rem[pos]
        # undo the cone shifts: quotient offset is off_p - off_d
        shift_back = off_p - off_d
        out = {k - shift_back: c for k, c in out.items()}
        return LaurentPoly(ctx, out, bound)

    # ------------------------------------------------------------------
    # equality / hashing / rendering
    # ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                return self.is_constant() and self.terms.get(self.ctx.kb, 0) == other
            return NotImplemented
        if self.ctx is not other.ctx:
            return False
        if len(self.terms) != len(other.terms):
            return False
        for k, c in self.terms.items():
            if other.terms.get(k, 0) != c:
                return False
        return True

    def __hash__(self):
        return hash((self.ctx.names, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({self.ctx.names}, {self.pretty()})"

    def pretty(self) -> str:
        """Human-readable form, leading (lex-largest) term first."""
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"{name}^{e}" if e != 1 else name
                for name, e in zip(self.ctx.names, exps)
                if e != 0
            )
            cf = Fraction(c) if not isinstance(c, int) else c
            if mono:
                if cf == 1:
                    body = mono
                elif cf == -1:
                    body = f"-{mono}"
                else:
                    body = f"{cf}*{mono}"
            else:
                body = str(cf)
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(f"- {body[1:]}")
            else:
                parts.append(f"+ {body}")
        return " ".join(parts)

    # canonical text serialization -------------------------------------

    def to_lines(self) -> list:
        """Canonical serialization: one term per line, sorted descending.

        Each line is ``num/den`` followed by ``name^exp`` fields for the
        nonzero exponents.  Used by the on-disk cache and golden files.
        """
        lines = []
        for exps, c in self.sorted_terms():
            cf = c if isinstance(c, Fraction) else Fraction(c)
            fields = [f"{cf.numerator}/{cf.denominator}"]
            fields.extend(
                f"{name}^{e}" for name, e in zip(self.ctx.names, exps) if e != 0
            )
            lines.append(" ".join(fields))
        return lines

    @classmethod
    def from_lines(cls, ctx: VarContext, lines: Iterable[str]) -> "LaurentPoly":
        coeffs = {}
        for line in lines:
            line = line.strip()
            if not line:
                continue
            fields = line.split()
            num_s, _, den_s = fields[0].partition("/")
            if not den_s:
                raise ValueError(f"malformed coefficient {fields[0]!r}")
            c = Fraction(int(num_s), int(den_s))
            exps = [0] * ctx.n
            for f in fields[1:]:
                name, _, e_s = f.partition("^")
                if name not in ctx.index or not e_s:
                    raise ValueError(f"malformed monomial field {f!r}")
                exps[ctx.index[name]] = int(e_s)
            key = tuple(exps)
            if key in coeffs:
                raise ValueError(f"duplicate monomial in line {line!r}")
            coeffs[key] = int(c) if c.denominator == 1 else c
        return cls.from_dict(ctx, coeffs)


# ----------------------------------------------------------------------
# spec-level operation names
# ----------------------------------------------------------------------

def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Coefficient-wise sum with zero terms pruned."""
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact convolution product."""
    return p * q


def exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact quotient p / d; raises NotDivisibleError when none exists."""
    return p.exact_divide(d)


def substitute_powers(p, k: int):
    """Adams operation: every variable v becomes v**k.

    Accepts a LaurentPoly or anything exposing ``substitute_powers`` (a
    FactoredRational applies it to numerator and denominator factors).
    """
    return p.substitute_powers(k)
