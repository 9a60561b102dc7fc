"""Exact sparse multivariate polynomials.

A polynomial stores its terms as a tuple of (key, numerator) pairs sorted in
strictly descending key order, where keys are the packed monomials of the
ring's active order.  Over the rationals a single positive denominator is
kept for the whole polynomial with gcd(content of numerators, denominator)
equal to 1, so term coefficients are numerator/denominator.  Over a prime
field numerators live in [1, p) and the denominator is always 1.

Polynomials are immutable; all operations return new objects.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import kernel
from .errors import RingMismatch
from .rings import RingContext


def _check_same_ring(a: "Polynomial", b: "Polynomial"):
    if a.ring != b.ring:
        raise RingMismatch("operands live in different rings")


class Polynomial:
    __slots__ = ("ring", "terms", "denom")

    def __init__(self, ring: RingContext, terms, denom: int = 1, _normalized=False):
        self.ring = ring
        if _normalized:
            self.terms = terms
            self.denom = denom
            return
        self.terms, self.denom = _normalize(ring, dict(terms), denom)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: RingContext) -> "Polynomial":
        return cls(ring, (), 1, _normalized=True)

    @classmethod
    def constant(cls, ring: RingContext, value) -> "Polynomial":
        q = Fraction(value)
        if ring.field.is_prime_field:
            r = ring.field.reduce_fraction(q)
            if r == 0:
                return cls.zero(ring)
            return cls(ring, ((ring.codec.one, r),), 1, _normalized=True)
        if q == 0:
            return cls.zero(ring)
        return cls(ring, ((ring.codec.one, q.numerator),), q.denominator, _normalized=True)

    @classmethod
    def variable(cls, ring: RingContext, i: int) -> "Polynomial":
        return cls(ring, ((ring.codec.var_key(i), 1),), 1, _normalized=True)

    @classmethod
    def from_exponents(cls, ring: RingContext, mapping) -> "Polynomial":
        """Build from {exponent tuple: coefficient} with Fraction/int values."""
        acc = {}
        c = ring.codec
        for exps, coeff in mapping.items():
            q = Fraction(coeff)
            if q:
                acc[c.pack(tuple(exps))] = acc.get(c.pack(tuple(exps)), Fraction(0)) + q
        return _from_fraction_dict(ring, acc)

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == self.ring.codec.one)

    def constant_value(self):
        if not self.terms:
            return Fraction(0) if not self.ring.field.is_prime_field else 0
        key, num = self.terms[0]
        if key != self.ring.codec.one:
            raise ValueError("not a constant polynomial")
        return num if self.ring.field.is_prime_field else Fraction(num, self.denom)

    def leading_key(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    def leading_monomial(self):
        return self.ring.codec.unpack(self.leading_key())

    def leading_coefficient(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if self.ring.field.is_prime_field:
            return self.terms[0][1]
        return Fraction(self.terms[0][1], self.denom)

    def coefficient(self, exponents):
        key = self.ring.codec.pack(tuple(exponents))
        for k, v in self.terms:
            if k == key:
                return v if self.ring.field.is_prime_field else Fraction(v, self.denom)
        return 0 if self.ring.field.is_prime_field else Fraction(0)

    def total_degree(self) -> int:
        """Maximal total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        c = self.ring.codec
        return max(c.total_degree(k) for k, _ in self.terms)

    def monomials(self):
        c = self.ring.codec
        return tuple(c.unpack(k) for k, _ in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms and self.denom == other.denom

    def __hash__(self):
        return hash((self.ring, self.terms, self.denom))

    # -- arithmetic ----------------------------------------------------

    def __neg__(self) -> "Polynomial":
        if self.ring.field.is_prime_field:
            p = self.ring.field.characteristic
            return Polynomial(self.ring, tuple((k, p - v) for k, v in self.terms), 1, _normalized=True)
        return Polynomial(self.ring, tuple((k, -v) for k, v in self.terms), self.denom, _normalized=True)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        _check_same_ring(self, other)
        if self.ring.field.is_prime_field:
            p = self.ring.field.characteristic
            acc = dict(self.terms)
            kernel.iadd_scaled_mod(acc, other.terms, 1, self.ring.codec.one, self.ring.codec.one, p)
            return Polynomial(self.ring, acc, 1)
        da, db = self.denom, other.denom
        g = gcd(da, db)
        ma, mb = db // g, da // g
        acc = {k: v * ma for k, v in self.terms}
        kernel.iadd_scaled(acc, other.terms, mb, self.ring.codec.one, self.ring.codec.one)
        return Polynomial(self.ring, acc, da * ma)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        _check_same_ring(self, other)
        one = self.ring.codec.one
        if self.ring.field.is_prime_field:
            acc = kernel.mul_terms_mod(self.terms, other.terms, one, self.ring.field.characteristic)
            return Polynomial(self.ring, acc, 1)
        acc = kernel.mul_terms(self.terms, other.terms, one)
        return Polynomial(self.ring, acc, self.denom * other.denom)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    # -- calculus and evaluation ----------------------------------------

    def partial_derivative(self, i: int) -> "Polynomial":
        if i < 0 or i >= self.ring.nvars:
            raise IndexError("variable index out of range")
        c = self.ring.codec
        acc = {}
        for k, v in self.terms:
            e = c.exponent(k, i)
            if e == 0:
                continue
            exps = list(c.unpack(k))
            exps[i] -= 1
            kk = c.pack(tuple(exps))
            acc[kk] = acc.get(kk, 0) + e * v
        if self.ring.field.is_prime_field:
            p = self.ring.field.characteristic
            acc = {k: v % p for k, v in acc.items()}
        return Polynomial(self.ring, acc, self.denom)

    def differential(self) -> "OneForm":
        return OneForm(tuple(self.partial_derivative(i) for i in range(self.ring.nvars)))

    def evaluate(self, point):
        """Exact evaluation at a point of field elements."""
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong length")
        c = self.ring.codec
        if self.ring.field.is_prime_field:
            p = self.ring.field.characteristic
            vals = [x % p for x in point]
            total = 0
            for k, v in self.terms:
                term = v
                for i, e in enumerate(c.unpack(k)):
                    if e:
                        term = term * pow(vals[i], e, p) % p
                total = (total + term) % p
            return total
        vals = [Fraction(x) for x in point]
        total = Fraction(0)
        for k, v in self.terms:
            term = Fraction(v, self.denom)
            for i, e in enumerate(c.unpack(k)):
                if e:
                    term *= vals[i] ** e
            total += term
        return total

    def shift_point(self, point) -> "Polynomial":
        """Substitute x_i -> x_i + point_i."""
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong length")
        ring = self.ring
        c = ring.codec
        # (x_i + p_i)^e computed once per needed (i, e)
        powers: dict[tuple[int, int], Polynomial] = {}

        def var_power(i, e):
            got = powers.get((i, e))
            if got is None:
                base = Polynomial.variable(ring, i) + Polynomial.constant(ring, point[i])
                got = base ** e
                powers[(i, e)] = got
            return got

        total = Polynomial.zero(ring)
        for k, v in self.terms:
            coeff = v if ring.field.is_prime_field else Fraction(v, self.denom)
            term = Polynomial.constant(ring, coeff)
            for i, e in enumerate(c.unpack(k)):
                if e:
                    term = term * var_power(i, e)
            total = total + term
        return total

    def map_ring(self, target: RingContext) -> "Polynomial":
        """Re-encode into another ring over the same field.

        Variables are matched by name.  A source variable missing from the
        target is allowed only if it occurs with exponent zero everywhere.
        """
        tnames = {name: i for i, name in enumerate(target.variables)}
        idx = [tnames.get(name) for name in self.ring.variables]
        c, tc = self.ring.codec, target.codec
        acc = {}
        for k, v in self.terms:
            exps = [0] * target.nvars
            for i, e in enumerate(c.unpack(k)):
                if e == 0:
                    continue
                if idx[i] is None:
                    raise RingMismatch(
                        f"variable {self.ring.variables[i]!r} does not exist in the target ring"
                    )
                exps[idx[i]] = e
            acc[tc.pack(tuple(exps))] = v
        return Polynomial(target, acc, self.denom)

    # -- printing --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for k, v in self.terms:
            mono = ring.monomial_str(k)
            if ring.field.is_prime_field:
                coeff = str(v)
                sign = "+"
            else:
                q = Fraction(v, self.denom)
                sign = "-" if q < 0 else "+"
                q = abs(q)
                coeff = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
            if mono == "1":
                body = coeff
            elif coeff == "1":
                body = mono
            else:
                body = f"{coeff}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


class OneForm:
    """A 1-form sum(a_i dx_i), stored as its tuple of coefficient polynomials."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = tuple(coefficients)
        if not coeffs:
            raise ValueError("a 1-form needs at least one coefficient")
        ring = coeffs[0].ring
        if any(c.ring != ring for c in coeffs):
            raise RingMismatch("1-form coefficients live in different rings")
        if len(coeffs) != ring.nvars:
            raise ValueError("1-form needs one coefficient per variable")
        self.coefficients = coeffs

    @property
    def ring(self) -> RingContext:
        return self.coefficients[0].ring

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, OneForm):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        names = self.ring.variables
        return " + ".join(f"({c})*d{n}" for c, n in zip(self.coefficients, names))


def _normalize(ring: RingContext, acc: dict, denom: int):
    """Canonical term tuple + denominator from a raw accumulator."""
    if ring.field.is_prime_field:
        p = ring.field.characteristic
        items = [(k, v % p) for k, v in acc.items()]
        items = [(k, v) for k, v in items if v]
        items.sort(key=lambda t: t[0], reverse=True)
        return tuple(items), 1
    items = [(k, v) for k, v in acc.items() if v]
    if not items:
        return (), 1
    if denom < 0:
        denom = -denom
        items = [(k, -v) for k, v in items]
    g = kernel.content(v for _, v in items)
    g = gcd(g, denom)
    if g > 1:
        items = [(k, v // g) for k, v in items]
        denom //= g
    items.sort(key=lambda t: t[0], reverse=True)
    return tuple(items), denom


def _from_fraction_dict(ring: RingContext, acc: dict) -> Polynomial:
    if ring.field.is_prime_field:
        reduced = {k: ring.field.reduce_fraction(Fraction(v)) for k, v in acc.items()}
        return Polynomial(ring, reduced, 1)
    denom = 1
    for v in acc.values():
        q = Fraction(v)
        denom = denom * q.denominator // gcd(denom, q.denominator)
    nums = {k: Fraction(v) * denom for k, v in acc.items()}
    return Polynomial(ring, {k: int(v) for k, v in nums.items()}, denom)
