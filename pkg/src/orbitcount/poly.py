"""Polynomials over a finite field, with exact degree semantics.

Coefficients are stored little-endian (index i holds the coefficient of x^i)
and always normalized: the last stored coefficient is nonzero, or the tuple is
empty for the zero polynomial.  ``deg(0)`` is ``NEG_INF``, which compares below
every integer, so degree-bound predicates need no special case for zero.
"""

from __future__ import annotations

from .errors import BothZero, DivisionByZero, MixedFields, NegativeCutoff
from .fields import GF

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:n])

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def const(cls, field, c):
        return cls(field, (c % field.q,))

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @classmethod
    def from_ints(cls, field, ints):
        """Build from the repo-wide text format: little-endian integer list."""
        return cls(field, [c % field.q for c in ints])

    def to_ints(self):
        return list(self.coeffs)

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.coeffs == other.coeffs
            and self.field == other.field
        )

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other):
        if self.field != other.field:
            raise MixedFields(f"{self.field} vs {other.field}")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = f.sub(out[i], c)
        return Poly(f, out)

    def __mul__(self, other):
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f, ())
        out = [0] * (len(a) + len(b) - 1)
        if f.e == 1:
            p = f.p
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] = (out[i + j] + ca * cb) % p
        else:
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] = f.add(out[i + j], f.mul(ca, cb))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def shift(self, d: int) -> "Poly":
        """Multiply by x^d."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * d + self.coeffs)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        db = other.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return Poly(f, ()), self
        quot = [0] * (len(rem) - db)
        inv_lb = f.inv(other.lc)
        bcs = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                qc = f.mul(c, inv_lb)
                quot[i - db] = qc
                for j, bc in enumerate(bcs):
                    rem[i - db + j] = f.sub(rem[i - db + j], f.mul(qc, bc))
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero() or self.lc == 1:
            return self
        return self.scale(self.field.inv(self.lc))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == 1 else f"{c}*{xs}")
        return "+".join(terms)


def poly_divmod(f: Poly, g: Poly):
    return divmod(f, g)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if f.field != g.field:
        raise MixedFields(f"{f.field} vs {g.field}")
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_xgcd(f: Poly, g: Poly):
    """Extended gcd: returns (d, s, t) with s*f + t*g = d, d monic."""
    if f.field != g.field:
        raise MixedFields(f"{f.field} vs {g.field}")
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    fld = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(fld), Poly.zero(fld)
    t0, t1 = Poly.zero(fld), Poly.one(fld)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = fld.inv(r0.lc)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def truncate_low(f: Poly, u: int) -> Poly:
    """Keep only the terms of degree <= u."""
    if u < 0:
        raise NegativeCutoff(f"truncation cutoff must be >= 0, got {u}")
    return Poly(f.field, f.coeffs[: u + 1])
