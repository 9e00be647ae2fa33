"""Exact scalars: rationals (gmpy2 mpq) or elements of a prime field."""

from __future__ import annotations

from fractions import Fraction

import gmpy2

__all__ = ["GF", "ScalarField", "rational_field", "prime_field"]


class GF:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p: int):
        self.p = p
        self.v = int(v) % p

    def _lift(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise ValueError("mixing prime fields")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GF(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GF(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("zero has no inverse in F_p")
        return GF(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * GF(o, self.p).inverse()

    def __rtruediv__(self, other):
        return GF(other, self.p) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return GF(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"GF({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class ScalarField:
    """Factory and formatter for one of the two scalar types."""

    def __init__(self, p: int | None = None):
        self.p = p

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    def __call__(self, x):
        if self.p is not None:
            if isinstance(x, GF):
                return x
            if isinstance(x, (Fraction, type(gmpy2.mpq()))):
                return GF(int(x.numerator), self.p) / GF(int(x.denominator), self.p)
            return GF(int(x), self.p)
        if isinstance(x, str):
            return gmpy2.mpq(x)
        return gmpy2.mpq(x)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def fmt(self, x) -> str:
        if self.p is not None:
            return str(int(x))
        x = gmpy2.mpq(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, ScalarField) and other.p == self.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


def rational_field() -> ScalarField:
    return ScalarField(None)


def prime_field(p: int) -> ScalarField:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    return ScalarField(p)
