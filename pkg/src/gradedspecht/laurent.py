"""Sparse integer Laurent polynomials in q.

Graded dimensions live here. A polynomial is stored as a sorted tuple of
``(exponent, coefficient)`` pairs with no zero coefficients, so structural
equality is mathematical equality.

>>> q = LaurentIntPoly.monomial(1)
>>> (q + 1) * (q + 1)
LaurentIntPoly([(0, 1), (1, 2), (2, 1)])
>>> (q + 1).shift(-1).bar()
LaurentIntPoly([(0, 1), (1, 1)])
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

__all__ = ["LaurentIntPoly"]


@dataclass(frozen=True)
class LaurentIntPoly:
    terms: tuple[tuple[int, int], ...] = ()

    def __init__(self, terms: Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = defaultdict(int)
        for exp, coeff in terms:
            acc[int(exp)] += int(coeff)
        canon = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        object.__setattr__(self, "terms", canon)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentIntPoly":
        return cls([(exp, coeff)])

    @classmethod
    def zero(cls) -> "LaurentIntPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentIntPoly":
        return cls([(0, 1)])

    def _coerce(self, other) -> "LaurentIntPoly":
        if isinstance(other, LaurentIntPoly):
            return other
        if isinstance(other, int):
            return LaurentIntPoly([(0, other)])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentIntPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentIntPoly((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentIntPoly(
            (e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms
        )

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def shift(self, d: int) -> "LaurentIntPoly":
        """Multiply by q^d, the effect of the grading shift <d> on dimensions."""
        return LaurentIntPoly((e + d, c) for e, c in self.terms)

    def bar(self) -> "LaurentIntPoly":
        """Substitute q -> q^-1 (graded dimension of the contragredient dual)."""
        return LaurentIntPoly((-e, c) for e, c in self.terms)

    def at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def coefficient(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def to_list(self) -> list[list[int]]:
        return [[e, c] for e, c in self.terms]

    @classmethod
    def from_list(cls, pairs) -> "LaurentIntPoly":
        return cls((int(e), int(c)) for e, c in pairs)

    def __repr__(self):
        return f"LaurentIntPoly({list(self.terms)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)
