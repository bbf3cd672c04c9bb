"""Exact arithmetic in Q(sqrt(-7)) and its order Z[sqrt(-7)].

Values are pairs a + b*sqrt(-7) with Fraction components kept in lowest
terms (Fraction guarantees positive denominators), so equality is
component equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, eq=False)
class QuadraticValue:
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))
        object.__setattr__(self, "_hash", hash((self.a, self.b)))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, QuadraticValue):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __add__(self, other: "QuadraticValue") -> "QuadraticValue":
        return QuadraticValue(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadraticValue") -> "QuadraticValue":
        return QuadraticValue(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "QuadraticValue":
        return QuadraticValue(-self.a, -self.b)

    def __mul__(self, other: "QuadraticValue") -> "QuadraticValue":
        # (a1 + b1*r)(a2 + b2*r) with r^2 = -7
        return QuadraticValue(
            self.a * other.a - 7 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def inverse(self) -> "QuadraticValue":
        n = quad_norm(self)
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(-7))")
        return QuadraticValue(self.a / n, -self.b / n)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_integral(self) -> bool:
        """True when the value lies in Z[sqrt(-7)]."""
        return self.a.denominator == 1 and self.b.denominator == 1

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*w" if self.b != 1 else "w"
        sign = "+" if self.b > 0 else "-"
        babs = abs(self.b)
        bpart = "w" if babs == 1 else f"{babs}*w"
        return f"{self.a}{sign}{bpart}"


_INTERN: dict = {}


def intern_value(c: QuadraticValue) -> QuadraticValue:
    """Canonical shared instance, so hot paths get identity hits."""
    return _INTERN.setdefault(c, c)


QV_ZERO = intern_value(QuadraticValue(0, 0))
QV_ONE = intern_value(QuadraticValue(1, 0))
QV_MINUS_ONE = intern_value(QuadraticValue(-1, 0))
QV_SQRT = intern_value(QuadraticValue(0, 1))


def sigma(c: QuadraticValue) -> QuadraticValue:
    """Conjugation a + b*sqrt(-7) -> a - b*sqrt(-7); an involutive automorphism."""
    return QuadraticValue(c.a, -c.b)


@lru_cache(maxsize=None)
def sigma_cached(c: QuadraticValue) -> QuadraticValue:
    return intern_value(sigma(c))


@lru_cache(maxsize=None)
def neg_cached(c: QuadraticValue) -> QuadraticValue:
    return intern_value(-c)


def quad_norm(c: QuadraticValue) -> Fraction:
    """c * sigma(c) = a^2 + 7 b^2; multiplicative."""
    return c.a * c.a + 7 * c.b * c.b
