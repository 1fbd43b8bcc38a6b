"""Exact integers, rationals and elements of Q(sqrt(delta)).

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and always normalized.  The one type defined
here is :class:`QuadElem`, which represents ``x + y*sqrt(delta)`` with
rational coordinates.  Nothing in this module touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

BigInt = int
Rational = Fraction

Scalar = Union[int, Fraction]

_INT_RE = re.compile(r"[+-]?[0-9]+")
_RAT_RE = re.compile(r"([+-]?[0-9]+)(?:/([0-9]+))?")


class ConsistencyError(ArithmeticError):
    """An algebraic fact that must hold was found violated at runtime."""


def rational_from_pair(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def parse_int(text: str) -> int:
    """Parse a signed decimal integer; no underscores, no whitespace."""
    if not _INT_RE.fullmatch(text):
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def format_int(value: int) -> str:
    return str(value)


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or a bare integer."""
    match = _RAT_RE.fullmatch(text)
    if match is None:
        raise ValueError(f"not a rational: {text!r}")
    num, den = match.groups()
    return rational_from_pair(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction) -> str:
    """Render as ``num/den``; integers are rendered without the ``/1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class QuadElem:
    """``x + y*sqrt(delta)`` with rational ``x``, ``y`` and integer ``delta``.

    Arithmetic is only defined between elements sharing the same ``delta``;
    ints and Fractions are promoted to ``x + 0*sqrt(delta)``.
    """

    x: Fraction
    y: Fraction
    delta: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if not isinstance(self.delta, int):
            raise TypeError("delta must be an int")

    @classmethod
    def one(cls, delta: int) -> QuadElem:
        return cls(Fraction(1), Fraction(0), delta)

    @classmethod
    def root(cls, delta: int) -> QuadElem:
        """The element ``sqrt(delta)`` itself."""
        return cls(Fraction(0), Fraction(1), delta)

    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.delta != self.delta:
                raise ValueError(
                    f"cannot combine elements of Q(sqrt({self.delta})) "
                    f"and Q(sqrt({other.delta}))"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(Fraction(other), Fraction(0), self.delta)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.x + other.x, self.y + other.y, self.delta)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.x, -self.y, self.delta)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadElem(self.x - other.x, self.y - other.y, self.delta)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.delta
        return QuadElem(
            self.x * other.x + self.y * other.y * d,
            self.x * other.y + other.x * self.y,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadElem:
        return QuadElem(self.x, -self.y, self.delta)

    def norm(self) -> Fraction:
        """``z * conj(z) = x^2 - y^2 * delta``."""
        return self.x * self.x - self.y * self.y * self.delta

    def inverse(self) -> QuadElem:
        # Zero divisors exist when delta is a perfect square; norm() == 0
        # catches exactly the non-invertible elements.
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} is not invertible")
        c = self.conjugate()
        return QuadElem(c.x / n, c.y / n, self.delta)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return quad_pow(self, e)

    def is_rational(self) -> bool:
        return self.y == 0

    def to_int(self) -> int:
        """Return the element as an int, or raise :class:`ConsistencyError`.

        Used to certify Binet-style evaluations: the sqrt(delta) part must
        cancel and the rational part must have unit denominator.
        """
        if self.y != 0:
            raise ConsistencyError(f"nonzero sqrt({self.delta}) part in {self}")
        if self.x.denominator != 1:
            raise ConsistencyError(f"non-integral rational part in {self}")
        return self.x.numerator

    def __str__(self):
        return f"{format_rational(self.x)} + {format_rational(self.y)}*sqrt({self.delta})"


def quad_pow(base: QuadElem, e: int) -> QuadElem:
    """``base**e`` by square-and-multiply; ``base**0`` is ``1 + 0*sqrt(delta)``."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = QuadElem.one(base.delta)
    square = base
    while e:
        if e & 1:
            result = result * square
        e >>= 1
        if e:
            square = square * square
    return result


def characteristic_roots(p: int, q: int) -> tuple[QuadElem, QuadElem]:
    """``alpha, beta = (p +- sqrt(p^2 - 4q)) / 2`` as exact quadratic elements."""
    delta = p * p - 4 * q
    half = Fraction(1, 2)
    return (
        QuadElem(Fraction(p, 2), half, delta),
        QuadElem(Fraction(p, 2), -half, delta),
    )
