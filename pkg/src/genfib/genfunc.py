"""Exact coefficient streams of rational power series num(x)/den(x)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Iterator

from .horadam import SequenceParams


def make_poly(coeffs: Iterable[int]) -> tuple[int, ...]:
    """Dense coefficient tuple, index = degree, trailing zeros trimmed."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


Poly = tuple  # of int, see make_poly


@dataclass(frozen=True)
class RationalSeries:
    num: Poly
    den: Poly

    def __post_init__(self):
        object.__setattr__(self, "num", make_poly(self.num))
        object.__setattr__(self, "den", make_poly(self.den))

    def coefficients(self) -> Iterator[int]:
        """Yield c_0, c_1, ... from den[0] c_n = num_n - sum_j den[j] c_{n-j}."""
        num, den = self.num, self.den
        if not den or den[0] == 0:
            raise ZeroDivisionError("series has a pole at 0")
        lead = den[0]
        past: list[int] = []  # most recent first, at most deg(den) entries
        order = len(den) - 1
        n = 0
        while True:
            acc = num[n] if n < len(num) else 0
            for j, c in enumerate(past, start=1):
                acc -= den[j] * c
            coeff, rem = divmod(acc, lead)
            if rem:
                raise ArithmeticError(
                    f"coefficient {n} is not integral ({acc}/{lead})"
                )
            if order:
                past.insert(0, coeff)
                del past[order:]
            yield coeff
            n += 1


def expand(series: RationalSeries, count: int) -> list[int]:
    if count < 1:
        raise ValueError("count must be positive")
    return list(islice(series.coefficients(), count))


def _k2_denominator(params: SequenceParams) -> Poly:
    p, q = params.p, params.q
    return make_poly([1, -p, 0, p * q, -q * q])


def gf_u2(params: SequenceParams) -> RationalSeries:
    """x^2 / (1 - p x + p q x^3 - q^2 x^4), the series of U_n^(2)."""
    return RationalSeries(make_poly([0, 0, 1]), _k2_denominator(params))


def gf_v2(params: SequenceParams) -> RationalSeries:
    """(4 - 2p x - p^2 x^2 + 2pq x^3) / (1 - p x + p q x^3 - q^2 x^4)."""
    p, q = params.p, params.q
    return RationalSeries(
        make_poly([4, -2 * p, -p * p, 2 * p * q]), _k2_denominator(params)
    )
