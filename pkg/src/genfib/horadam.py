"""Horadam sequences W_n(a, b; p, q) and the special cases U_n, V_n.

Three routes are offered: linear iteration of ``W_n = p W_{n-1} - q W_{n-2}``,
exact Binet evaluation in Q(sqrt(delta)), and powers of the companion matrix
``[[p, -q], [1, 0]]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exact_arith import QuadElem, characteristic_roots, quad_pow


class DegenerateDiscriminantError(ValueError):
    def __init__(self, msg="degenerate discriminant"):
        super().__init__(msg)


@dataclass(frozen=True)
class SequenceParams:
    p: int
    q: int
    delta: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "delta", self.p * self.p - 4 * self.q)

    def __str__(self):
        return f"p={self.p},q={self.q}"


@dataclass(frozen=True)
class HoradamInit:
    a: int
    b: int


PRESETS = {
    "fibonacci": SequenceParams(1, -1),
    "pell": SequenceParams(2, -1),
    "jacobsthal": SequenceParams(1, -2),
    "balancing": SequenceParams(6, 1),
}

U_INIT = HoradamInit(0, 1)


def _check_index(n: int, low: int = 0) -> None:
    if n < low:
        raise ValueError(f"index must be >= {low}, got {n}")


def horadam_w(params: SequenceParams, init: HoradamInit, n: int) -> int:
    """W_n by iterating the recurrence from (W_0, W_1) = (a, b)."""
    _check_index(n)
    p, q = params.p, params.q
    prev, cur = init.a, init.b
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, p * cur - q * prev
    return cur


@lru_cache(maxsize=65536)
def _u(p: int, q: int, n: int) -> int:
    return horadam_w(SequenceParams(p, q), U_INIT, n)


@lru_cache(maxsize=65536)
def _v(p: int, q: int, n: int) -> int:
    return horadam_w(SequenceParams(p, q), HoradamInit(2, p), n)


def u_n(params: SequenceParams, n: int) -> int:
    _check_index(n)
    return _u(params.p, params.q, n)


def v_n(params: SequenceParams, n: int) -> int:
    _check_index(n)
    return _v(params.p, params.q, n)


def u_n_binet(params: SequenceParams, n: int) -> int:
    """(alpha^n - beta^n) / (alpha - beta), certified to be an integer."""
    _check_index(n)
    if params.delta == 0:
        raise DegenerateDiscriminantError()
    alpha, beta = characteristic_roots(params.p, params.q)
    z = (quad_pow(alpha, n) - quad_pow(beta, n)) / (alpha - beta)
    return z.to_int()


def v_n_binet(params: SequenceParams, n: int) -> int:
    """alpha^n + beta^n, certified to be an integer."""
    _check_index(n)
    alpha, beta = characteristic_roots(params.p, params.q)
    z: QuadElem = quad_pow(alpha, n) + quad_pow(beta, n)
    return z.to_int()


@dataclass(frozen=True)
class Mat2:
    m00: int
    m01: int
    m10: int
    m11: int

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )

    def det(self) -> int:
        return self.m00 * self.m11 - self.m01 * self.m10

    def entries(self) -> tuple[int, int, int, int]:
        return (self.m00, self.m01, self.m10, self.m11)


def w_matrix(params: SequenceParams) -> Mat2:
    return Mat2(params.p, -params.q, 1, 0)


def w_matrix_pow(params: SequenceParams, n: int) -> Mat2:
    """W(p, q)^n = [[U_{n+1}, -q U_n], [U_n, -q U_{n-1}]] for n >= 1."""
    _check_index(n, 1)
    result = Mat2.identity()
    square = w_matrix(params)
    while n:
        if n & 1:
            result = result @ square
        n >>= 1
        if n:
            square = square @ square
    return result
