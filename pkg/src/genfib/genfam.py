"""The families U_n^(k), V_n^(k).

For ``n = m*k + r`` with ``0 <= r < k``::

    U_n^(k) = U_m^(k-r) * U_{m+1}^r
    V_n^(k) = V_m^(k-r) * V_{m+1}^r

The product form is the primary route; the ``*_binet`` functions evaluate
the defining expression in alpha, beta directly.  For k = 2 the families also
satisfy a fourth-order recurrence and a pair of shorter even/odd rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .exact_arith import characteristic_roots, quad_pow
from .horadam import DegenerateDiscriminantError, SequenceParams, u_n, v_n


@dataclass(frozen=True)
class FamilyIndex:
    n: int
    k: int
    m: int
    r: int

    def __post_init__(self):
        if not (self.n == self.m * self.k + self.r and 0 <= self.r < self.k):
            raise ValueError(f"inconsistent index {self}")


@dataclass(frozen=True)
class FamilyValue:
    params: SequenceParams
    index: FamilyIndex
    value: int


def decompose(n: int, k: int) -> FamilyIndex:
    if k < 1:
        raise ValueError("k must be positive")
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    m, r = divmod(n, k)
    return FamilyIndex(n, k, m, r)


def u_family(params: SequenceParams, n: int, k: int) -> int:
    idx = decompose(n, k)
    return pow(u_n(params, idx.m), k - idx.r) * pow(u_n(params, idx.m + 1), idx.r)


def v_family(params: SequenceParams, n: int, k: int) -> int:
    idx = decompose(n, k)
    return pow(v_n(params, idx.m), k - idx.r) * pow(v_n(params, idx.m + 1), idx.r)


def u_family_binet(params: SequenceParams, n: int, k: int) -> int:
    idx = decompose(n, k)
    if params.delta == 0:
        raise DegenerateDiscriminantError()
    alpha, beta = characteristic_roots(params.p, params.q)
    m, r = idx.m, idx.r
    top = quad_pow(quad_pow(alpha, m + 1) - quad_pow(beta, m + 1), r)
    top = top * quad_pow(quad_pow(alpha, m) - quad_pow(beta, m), k - r)
    return (top / quad_pow(alpha - beta, k)).to_int()


def v_family_binet(params: SequenceParams, n: int, k: int) -> int:
    idx = decompose(n, k)
    alpha, beta = characteristic_roots(params.p, params.q)
    m, r = idx.m, idx.r
    z = quad_pow(quad_pow(alpha, m + 1) + quad_pow(beta, m + 1), r)
    z = z * quad_pow(quad_pow(alpha, m) + quad_pow(beta, m), k - r)
    return z.to_int()


def _fourth_order(params: SequenceParams, history: Sequence[int], n: int) -> int:
    if n < 4:
        raise ValueError(f"recurrence needs n >= 4, got {n}")
    if len(history) < 4:
        raise ValueError(f"need 4 previous values, got {len(history)}")
    w4, w3, w2, w1 = history[-4:]  # indices n-4 .. n-1
    p, q = params.p, params.q
    return p * w1 - p * q * w3 + q * q * w4


def u2_next(params: SequenceParams, history: Sequence[int], n: int) -> int:
    """U_n^(2) from ``history = [U_{n-4}^(2), ..., U_{n-1}^(2)]``."""
    return _fourth_order(params, history, n)


def v2_next(params: SequenceParams, history: Sequence[int], n: int) -> int:
    """V_n^(2) from ``history = [V_{n-4}^(2), ..., V_{n-1}^(2)]``."""
    return _fourth_order(params, history, n)


def _chain(params, seed, step, count) -> Iterator[int]:
    values = list(seed)
    for n in range(count):
        if n >= 4:
            values.append(step(params, values[-4:], n))
            values = values[-4:]
            yield values[-1]
        else:
            yield values[n]


def u2_sequence(params: SequenceParams, count: int) -> Iterator[int]:
    """First ``count`` terms of U^(2) via the fourth-order recurrence alone."""
    seed = [u_family(params, n, 2) for n in range(4)]
    return _chain(params, seed, u2_next, count)


def v2_sequence(params: SequenceParams, count: int) -> Iterator[int]:
    seed = [v_family(params, n, 2) for n in range(4)]
    return _chain(params, seed, v2_next, count)


def short_even_step(params: SequenceParams, prev1: int, prev2: int, m: int) -> int:
    """U_{2m}^(2) = p U_{2m-1}^(2) - q U_{2m-2}^(2) + q^(m-1)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return params.p * prev1 - params.q * prev2 + params.q ** (m - 1)


def short_odd_step(params: SequenceParams, prev1: int, prev2: int, m: int) -> int:
    """U_{2m+1}^(2) = p U_{2m}^(2) - q U_{2m-1}^(2)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return params.p * prev1 - params.q * prev2


def u2_short_even(params: SequenceParams, m: int) -> int:
    """U^(2) at index 2m, from the product-form values at 2m-1 and 2m-2."""
    return short_even_step(
        params, u_family(params, 2 * m - 1, 2), u_family(params, 2 * m - 2, 2), m
    )


def u2_short_odd(params: SequenceParams, m: int) -> int:
    """U^(2) at index 2m+1, from the product-form values at 2m and 2m-1."""
    return short_odd_step(
        params, u_family(params, 2 * m, 2), u_family(params, 2 * m - 1, 2), m
    )


def u2_short_sequence(params: SequenceParams, count: int) -> Iterator[int]:
    """U^(2) driven only by the even/odd rules from U_0^(2) = U_1^(2) = 0."""
    prev2, prev1 = 0, 0
    for n in range(count):
        if n < 2:
            yield 0
            continue
        m, odd = divmod(n, 2)
        step = short_odd_step if odd else short_even_step
        value = step(params, prev1, prev2, m)
        prev2, prev1 = prev1, value
        yield value
