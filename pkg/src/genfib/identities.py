"""Exact verification of the identities satisfied by U_n, V_n, U_n^(k), V_n^(k).

Each ``check_*`` function evaluates both sides of one identity at one grid
point and returns an :class:`IdentityReport`.  Points outside an identity's
domain (division by zero, undefined superscripts) are reported with status
``"skip"``; they never count as failures.

All sequence values are pulled from a :class:`SequenceSource`, so a test
can substitute a deliberately broken source and watch the checks fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Mapping, Sequence, Union

from . import genfam, horadam
from .genfam import short_even_step, short_odd_step, u2_next, v2_next
from .horadam import Mat2, SequenceParams

Side = Union[Fraction, tuple]

PASS, FAIL, SKIP = "pass", "fail", "skip"


class SequenceSource:
    """Where the checks get their numbers from; the real implementation by default."""

    def u(self, params: SequenceParams, n: int) -> int:
        return horadam.u_n(params, n)

    def v(self, params: SequenceParams, n: int) -> int:
        return horadam.v_n(params, n)

    def u_family(self, params: SequenceParams, n: int, k: int) -> int:
        return genfam.u_family(params, n, k)

    def v_family(self, params: SequenceParams, n: int, k: int) -> int:
        return genfam.v_family(params, n, k)

    def w_matrix_pow(self, params: SequenceParams, n: int) -> Mat2:
        return horadam.w_matrix_pow(params, n)


DEFAULT_SOURCE = SequenceSource()


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    params: SequenceParams
    index: tuple[tuple[str, int], ...]
    lhs: Side | None
    rhs: Side | None
    status: str
    reason: str = ""
    # (lhs, rhs) of the integer restatement, where one exists
    cleared: tuple[int, int] | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL


def _compare(identity_id, params, index, lhs, rhs, cleared=None) -> IdentityReport:
    ok = lhs == rhs
    reason = ""
    if cleared is not None and (cleared[0] == cleared[1]) != ok:
        ok = False
        reason = "integer form disagrees with rational form"
    return IdentityReport(
        identity_id, params, index, lhs, rhs, PASS if ok else FAIL, reason, cleared
    )


def _skip(identity_id, params, index, reason) -> IdentityReport:
    return IdentityReport(identity_id, params, index, None, None, SKIP, reason)


def check_t1_i(params: SequenceParams, m: int, k: int,
               src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    """sum_t C(k-1,t) (-p)^(-t) U_{mk+t}^(k) = (q/p)^(k-1) U_m U_{(m-1)(k-1)}^(k-1)."""
    index = (("m", m), ("k", k))
    p, q = params.p, params.q
    if m < 1 or k < 1:
        return _skip("T1i", params, index, "requires m >= 1 and k >= 1")
    if p == 0:
        return _skip("T1i", params, index, "identity undefined (division by p)")
    lhs = sum(
        comb(k - 1, t) * Fraction(1, (-p) ** t) * src.u_family(params, m * k + t, k)
        for t in range(k)
    )
    u_m = src.u(params, m)
    if k == 1:
        rhs = Fraction(u_m)  # empty-product convention for the k-1 = 0 factor
    else:
        rhs = Fraction(q, p) ** (k - 1) * u_m * src.u_family(
            params, (m - 1) * (k - 1), k - 1
        )
    return _compare("T1i", params, index, Fraction(lhs), rhs)


def check_t1_ii(params: SequenceParams, m: int, k: int,
                src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    """sum_t C(k-1,t) (-p/q)^t U_{mk+t}^(k) = (-q)^(1-k) U_m U_{(m+2)(k-1)}^(k-1)."""
    index = (("m", m), ("k", k))
    p, q = params.p, params.q
    if m < 1 or k < 1:
        return _skip("T1ii", params, index, "requires m >= 1 and k >= 1")
    if q == 0:
        return _skip("T1ii", params, index, "identity undefined (division by q)")
    lhs = sum(
        comb(k - 1, t) * Fraction(-p, q) ** t * src.u_family(params, m * k + t, k)
        for t in range(k)
    )
    u_m = src.u(params, m)
    if k == 1:
        rhs = Fraction(u_m)
    else:
        rhs = Fraction(1, (-q) ** (k - 1)) * u_m * src.u_family(
            params, (m + 2) * (k - 1), k - 1
        )
    return _compare("T1ii", params, index, Fraction(lhs), rhs)


def check_t1_iii(params: SequenceParams, m: int, k: int,
                 src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    """sum_t p^(-t) U_{mk+t}^(k)
    = (-p/q) p^(-k) (U_m / U_{m-1}) (U_{(m+1)k}^(k) - p^k U_{mk}^(k)).

    Also records the integer form
    ``-q U_{m-1} sum_t p^(k-1-t) U_{mk+t}^(k) = U_m (U_{(m+1)k}^(k) - p^k U_{mk}^(k))``.
    """
    index = (("m", m), ("k", k))
    p, q = params.p, params.q
    if m < 1 or k < 1:
        return _skip("T1iii", params, index, "requires m >= 1 and k >= 1")
    if p == 0:
        return _skip("T1iii", params, index, "identity undefined (division by p)")
    if q == 0:
        return _skip("T1iii", params, index, "identity undefined (division by q)")
    u_prev = src.u(params, m - 1)
    if u_prev == 0:
        return _skip("T1iii", params, index,
                     "identity undefined at this m (U_{m-1} = 0)")
    terms = [src.u_family(params, m * k + t, k) for t in range(k)]
    u_m = src.u(params, m)
    bracket = src.u_family(params, (m + 1) * k, k) - p**k * src.u_family(params, m * k, k)

    lhs = sum(Fraction(term, p**t) for t, term in enumerate(terms))
    rhs = Fraction(-p, q) / p**k * Fraction(u_m, u_prev) * bracket
    cleared = (
        -q * u_prev * sum(p ** (k - 1 - t) * term for t, term in enumerate(terms)),
        u_m * bracket,
    )
    return _compare("T1iii", params, index, Fraction(lhs), rhs, cleared)


def check_t3(params: SequenceParams, s: int,
             src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    """U_{2(s-1)}^(2) = q^(s-2) + U_s U_{s-2}, with s = n + l."""
    index = (("s", s),)
    if s < 2:
        return _skip("T3", params, index, "requires s >= 2")
    lhs = src.u_family(params, 2 * (s - 1), 2)
    rhs = params.q ** (s - 2) + src.u(params, s) * src.u(params, s - 2)
    return _compare("T3", params, index, Fraction(lhs), Fraction(rhs))


def _check_t4(identity_id, family, step, params, n, src):
    index = (("n", n),)
    if n < 4:
        return _skip(identity_id, params, index, "requires n >= 4")
    history = [family(params, j, 2) for j in range(n - 4, n)]
    lhs = family(params, n, 2)
    rhs = step(params, history, n)
    return _compare(identity_id, params, index, Fraction(lhs), Fraction(rhs))


def check_t4u(params: SequenceParams, n: int,
              src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    return _check_t4("T4U", src.u_family, u2_next, params, n, src)


def check_t4v(params: SequenceParams, n: int,
              src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    return _check_t4("T4V", src.v_family, v2_next, params, n, src)


def check_short_even(params: SequenceParams, m: int,
                     src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    index = (("m", m),)
    if m < 1:
        return _skip("ShortEven", params, index, "requires m >= 1")
    lhs = src.u_family(params, 2 * m, 2)
    rhs = short_even_step(
        params, src.u_family(params, 2 * m - 1, 2), src.u_family(params, 2 * m - 2, 2), m
    )
    return _compare("ShortEven", params, index, Fraction(lhs), Fraction(rhs))


def check_short_odd(params: SequenceParams, m: int,
                    src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    index = (("m", m),)
    if m < 1:
        return _skip("ShortOdd", params, index, "requires m >= 1")
    lhs = src.u_family(params, 2 * m + 1, 2)
    rhs = short_odd_step(
        params, src.u_family(params, 2 * m, 2), src.u_family(params, 2 * m - 1, 2), m
    )
    return _compare("ShortOdd", params, index, Fraction(lhs), Fraction(rhs))


def check_simson(params: SequenceParams, n: int,
                 src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    """U_{n-1}^2 - U_n U_{n-2} = q^(n-2)."""
    index = (("n", n),)
    if n < 2:
        return _skip("Simson", params, index, "requires n >= 2")
    lhs = src.u(params, n - 1) ** 2 - src.u(params, n) * src.u(params, n - 2)
    return _compare("Simson", params, index, Fraction(lhs), Fraction(params.q ** (n - 2)))


def check_matrix_entries(params: SequenceParams, n: int,
                         src: SequenceSource = DEFAULT_SOURCE) -> IdentityReport:
    """W(p,q)^n entries and determinant against (U_{n+1}, -qU_n, U_n, -qU_{n-1}) and q^n."""
    index = (("n", n),)
    if n < 1:
        return _skip("MatrixEntries", params, index, "requires n >= 1")
    mat = src.w_matrix_pow(params, n)
    q = params.q
    lhs = tuple(Fraction(e) for e in (*mat.entries(), mat.det()))
    rhs = tuple(Fraction(e) for e in (
        src.u(params, n + 1), -q * src.u(params, n),
        src.u(params, n), -q * src.u(params, n - 1),
        q**n,
    ))
    return _compare("MatrixEntries", params, index, lhs, rhs)


@dataclass(frozen=True)
class IdentitySpec:
    check: Callable[..., IdentityReport]
    index_names: tuple[str, ...]
    default_ranges: Mapping[str, tuple[int, int]]


IDENTITIES: dict[str, IdentitySpec] = {
    "T1i": IdentitySpec(check_t1_i, ("m", "k"), {"m": (1, 25), "k": (1, 6)}),
    "T1ii": IdentitySpec(check_t1_ii, ("m", "k"), {"m": (1, 25), "k": (1, 6)}),
    "T1iii": IdentitySpec(check_t1_iii, ("m", "k"), {"m": (1, 25), "k": (1, 6)}),
    "T3": IdentitySpec(check_t3, ("s",), {"s": (2, 100)}),
    "T4U": IdentitySpec(check_t4u, ("n",), {"n": (4, 200)}),
    "T4V": IdentitySpec(check_t4v, ("n",), {"n": (4, 200)}),
    "ShortEven": IdentitySpec(check_short_even, ("m",), {"m": (1, 100)}),
    "ShortOdd": IdentitySpec(check_short_odd, ("m",), {"m": (1, 100)}),
    "Simson": IdentitySpec(check_simson, ("n",), {"n": (2, 100)}),
    "MatrixEntries": IdentitySpec(check_matrix_entries, ("n",), {"n": (1, 100)}),
}


def sweep(identity_id: str, params_list: Sequence[SequenceParams],
          ranges: Mapping[str, tuple[int, int]] | None = None,
          src: SequenceSource = DEFAULT_SOURCE) -> list[IdentityReport]:
    """Evaluate one identity over every (params, index) grid point.

    ``ranges`` maps each index name to an inclusive ``(lo, hi)`` pair; names
    left out fall back to the identity's default range.  Reports come back
    params-major, then in lexicographic index order.
    """
    try:
        spec = IDENTITIES[identity_id]
    except KeyError:
        raise ValueError(f"unknown identity {identity_id!r}") from None
    ranges = dict(ranges or {})
    unknown = set(ranges) - set(spec.index_names)
    if unknown:
        raise ValueError(f"{identity_id} has no index named {sorted(unknown)}")
    axes = []
    for name in spec.index_names:
        lo, hi = ranges.get(name, spec.default_ranges[name])
        if lo > hi:
            raise ValueError(f"empty range for {name}: {lo}..{hi}")
        axes.append(range(lo, hi + 1))
    return [
        spec.check(params, *point, src=src)
        for params in params_list
        for point in product(*axes)
    ]
