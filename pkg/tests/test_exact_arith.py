from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genfib.exact_arith import (ConsistencyError, QuadElem, characteristic_roots,
                                format_rational, parse_int, parse_rational,
                                quad_pow, rational_from_pair)
from oracles import schoolbook_quad_pow

small = st.integers(-50, 50)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
deltas = st.integers(-30, 30)


@pytest.mark.parametrize("num,den,expected", [
    (4, -6, Fraction(-2, 3)),
    (0, 7, Fraction(0, 1)),
    (6, 3, Fraction(2, 1)),
])
def test_rational_from_pair(num, den, expected):
    r = rational_from_pair(num, den)
    assert r == expected
    assert r.denominator > 0


def test_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        rational_from_pair(1, 0)


def test_string_round_trips():
    big = 3**400 - 7
    assert parse_int(str(big)) == big
    assert parse_int("-0012") == -12
    assert format_rational(Fraction(-4, 6)) == "-2/3"
    assert format_rational(Fraction(6, 3)) == "2"
    assert parse_rational("-2/3") == Fraction(-2, 3)
    assert parse_rational("10/4") == Fraction(5, 2)
    for bad in ("1_000", " 1", "1.5", ""):
        with pytest.raises(ValueError):
            parse_int(bad)


@given(st.integers(-10**40, 10**40))
def test_int_round_trip(n):
    assert parse_int(str(n)) == n


@given(small, st.integers(1, 50))
def test_rational_round_trip(a, b):
    r = rational_from_pair(a, b)
    assert parse_rational(format_rational(r)) == r


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1


def test_quad_pow_zero_exponent():
    z = QuadElem(Fraction(3, 7), Fraction(-2), 11)
    assert quad_pow(z, 0) == QuadElem(Fraction(1), Fraction(0), 11)


def test_golden_ratio_squared():
    alpha, _ = characteristic_roots(1, -1)
    assert alpha == QuadElem(Fraction(1, 2), Fraction(1, 2), 5)
    sq = quad_pow(alpha, 2)
    assert (sq.x, sq.y) == schoolbook_quad_pow(Fraction(1, 2), Fraction(1, 2), 5, 2)
    assert sq == QuadElem(Fraction(3, 2), Fraction(1, 2), 5)


@given(rationals, rationals, deltas, st.integers(0, 25))
def test_quad_pow_matches_schoolbook(x, y, d, e):
    z = quad_pow(QuadElem(x, y, d), e)
    assert (z.x, z.y) == schoolbook_quad_pow(x, y, d, e)


@given(st.integers(0, 20), st.integers(0, 20))
def test_exponent_law(n, m):
    alpha, _ = characteristic_roots(1, -1)
    assert quad_pow(alpha, n) * quad_pow(alpha, m) == quad_pow(alpha, n + m)


@given(rationals, rationals, rationals, rationals, deltas)
def test_norm_is_multiplicative(x1, y1, x2, y2, d):
    z, w = QuadElem(x1, y1, d), QuadElem(x2, y2, d)
    assert (z * w).norm() == z.norm() * w.norm()
    assert z * z.conjugate() == QuadElem(z.norm(), 0, d)


@given(rationals, rationals, deltas)
def test_inverse(x, y, d):
    z = QuadElem(x, y, d)
    if z.norm() == 0:
        with pytest.raises(ZeroDivisionError):
            z.inverse()
    else:
        assert z * z.inverse() == QuadElem.one(d)
        assert (3 / z) * z == QuadElem(3, 0, d)


@given(small, small)
def test_roots_sum_and_product(p, q):
    alpha, beta = characteristic_roots(p, q)
    assert alpha + beta == QuadElem(p, 0, p * p - 4 * q)
    assert alpha * beta == QuadElem(q, 0, p * p - 4 * q)


def test_mixed_delta_rejected():
    with pytest.raises(ValueError):
        QuadElem(1, 1, 5) + QuadElem(1, 1, 2)


def test_scalar_promotion():
    z = QuadElem(Fraction(1, 2), Fraction(1, 2), 5)
    assert 2 * z == QuadElem(1, 1, 5)
    assert z - Fraction(1, 2) == QuadElem(0, Fraction(1, 2), 5)
    assert 1 - z == QuadElem(Fraction(1, 2), Fraction(-1, 2), 5)


def test_to_int_certification():
    assert QuadElem(7, 0, 5).to_int() == 7
    with pytest.raises(ConsistencyError):
        QuadElem(7, 1, 5).to_int()
    with pytest.raises(ConsistencyError):
        QuadElem(Fraction(7, 2), 0, 5).to_int()


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        quad_pow(QuadElem(1, 1, 5), -1)
