from itertools import islice

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genfib.genfam import (FamilyIndex, decompose, u2_next, u2_sequence,
                           u2_short_even, u2_short_odd, u2_short_sequence,
                           u_family, u_family_binet, v2_next, v2_sequence,
                           v_family, v_family_binet)
from genfib.horadam import DegenerateDiscriminantError, SequenceParams, u_n, v_n
from conftest import SIX_PAIRS
from oracles import family_list, u_list, v_list

FIB = SequenceParams(1, -1)
PAIRS = [SequenceParams(p, q) for p, q in SIX_PAIRS]


@pytest.mark.parametrize("n,k,m,r", [(7, 2, 3, 1), (6, 3, 2, 0), (0, 5, 0, 0)])
def test_decompose(n, k, m, r):
    assert decompose(n, k) == FamilyIndex(n, k, m, r)


def test_decompose_rejects_zero_k():
    with pytest.raises(ValueError, match="k must be positive"):
        decompose(3, 0)


@given(st.integers(0, 10**6), st.integers(1, 1000))
def test_decompose_invariant(n, k):
    idx = decompose(n, k)
    assert idx.n == idx.m * idx.k + idx.r and 0 <= idx.r < k


def test_u_family_fibonacci_k2():
    expected = [0, 0, 1, 1, 1, 2, 4, 6, 9, 15, 25]
    assert family_list(u_list(1, -1, 12), 2, 11) == expected
    assert [u_family(FIB, n, 2) for n in range(11)] == expected


@pytest.mark.parametrize("params", PAIRS, ids=str)
def test_family_matches_oracle(params):
    us, vs = u_list(params.p, params.q, 202), v_list(params.p, params.q, 202)
    for k in range(1, 6):
        assert [u_family(params, n, k) for n in range(200)] == family_list(us, k, 200)
        assert [v_family(params, n, k) for n in range(200)] == family_list(vs, k, 200)


@pytest.mark.parametrize("params", PAIRS, ids=str)
def test_reduction_at_k1(params):
    for n in range(101):
        assert u_family(params, n, 1) == u_n(params, n)
        assert v_family(params, n, 1) == v_n(params, n)


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(1, 8))
def test_first_terms(p, q, k):
    params = SequenceParams(p, q)
    assert v_family(params, 0, k) == 2**k
    assert all(u_family(params, n, k) == 0 for n in range(k))
    assert u_family(params, k, k) == 1


@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(0, 30), st.integers(1, 6))
def test_block_structure(p, q, m, k):
    params = SequenceParams(p, q)
    assert u_family(params, m * k, k) == u_n(params, m) ** k


def test_binet_examples():
    assert u_family_binet(FIB, 8, 2) == u_family(FIB, 8, 2) == 9
    pell = SequenceParams(2, -1)
    assert v_family_binet(pell, 3, 2) == v_n(pell, 1) * v_n(pell, 2) == 12
    for params in PAIRS:
        if params.delta:
            for k in range(1, 5):
                assert u_family_binet(params, k, k) == 1


def test_binet_degenerate():
    with pytest.raises(DegenerateDiscriminantError):
        u_family_binet(SequenceParams(2, 1), 4, 2)
    assert v_family_binet(SequenceParams(2, 1), 4, 2) == v_family(SequenceParams(2, 1), 4, 2)


def test_fourth_order_examples():
    u2 = [u_family(FIB, n, 2) for n in range(9)]
    assert u2_next(FIB, u2[2:6], 6) == 2 + 1 + 1 == u2[6] == 4
    assert u2_next(FIB, u2[4:8], 8) == 6 + 2 + 1 == u2[8] == 9
    v2 = [v_family(FIB, n, 2) for n in range(5)]
    assert v2_next(FIB, v2[0:4], 4) == 3 + 2 + 4 == v2[4] == 9


def test_fourth_order_errors():
    with pytest.raises(ValueError):
        u2_next(FIB, [0, 0, 1], 4)
    with pytest.raises(ValueError):
        u2_next(FIB, [0, 0, 1, 1], 3)


def test_short_examples():
    assert u2_short_even(FIB, 4) == 6 + 4 - 1 == u_family(FIB, 8, 2) == 9
    assert u2_short_odd(FIB, 3) == 4 + 2 == u_family(FIB, 7, 2) == 6
    for params in PAIRS:
        assert u2_short_even(params, 1) == 1 == u_family(params, 2, 2)


@pytest.mark.parametrize("params", PAIRS, ids=str)
def test_triple_path_equivalence(params):
    chain_u = list(u2_sequence(params, 201))
    chain_v = list(v2_sequence(params, 201))
    short_u = list(u2_short_sequence(params, 201))
    for n in range(201):
        product = u_family(params, n, 2)
        assert chain_u[n] == short_u[n] == product
        assert chain_v[n] == v_family(params, n, 2)
        if params.delta:
            assert u_family_binet(params, n, 2) == product
            assert v_family_binet(params, n, 2) == chain_v[n]


@pytest.mark.parametrize("params", PAIRS, ids=str)
def test_short_rules_agree_with_fourth_order(params):
    for m in range(2, 100):
        hist = [u_family(params, j, 2) for j in range(2 * m - 4, 2 * m)]
        assert u2_short_even(params, m) == u2_next(params, hist, 2 * m)
        hist = [u_family(params, j, 2) for j in range(2 * m - 3, 2 * m + 1)]
        assert u2_short_odd(params, m) == u2_next(params, hist, 2 * m + 1)


@pytest.mark.parametrize("params", PAIRS, ids=str)
def test_two_index_identity(params):
    for s in range(2, 101):
        assert u_family(params, 2 * (s - 1), 2) == \
            params.q ** (s - 2) + u_n(params, s) * u_n(params, s - 2)


def test_sequences_are_lazy():
    assert list(islice(u2_sequence(FIB, 10**9), 7)) == [0, 0, 1, 1, 1, 2, 4]
