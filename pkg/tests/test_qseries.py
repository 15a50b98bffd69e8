from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from macdetect.cyclotomic import root_power
from macdetect.qseries import QSeries, apply_D, lambda_series, series_add, series_mul, series_scale


def S(*values):
    return QSeries.from_list(values)


def test_add_and_scale():
    assert series_add(S(1, 1), S(1, -1)) == S(2, 0)
    assert series_scale(0, S(3, 4, 5)).is_zero()
    a = S(1, 2, 3)
    assert a + QSeries.zero(2) == a


def test_mixed_order_truncates_to_shorter():
    assert (S(1, 1, 1) + S(1, 1)).order == 1
    assert series_mul(S(1, 1, 1, 1), S(1, 1)).order == 1


def test_ring_mismatch():
    with pytest.raises(ValueError):
        S(1, 2) + S(1, 2).embed(3)


def test_mul_examples():
    assert series_mul(S(1, 1, 0), S(1, 1, 0)) == S(1, 2, 1)
    x = S(0, 1, 1, 1, 1)
    assert series_mul(x, x)[4] == 3
    assert series_mul(x, QSeries.zero(4)).is_zero()


def test_apply_D_examples():
    assert apply_D(S(0, 1, 1, 1), 1) == S(0, 1, 2, 3)
    a = S(5, 1, 7)
    assert apply_D(a, 0) == a
    assert apply_D(S(1, 0, 1), 2) == S(0, 0, 4)


def test_lambda_series_examples():
    assert lambda_series(1, 1, 4) == S(0, 1, 2, 3, 4)
    assert lambda_series(0, 2, 6) == S(0, 0, 1, 0, 1, 0, 1)
    assert lambda_series(3, 2, 6) == S(0, 0, 1, 0, 8, 0, 27)


def test_lambda_matches_rational_function():
    # q/(1-q)^2 expanded by repeated multiplication with the geometric series
    N = 12
    geo = S(*([1] * (N + 1)))
    q = S(0, 1, *([0] * (N - 1)))
    assert series_mul(series_mul(q, geo), geo) == lambda_series(1, 1, N)


def test_cyclotomic_series_arithmetic():
    z = root_power(3, 1)
    a = QSeries.from_list([1, z, z * z], ring=3)
    sq = series_mul(a, a)
    assert sq[2] == z * z + z * z + z * z
    assert a.scale(z)[2] == 1


series_st = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.fractions(-4, 4, max_denominator=5), min_size=n + 1, max_size=n + 1))


@given(series_st, series_st, series_st)
def test_mul_commutative_associative(a, b, c):
    A, B, C = S(*a), S(*b), S(*c)
    assert series_mul(A, B) == series_mul(B, A)
    assert series_mul(series_mul(A, B), C) == series_mul(A, series_mul(B, C))


@given(series_st, series_st)
def test_D_is_a_derivation(a, b):
    A, B = S(*a), S(*b)
    lhs = apply_D(series_mul(A, B), 1)
    rhs = series_mul(apply_D(A, 1), B) + series_mul(A, apply_D(B, 1))
    assert lhs == rhs


@given(st.integers(0, 6), st.integers(1, 6), st.integers(1, 40))
def test_D_on_lambda_raises_exponent(v, s, N):
    assert apply_D(lambda_series(v, s, N), 1) == lambda_series(v + 1, s, N).scale(s)


def test_to_json():
    assert S(Fraction(1, 2), 3).to_json() == {"order": 1, "coeffs": ["1/2", "3"]}
