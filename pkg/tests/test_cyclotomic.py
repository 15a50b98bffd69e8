from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from macdetect.cyclotomic import (
    CycloNum,
    cyclo_from_json,
    cyclo_to_json,
    cyclotomic_poly,
    euler_phi,
    format_rational,
    parse_rational,
    root_of_unity_filter,
    root_power,
)


@pytest.mark.parametrize("t, expected", [(1, (-1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)),
                                         (6, (1, -1, 1)), (12, (1, 0, -1, 0, 1))])
def test_cyclotomic_poly(t, expected):
    assert cyclotomic_poly(t) == expected


def test_phi_degree_matches_totient():
    from math import gcd
    for t in range(1, 40):
        assert euler_phi(t) == sum(1 for a in range(1, t + 1) if gcd(a, t) == 1)


def test_cyclo_mul_examples():
    z3 = root_power(3, 1)
    assert z3 * z3 == CycloNum(3, (Fraction(-1), Fraction(-1)))
    assert z3 * CycloNum(3, (Fraction(-1), Fraction(-1))) == 1
    z4 = root_power(4, 1)
    assert z4 * z4 == -1


def test_conductor_mismatch():
    with pytest.raises(ValueError):
        root_power(3, 1) * root_power(4, 1)


@pytest.mark.parametrize("t, j, expected", [(3, 3, (1, 0)), (3, 2, (-1, -1)), (4, 6, (-1, 0))])
def test_root_power(t, j, expected):
    assert root_power(t, j).coeffs == tuple(Fraction(x) for x in expected)


def test_t1_and_t2_degenerate_to_rationals():
    assert root_power(1, 5) == 1
    assert root_power(2, 1) == -1
    assert euler_phi(1) == euler_phi(2) == 1


conductors = st.integers(min_value=1, max_value=15)
small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclo_triples(draw):
    t = draw(conductors)
    phi = euler_phi(t)
    make = lambda: CycloNum(t, tuple(draw(st.lists(small_q, min_size=phi, max_size=phi))))
    return make(), make(), make()


@given(cyclo_triples())
def test_ring_axioms(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert (a - b).is_zero() == (a == b)


@given(conductors, st.integers(-50, 50), st.integers(-50, 50))
def test_root_power_multiplicative_and_periodic(t, i, j):
    assert root_power(t, i) * root_power(t, j) == root_power(t, i + j)
    assert root_power(t, j + t) == root_power(t, j)


@given(conductors, st.integers(-60, 60))
def test_root_of_unity_filter(t, m):
    assert root_of_unity_filter(t, m) == (t if m % t == 0 else 0)


def test_root_power_matches_complex_embedding():
    # independent check through floating point, only as an oracle
    import cmath
    for t in (5, 7, 8, 9, 12):
        for j in range(t):
            z = root_power(t, j)
            val = sum(float(c) * cmath.exp(2j * cmath.pi * p / t) for p, c in enumerate(z.coeffs))
            assert abs(val - cmath.exp(2j * cmath.pi * j / t)) < 1e-9


def test_serialization_roundtrip():
    z = root_power(7, 3) * Fraction(-5, 3) + 2
    assert cyclo_from_json(cyclo_to_json(z)) == z
    assert cyclo_to_json(root_power(3, 2)) == {"t": 3, "coeffs": ["-1", "-1"]}
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(-7) == "-7"
    assert parse_rational("-10/4") == Fraction(-5, 2)
    big = 10**70 + 1
    assert parse_rational(format_rational(big)) == big
