from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from macdetect.linalg import InconsistentSystem, echelon, rank, solve


def fraction_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c]:
                f = m[i][c] / m[rk][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


entries = st.one_of(st.integers(-6, 6), st.fractions(min_value=-3, max_value=3, max_denominator=5))


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(entries) for _ in range(c)] for _ in range(r)]


@given(matrices())
def test_rank_matches_oracle(A):
    assert rank(A) == fraction_rank(A)


@given(matrices())
def test_echelon_shape(A):
    rows, pivots = echelon(A)
    assert pivots == sorted(set(pivots))
    for row, p in zip(rows, pivots):
        assert all(isinstance(x, int) for x in row)
        assert row[p] != 0 and not any(row[:p])


@given(matrices(), st.data())
def test_solve_consistent(A, data):
    # b built from a hidden solution is always consistent
    hidden = [data.draw(st.integers(-4, 4)) for _ in A[0]]
    b = [sum(Fraction(a) * x for a, x in zip(row, hidden)) for row in A]
    x, nullity = solve(A, b)
    assert all(sum(Fraction(a) * xi for a, xi in zip(row, x)) == bi for row, bi in zip(A, b))
    assert nullity == len(A[0]) - fraction_rank(A)


@given(matrices())
def test_solve_inconsistent_detected(A):
    # append a zero row with rhs 1: never solvable
    A2 = A + [[0] * len(A[0])]
    b = [0] * len(A) + [1]
    with pytest.raises(InconsistentSystem):
        solve(A2, b)


def test_solve_examples():
    x, nullity = solve([[1, 1], [1, -1]], [3, 1])
    assert x == [2, 1] and nullity == 0
    x, nullity = solve([[1, 2, 3]], [6])
    assert nullity == 2
    assert x[0] + 2 * x[1] + 3 * x[2] == 6
    with pytest.raises(ValueError):
        solve([[1, 2]], [1, 2])
    assert rank([[0, 0], [0, 0]]) == 0
