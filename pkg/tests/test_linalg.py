from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibniz_bider.linalg import RowReducer, mat_vec, nullspace, rank, rat, rat_str, rref, solve, row_space

from helpers import sym_rank


def test_rref_identity():
    e = rref([[1, 0], [0, 1]])
    assert e.rref == ((1, 0), (0, 1))
    assert e.pivot_cols == (0, 1)
    assert e.rank == 2


def test_rref_proportional_rows():
    e = rref([[2, 4], [1, 2]])
    assert e.rref == ((1, 2), (0, 0))
    assert e.pivot_cols == (0,)
    assert e.rank == 1


def test_rref_permutation():
    e = rref([[0, 1], [1, 0]])
    assert e.rref == ((1, 0), (0, 1))
    assert e.rank == 2


def test_rref_empty_needs_ncols():
    with pytest.raises(ValueError):
        rref([])
    assert rref([], ncols=3).rank == 0


def test_ragged_matrix_rejected():
    with pytest.raises(ValueError):
        rref([[1, 2], [3]])


def test_nullspace_examples():
    assert nullspace([[1, 0], [0, 1]]) == []
    assert nullspace([[1, -1]]) == [(1, 1)]
    assert nullspace([[1, 2, 3]]) == [(-2, 1, 0), (-3, 0, 1)]


def test_solve_examples():
    assert solve([[1, 0], [0, 1]], [F(3, 2), -7]) == (F(3, 2), -7)
    assert solve([[1, 1]], [2]) == (2, 0)
    assert solve([[1], [1]], [1, 2]) is None


def test_solve_length_mismatch():
    with pytest.raises(ValueError):
        solve([[1, 0]], [1, 2])


def test_rat_coercion():
    assert rat("3/6") == F(1, 2)
    assert rat(F(2)) == 2
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        rat(True)
    assert rat_str(F(-4, 6)) == "-2/3"
    assert rat_str(F(5)) == "5"


def test_coordinates_outside_span():
    red = RowReducer(3)
    red.add({0: F(1), 1: F(1)})
    assert red.coordinates((2, 2, 0)) == (2,)
    assert red.coordinates((0, 0, 1)) is None


def test_row_space_is_canonical():
    a = row_space([(1, 2, 3), (2, 4, 7)], 3)
    b = row_space([(0, 0, 5), (3, 6, 9), (1, 2, 4)], 3)
    assert a == b == [(1, 2, 0), (0, 0, 1)]


small = st.integers(-3, 3).map(F)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(small) for _ in range(c)] for _ in range(r)]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    c = len(m[0])
    ns = nullspace(m)
    assert rank(m) + len(ns) == c
    for v in ns:
        assert not any(mat_vec(m, v))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_idempotent_and_matches_sympy(m):
    e = rref(m)
    assert rref(e.rref) == e
    assert e.rank == sym_rank(m, len(m[0]))


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_solve_solutions_satisfy_system(m, data):
    x0 = [data.draw(small) for _ in range(len(m[0]))]
    b = mat_vec(m, x0)
    x = solve(m, b)
    assert x is not None
    assert mat_vec(m, x) == b
