from fractions import Fraction as F

import pytest

from leibniz_bider.algebra import (
    Algebra,
    Subspace,
    check_left_leibniz,
    check_right_leibniz,
    derived_series,
    filiform_check,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    product_subspace,
    squares_span,
)
from leibniz_bider.catalog import make_algebra

SL2 = Algebra(3, {
    (0, 1): {2: 1}, (1, 0): {2: -1},
    (2, 0): {0: 2}, (0, 2): {0: -2},
    (2, 1): {1: -2}, (1, 2): {1: 2},
})


def test_bracket_examples():
    nf3 = make_algebra(("NF", 3))
    e = [nf3.basis_vector(i) for i in range(3)]
    assert nf3.bracket(e[0], e[0]) == e[1]
    assert nf3.bracket((0, 0, 0), (1, 2, 3)) == (0, 0, 0)
    f1 = make_algebra(("F1", 4))
    assert f1.bracket(f1.basis_vector(0), f1.basis_vector(0)) == f1.basis_vector(2)


def test_bracket_dimension_mismatch():
    with pytest.raises(ValueError):
        make_algebra(("NF", 3)).bracket((1, 0), (1, 0, 0))


def test_invalid_tables():
    with pytest.raises(ValueError):
        Algebra(0)
    with pytest.raises(ValueError):
        Algebra(2, {(0, 2): {0: 1}})
    with pytest.raises(ValueError):
        Algebra(2, {}, labels=["a"])


def test_right_leibniz_catalog_examples():
    assert check_right_leibniz(make_algebra(("NF", 5))) == []
    assert check_right_leibniz(make_algebra(("F2", 5))) == []


def test_single_entry_table_is_right_leibniz():
    # [e1,e2]=e1: both sides of the right identity at (1,2,2) equal e1
    a = Algebra(2, {(0, 1): {0: 1}})
    assert check_right_leibniz(a) == []
    assert [v.triple for v in check_left_leibniz(a)] == [(0, 1, 1)]


def test_violation_witness():
    a = Algebra(2, {(0, 0): {0: 1}})
    (v,) = check_right_leibniz(a)
    assert v.triple == (0, 0, 0)
    assert v.residual == (-1, 0)


def test_left_leibniz():
    assert check_left_leibniz(Algebra(3)) == []
    assert check_left_leibniz(make_algebra(("NF", 3))) != []
    assert check_left_leibniz(SL2) == []
    assert check_right_leibniz(SL2) == []


def test_product_subspace():
    nf3 = make_algebra(("NF", 3))
    full = Subspace.full(3)
    p = product_subspace(nf3, full, full)
    assert p.dim == 2
    assert p.basis == ((0, 1, 0), (0, 0, 1))
    assert product_subspace(nf3, Subspace(3), full).dim == 0
    assert product_subspace(Algebra(3), full, full).dim == 0


def test_series_examples():
    lc = lower_central_series(make_algebra(("NF", 4)))
    assert lc.dims == (4, 3, 2, 1, 0)
    assert lc.index == 5
    ab = lower_central_series(Algebra(3))
    assert ab.dims == (3, 0) and ab.index == 2
    r = make_algebra(("R_NF", 3))
    assert not is_nilpotent(r)
    assert lower_central_series(r).dims == (4, 3, 3)
    assert is_solvable(make_algebra(("NF", 4)))
    assert is_solvable(r)
    ds = derived_series(SL2)
    assert ds.dims == (3, 3) and not ds.reaches_zero


def test_filiform():
    assert filiform_check(make_algebra(("F1", 5)))
    assert filiform_check(make_algebra(("F2", 5)))
    assert not filiform_check(make_algebra(("NF", 5)))
    assert not filiform_check(Algebra(4))


def test_squares_span():
    s = squares_span(make_algebra(("NF", 4)))
    assert s.dim == 3
    assert squares_span(SL2).dim == 0


def test_equality_and_hash():
    a = Algebra(2, {(0, 0): {1: F(1, 2)}})
    b = Algebra(2, {(0, 0): {1: "1/2"}, (1, 1): {0: 0}})
    assert a == b and hash(a) == hash(b)
