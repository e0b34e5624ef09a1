"""Exact biderivation computations for finite-dimensional Leibniz algebras."""

from .algebra import (
    Algebra,
    SeriesReport,
    Subspace,
    Violation,
    check_left_leibniz,
    check_right_leibniz,
    derived_series,
    filiform_check,
    is_nilpotent,
    is_right_leibniz,
    is_solvable,
    lower_central_series,
    squares_span,
)
from .catalog import (
    FamilyId,
    ParametricForm,
    PaperBiderBasis,
    expected_dim,
    make_algebra,
    paper_bider_basis,
    paper_form,
)
from .induced import (
    InducedAlgebra,
    bider_algebra,
    fingerprint,
    innerness,
    verify_hom,
    verify_table,
)
from .io import AlgebraFileError, dump_algebra, load_algebra, parse_algebra
from .linalg import RowReducer, nullspace, rank, rat, rref, solve
from .maps import (
    Bider,
    LinMap,
    MapSpace,
    antiderivation_space,
    bider_bracket,
    biderivation_space,
    biderivation_space_by_intersection,
    der_bracket,
    derivation_space,
    inner_bider_space,
    inner_biderivation,
    is_antiderivation,
    is_biderivation,
    is_derivation,
    span_contains,
)

__version__ = "0.1.0"
