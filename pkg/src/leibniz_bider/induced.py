"""Bider(L) as an algebra in its own right.

The bracket ``[(d, D), (d', D')] = (d d' - d' d, D d' - d' D)`` is expressed
in a basis of biderivations to give structure constants, which can then be
fed back into every tool of :mod:`leibniz_bider.algebra`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    Algebra,
    check_right_leibniz,
    derived_series,
    lower_central_series,
    squares_span,
)
from .catalog import PaperBiderBasis
from .linalg import RowReducer, rank
from .maps import (
    Bider,
    LinMap,
    MapSpace,
    bider_bracket,
    biderivation_space,
    inner_bider_space,
    is_biderivation,
    span_of,
)


@dataclass
class InducedAlgebra:
    source: Algebra
    basis: MapSpace
    algebra: Optional[Algebra]
    closure_ok: bool
    failure: Optional[tuple] = None  # (i, j) of the first bracket leaving the span

    @property
    def dim(self) -> int:
        return self.basis.dim


def structure_constants(elements: Sequence[Bider], labels: Optional[Sequence[str]] = None):
    """Structure constants of the bracket on span(elements).

    Returns ``(algebra, failure)``; ``algebra`` is None and ``failure`` the
    first offending pair (i, j) when a bracket leaves the span.
    """
    elements = list(elements)
    if not elements:
        return None, None
    coords = _named_coordinates(elements)
    table = {}
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            z = bider_bracket(x, y)
            if not z:
                continue
            c = coords(z)
            if c is None:
                return None, (i, j)
            table[(i, j)] = {k: v for k, v in enumerate(c) if v}
    return Algebra(len(elements), table, labels), None


def _inverse(m):
    """Inverse of a square Fraction matrix by Gauss-Jordan on [m | I]."""
    k = len(m)
    red = RowReducer(2 * k)
    for i, row in enumerate(m):
        r = {c: v for c, v in enumerate(row) if v}
        r[k + i] = Fraction(1)
        red.add(r)
    rows = red.dense_rows()
    # rows of [I | m^{-1}]; m^{-1}[r][k'] pairs basis-row coordinates with elements
    return [row[k:] for row in rows]


def bider_algebra(a: Algebra, basis: Optional[MapSpace] = None) -> InducedAlgebra:
    """Bider(L) with structure constants in the canonical solver basis."""
    space = basis if basis is not None else biderivation_space(a)
    labels = tuple(f"B{i + 1}" for i in range(space.dim))
    alg, failure = structure_constants(space.basis, labels) if space.dim else (None, None)
    return InducedAlgebra(a, space, alg, failure is None, failure)


# -- table conformance -------------------------------------------------------


@dataclass
class TableRow:
    left: str
    right: str
    expected: Optional[dict]  # None when the pair is not in the printed table
    computed: Optional[dict]  # None when the bracket leaves span(basis)

    @property
    def ok(self) -> bool:
        return self.computed is not None and (self.expected or {}) == self.computed


@dataclass
class TableReport:
    family: str
    elements: list
    defects: list = field(default_factory=list)  # names failing is_biderivation
    independent: bool = True
    spans_bider: bool = True
    rows: list = field(default_factory=list)

    @property
    def mismatches(self) -> list:
        return [r for r in self.rows if not r.ok]

    @property
    def ok(self) -> bool:
        return not self.defects and self.independent and self.spans_bider and not self.mismatches


def verify_table(a: Algebra, pb: PaperBiderBasis) -> TableReport:
    """Compare every ordered bracket of named elements with the printed table."""
    names = list(pb.names)
    elems = [pb.elements[k] for k in names]
    report = TableReport(str(pb.family), names)
    report.defects = [k for k in names if not is_biderivation(a, pb.elements[k])]
    span = span_of("bider", a.dim, elems)
    report.independent = span.dim == len(elems)
    report.spans_bider = span.dim == biderivation_space(a).dim
    coords = _named_coordinates(elems) if report.independent else None
    for x in names:
        for y in names:
            z = bider_bracket(pb.elements[x], pb.elements[y])
            computed = None
            if coords is not None:
                c = coords(z)
                if c is not None:
                    computed = {names[k]: v for k, v in enumerate(c) if v}
            expected = pb.expected(x, y)
            if not expected:
                report.rows.append(TableRow(x, y, None, computed))
            for expr in expected:
                report.rows.append(TableRow(x, y, dict(expr), computed))
    return report


def _named_coordinates(elems):
    """Map z -> coefficients of z in ``elems`` (None outside their span)."""
    n = elems[0].n
    red = RowReducer(2 * n * n)
    for b in elems:
        if not red.add({i: v for i, v in enumerate(b.vector()) if v}):
            raise ValueError("biderivations are linearly dependent")
    change = _inverse([red.coordinates(b.vector()) for b in elems])
    k = len(elems)

    def coords(z):
        rc = red.coordinates(z.vector())
        if rc is None:
            return None
        out = [Fraction(0)] * k
        for r, x in enumerate(rc):
            if x:
                for t, y in enumerate(change[r]):
                    if y:
                        out[t] += x * y
        return out

    return coords


# -- innerness, fingerprints, homomorphisms ----------------------------------


@dataclass(frozen=True)
class InnernessReport:
    dim_bider: int
    dim_inner: int
    inner_equals_all: bool


def innerness(a: Algebra) -> InnernessReport:
    bider = biderivation_space(a)
    inner = inner_bider_space(a)
    contained = all(bider.coordinates(m) is not None for m in inner)
    return InnernessReport(bider.dim, inner.dim, contained and inner.dim == bider.dim)


@dataclass(frozen=True)
class InvariantFingerprint:
    dim: int
    lower_central: tuple
    derived: tuple
    squares: int
    bracket_rank: int  # rank of L (x) L -> L, i.e. dim [L, L]
    left_annihilator: int  # dim {x : [x, L] = 0}
    right_annihilator: int  # dim {x : [L, x] = 0}


def fingerprint(a: Algebra) -> InvariantFingerprint:
    n = a.dim
    c = a.dense()
    image_rows = [c[i][j] for i in range(n) for j in range(n)]
    # x -> ([x, e_j])_j and x -> ([e_i, x])_i as n^2 x n matrices
    left = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    right = [[c[i][j][k] for j in range(n)] for i in range(n) for k in range(n)]
    return InvariantFingerprint(
        dim=n,
        lower_central=lower_central_series(a).dims,
        derived=derived_series(a).dims,
        squares=squares_span(a).dim,
        bracket_rank=rank(image_rows, n),
        left_annihilator=n - rank(left, n),
        right_annihilator=n - rank(right, n),
    )


@dataclass(frozen=True)
class HomCheck:
    ok: bool
    invertible: bool
    witness: Optional[tuple] = None  # (i, j, p([e_i,e_j]) - [p(e_i), p(e_j)])

    def __bool__(self) -> bool:
        return self.ok


def verify_hom(src: Algebra, dst: Algebra, p: LinMap) -> HomCheck:
    """True iff p is invertible and p([x, y]) = [p(x), p(y)] on basis pairs."""
    if src.dim != dst.dim or p.n != src.dim:
        raise ValueError("source, target and map dimensions must agree")
    n = src.dim
    invertible = rank(p.matrix, n) == n
    imgs = [p.image(j) for j in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = p(src.basis_bracket(i, j))
            rhs = dst.bracket(imgs[i], imgs[j])
            if lhs != rhs:
                return HomCheck(False, invertible, (i, j, tuple(x - y for x, y in zip(lhs, rhs))))
    return HomCheck(invertible, invertible)


def induced_is_leibniz(ind: InducedAlgebra) -> bool:
    return ind.algebra is None or not check_right_leibniz(ind.algebra)
