"""Derivations, anti-derivations and biderivations of an algebra.

Each space is the kernel of a linear system in the matrix entries of the
unknown map(s).  A map is an n x n matrix whose column j is the image of
``e_j``; it is vectorized row-major, and a biderivation ``(d, D)`` as
``vec(d) + vec(D)``.  Spaces are returned with the canonical RREF basis
under that vectorization, so two routes to the same space produce equal
bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Literal, Optional, Sequence, Union

from .algebra import Algebra, is_right_leibniz
from .linalg import RowReducer, rat

ZERO = Fraction(0)
ONE = Fraction(1)

Kind = Literal["der", "antider", "bider"]


@dataclass(frozen=True)
class LinMap:
    """Square matrix acting on column vectors; column j is the image of e_j."""

    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(rat(v) for v in row) for row in self.matrix)
        n = len(m)
        if any(len(r) != n for r in m):
            raise ValueError("LinMap matrix must be square")
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def zero(cls, n: int) -> "LinMap":
        return cls(tuple((ZERO,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> "LinMap":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_entries(cls, n: int, entries) -> "LinMap":
        """Build from ``{(row, col): value}`` with 0-based indices."""
        m = [[ZERO] * n for _ in range(n)]
        for (i, j), v in dict(entries).items():
            m[i][j] += rat(v)
        return cls(tuple(map(tuple, m)))

    @classmethod
    def from_vector(cls, n: int, vec: Sequence) -> "LinMap":
        return cls(tuple(tuple(vec[i * n:(i + 1) * n]) for i in range(n)))

    @classmethod
    def from_images(cls, images: Sequence[Sequence]) -> "LinMap":
        """``images[j]`` is the image of e_j."""
        n = len(images)
        return cls(tuple(tuple(images[j][i] for j in range(n)) for i in range(n)))

    def vector(self) -> tuple:
        return tuple(v for row in self.matrix for v in row)

    def image(self, j: int) -> tuple:
        return tuple(row[j] for row in self.matrix)

    def __call__(self, x: Sequence) -> tuple:
        nz = [(k, v) for k, v in enumerate(x) if v]
        return tuple(sum((row[k] * v for k, v in nz if row[k]), ZERO) for row in self.matrix)

    def __matmul__(self, other: "LinMap") -> "LinMap":
        # maps here are mostly sparse; skip zero entries of the left factor
        n = self.n
        rhs = other.matrix
        out = []
        for row in self.matrix:
            acc = [ZERO] * n
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(rhs[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return LinMap(tuple(out))

    def __add__(self, other: "LinMap") -> "LinMap":
        return LinMap(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def __neg__(self) -> "LinMap":
        return LinMap(tuple(tuple(-a for a in r) for r in self.matrix))

    def __rmul__(self, c) -> "LinMap":
        c = rat(c)
        return LinMap(tuple(tuple(c * a for a in r) for r in self.matrix))

    def __bool__(self) -> bool:
        return any(any(r) for r in self.matrix)


@dataclass(frozen=True)
class Bider:
    """Pair (d, D): derivation part and anti-derivation part."""

    d: LinMap
    D: LinMap

    def __post_init__(self):
        if self.d.n != self.D.n:
            raise ValueError("biderivation components differ in size")

    @property
    def n(self) -> int:
        return self.d.n

    @classmethod
    def zero(cls, n: int) -> "Bider":
        return cls(LinMap.zero(n), LinMap.zero(n))

    @classmethod
    def from_vector(cls, n: int, vec: Sequence) -> "Bider":
        return cls(LinMap.from_vector(n, vec[:n * n]), LinMap.from_vector(n, vec[n * n:]))

    def vector(self) -> tuple:
        return self.d.vector() + self.D.vector()

    def __add__(self, other: "Bider") -> "Bider":
        return Bider(self.d + other.d, self.D + other.D)

    def __sub__(self, other: "Bider") -> "Bider":
        return Bider(self.d - other.d, self.D - other.D)

    def __neg__(self) -> "Bider":
        return Bider(-self.d, -self.D)

    def __rmul__(self, c) -> "Bider":
        return Bider(c * self.d, c * self.D)

    def __bool__(self) -> bool:
        return bool(self.d) or bool(self.D)


Element = Union[LinMap, Bider]


@dataclass
class MapSpace:
    """Linear space of maps with a canonical RREF basis."""

    kind: Kind
    n: int
    basis: list
    warnings: tuple = ()
    _reducer: Optional[RowReducer] = field(default=None, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def nvars(self) -> int:
        return self.n * self.n * (2 if self.kind == "bider" else 1)

    def reducer(self) -> RowReducer:
        if self._reducer is None:
            red = RowReducer(self.nvars)
            for b in self.basis:
                red.add(_sparse(b.vector()))
            self._reducer = red
        return self._reducer

    def element(self, vec: Sequence) -> Element:
        if self.kind == "bider":
            return Bider.from_vector(self.n, vec)
        return LinMap.from_vector(self.n, vec)

    def coordinates(self, m: Element):
        """Coefficients of m in ``basis`` or None if m is outside the space."""
        return self.reducer().coordinates(m.vector())

    def combination(self, coeffs: Sequence) -> Element:
        vec = [ZERO] * self.nvars
        for c, b in zip(coeffs, self.basis):
            c = rat(c)
            if c:
                for i, v in enumerate(b.vector()):
                    vec[i] += c * v
        return self.element(vec)

    def __iter__(self) -> Iterator:
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)


def _sparse(vec) -> dict:
    return {i: v for i, v in enumerate(vec) if v}


def space_from_vectors(kind: Kind, n: int, vectors, warnings=()) -> MapSpace:
    """Canonical space spanned by the given vectorized maps."""
    nvars = n * n * (2 if kind == "bider" else 1)
    red = RowReducer(nvars)
    for v in vectors:
        red.add(_sparse(v))
    space = MapSpace(kind, n, [], tuple(warnings))
    space.basis = [space.element(v) for v in red.dense_rows()]
    space._reducer = red
    return space


def span_of(kind: Kind, n: int, elements) -> MapSpace:
    return space_from_vectors(kind, n, (m.vector() for m in elements))


# -- system assembly ---------------------------------------------------------
#
# Unknown d[k][l] (row k, column l) sits at index k*n + l; the anti-derivation
# part of a biderivation is offset by n*n.  For each basis pair (i, j) and
# output coordinate m one equation is emitted, so the generators yield n rows
# per pair (possibly empty); system_rows drops the empty ones.


def _der_rows(a: Algebra, off: int = 0):
    """d([e_i,e_j]) - [d(e_i), e_j] - [e_i, d(e_j)] = 0."""
    n = a.dim
    for i in range(n):
        for j in range(n):
            rows = [dict() for _ in range(n)]
            for p, v in a.structure(i, j).items():
                for m in range(n):
                    _acc(rows[m], off + m * n + p, v)
            for k in range(n):
                for m, v in a.structure(k, j).items():
                    _acc(rows[m], off + k * n + i, -v)
                for m, v in a.structure(i, k).items():
                    _acc(rows[m], off + k * n + j, -v)
            yield from rows


def _antider_rows(a: Algebra, off: int = 0, left: bool = False):
    """Right: D([e_i,e_j]) - [D(e_i), e_j] + [D(e_j), e_i] = 0.

    Left: D([e_i,e_j]) - [e_i, D(e_j)] + [e_j, D(e_i)] = 0.
    """
    n = a.dim
    for i in range(n):
        for j in range(n):
            rows = [dict() for _ in range(n)]
            for p, v in a.structure(i, j).items():
                for m in range(n):
                    _acc(rows[m], off + m * n + p, v)
            for k in range(n):
                if left:
                    for m, v in a.structure(i, k).items():
                        _acc(rows[m], off + k * n + j, -v)
                    for m, v in a.structure(j, k).items():
                        _acc(rows[m], off + k * n + i, v)
                else:
                    for m, v in a.structure(k, j).items():
                        _acc(rows[m], off + k * n + i, -v)
                    for m, v in a.structure(k, i).items():
                        _acc(rows[m], off + k * n + j, v)
            yield from rows


def _compat_rows(a: Algebra):
    """[e_i, d(e_j)] - [e_i, D(e_j)] = 0 over all basis pairs."""
    n = a.dim
    nn = n * n
    for i in range(n):
        for j in range(n):
            rows = [dict() for _ in range(n)]
            for k in range(n):
                for m, v in a.structure(i, k).items():
                    _acc(rows[m], k * n + j, v)
                    _acc(rows[m], nn + k * n + j, -v)
            yield from rows


def _acc(row: dict, col: int, v: Fraction) -> None:
    nv = row.get(col, 0) + v
    if nv:
        row[col] = nv
    else:
        row.pop(col, None)


def system_rows(a: Algebra, kind: Kind, left: bool = False) -> list:
    """Nonzero rows (sparse dicts) of the defining system for ``kind``."""
    if kind == "der":
        rows = _der_rows(a)
    elif kind == "antider":
        rows = _antider_rows(a, left=left)
    elif kind == "bider":
        nn = a.dim * a.dim
        rows = _chain(_der_rows(a), _antider_rows(a, off=nn), _compat_rows(a))
    else:
        raise ValueError(f"unknown map kind {kind!r}")
    return [r for r in rows if r]


def system_matrix(a: Algebra, kind: Kind, left: bool = False) -> list:
    """Dense form of the defining system, all n^3 (3 n^3 for bider) rows."""
    n = a.dim
    nvars = n * n * (2 if kind == "bider" else 1)
    if kind == "der":
        rows = _der_rows(a)
    elif kind == "antider":
        rows = _antider_rows(a, left=left)
    else:
        rows = _chain(_der_rows(a), _antider_rows(a, off=n * n), _compat_rows(a))
    out = []
    for r in rows:
        v = [ZERO] * nvars
        for c, x in r.items():
            v[c] = x
        out.append(tuple(v))
    return out


def _chain(*its):
    for it in its:
        yield from it


def _solve_space(a: Algebra, kind: Kind, left: bool = False) -> MapSpace:
    n = a.dim
    nvars = n * n * (2 if kind == "bider" else 1)
    red = RowReducer(nvars)
    red.extend(system_rows(a, kind, left))
    warnings = () if is_right_leibniz(a) else ("input is not a right Leibniz algebra",)
    return space_from_vectors(kind, n, red.nullspace(), warnings)


def derivation_space(a: Algebra) -> MapSpace:
    return _solve_space(a, "der")


def antiderivation_space(a: Algebra, left: bool = False) -> MapSpace:
    """Anti-derivations; ``left=True`` uses the left-Leibniz identity."""
    return _solve_space(a, "antider", left)


def biderivation_space(a: Algebra) -> MapSpace:
    """All pairs (d, D) solved jointly from one stacked system in 2n^2 unknowns."""
    return _solve_space(a, "bider")


def biderivation_space_by_intersection(a: Algebra) -> MapSpace:
    """Bider(L) built from Der(L) x AntiDer(L) cut down by [x, d(y)] = [x, D(y)].

    Independent of the stacked route in :func:`biderivation_space`: the pair
    is parametrized by coordinates in the two precomputed bases and only the
    compatibility equations are solved.
    """
    der = derivation_space(a)
    anti = antiderivation_space(a)
    n = a.dim
    p, q = der.dim, anti.dim
    gens = [Bider(m, LinMap.zero(n)) for m in der] + [Bider(LinMap.zero(n), m) for m in anti]
    # column t of the compatibility matrix: residuals [e_i, d(e_j)] - [e_i, D(e_j)] of gens[t]
    cols = []
    for g in gens:
        col = []
        for i in range(n):
            ei = a.basis_vector(i)
            for j in range(n):
                col.extend(x - y for x, y in zip(a.bracket(ei, g.d.image(j)), a.bracket(ei, g.D.image(j))))
        cols.append(col)
    red = RowReducer(p + q)
    nrows = len(cols[0]) if cols else 0
    for r in range(nrows):
        red.add({t: cols[t][r] for t in range(p + q) if cols[t][r]})
    vectors = []
    for coeffs in red.nullspace():
        b = Bider.zero(n)
        for c, g in zip(coeffs, gens):
            if c:
                b = b + c * g
        vectors.append(b.vector())
    return space_from_vectors("bider", n, vectors)


# -- adjoints and predicates -------------------------------------------------


def inner_derivation(a: Algebra, x: Sequence) -> LinMap:
    """Matrix of y -> [y, x]."""
    x = _vec(a, x)
    return LinMap.from_images([a.bracket(a.basis_vector(j), x) for j in range(a.dim)])


def left_adjoint(a: Algebra, x: Sequence) -> LinMap:
    """Matrix of y -> [x, y]."""
    x = _vec(a, x)
    return LinMap.from_images([a.bracket(x, a.basis_vector(j)) for j in range(a.dim)])


def inner_biderivation(a: Algebra, x: Sequence) -> Bider:
    """The pair (-ad_x, Ad_x)."""
    return Bider(-inner_derivation(a, x), left_adjoint(a, x))


def inner_bider_space(a: Algebra) -> MapSpace:
    return span_of("bider", a.dim, (inner_biderivation(a, a.basis_vector(i)) for i in range(a.dim)))


def _vec(a: Algebra, x) -> tuple:
    x = tuple(rat(v) for v in x)
    if len(x) != a.dim:
        raise ValueError(f"vector of length {len(x)} in dimension {a.dim}")
    return x


@dataclass(frozen=True)
class Check:
    """Outcome of an identity check.

    On failure ``witness`` is ``(i, j, residual)`` for the first failing basis
    pair (0-based) and ``identity`` names the identity that failed.
    """

    ok: bool
    witness: Optional[tuple] = None
    identity: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _check_size(a: Algebra, m: Element) -> None:
    if m.n != a.dim:
        raise ValueError(f"map of size {m.n} on an algebra of dimension {a.dim}")


def _residual_check(a: Algebra, vec: tuple, rows, identity: str) -> Optional[Check]:
    # rows come in blocks of n per basis pair (i, j), row-major in (i, j)
    n = a.dim
    block = []
    for idx, row in enumerate(rows):
        block.append(sum((v * vec[c] for c, v in row.items()), ZERO))
        if len(block) == n:
            if any(block):
                i, j = divmod(idx // n, n)
                return Check(False, (i, j, tuple(block)), identity)
            block = []
    return None


def _first(*checks) -> Check:
    for c in checks:
        fail = c()
        if fail is not None:
            return fail
    return Check(True)


def is_derivation(a: Algebra, m: LinMap) -> Check:
    _check_size(a, m)
    return _first(lambda: _residual_check(a, m.vector(), _der_rows(a), "derivation"))


def is_antiderivation(a: Algebra, m: LinMap, left: bool = False) -> Check:
    _check_size(a, m)
    return _first(lambda: _residual_check(a, m.vector(), _antider_rows(a, left=left), "anti-derivation"))


def is_biderivation(a: Algebra, b: Bider) -> Check:
    """Derivation identity on d, anti-derivation identity on D, and [x,d(y)] = [x,D(y)]."""
    _check_size(a, b)
    vec = b.vector()
    nn = a.dim * a.dim
    return _first(
        lambda: _residual_check(a, vec, _der_rows(a), "derivation"),
        lambda: _residual_check(a, vec, _antider_rows(a, off=nn), "anti-derivation"),
        lambda: _residual_check(a, vec, _compat_rows(a), "compatibility"),
    )


def is_member(a: Algebra, kind: Kind, m: Element) -> Check:
    if kind == "der":
        return is_derivation(a, m)
    if kind == "antider":
        return is_antiderivation(a, m)
    return is_biderivation(a, m)


# -- brackets ----------------------------------------------------------------


def der_bracket(d1: LinMap, d2: LinMap) -> LinMap:
    """Commutator d1 d2 - d2 d1."""
    return d1 @ d2 - d2 @ d1


def bider_bracket(b1: Bider, b2: Bider) -> Bider:
    """[(d, D), (d', D')] = (d d' - d' d, D d' - d' D)."""
    return Bider(b1.d @ b2.d - b2.d @ b1.d, b1.D @ b2.d - b2.d @ b1.D)


def span_contains(space: MapSpace, m: Element) -> bool:
    return space.coordinates(m) is not None


def same_space(s1: MapSpace, s2: MapSpace) -> bool:
    """Mutual containment of every basis element."""
    return (
        s1.kind == s2.kind
        and s1.n == s2.n
        and all(span_contains(s2, m) for m in s1)
        and all(span_contains(s1, m) for m in s2)
    )
