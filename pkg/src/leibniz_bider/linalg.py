"""Exact linear algebra over the rationals.

Rows are reduced incrementally with sparse dict rows, which keeps the
n^3-row systems assembled by :mod:`leibniz_bider.maps` cheap: most rows
are zero or touch a handful of unknowns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Rat = Fraction
Vector = tuple  # tuple of Fraction
Matrix = tuple  # tuple of row tuples


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_str(x: Fraction) -> str:
    """Canonical string: "p" for integers, "p/q" otherwise."""
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_matrix(m: Sequence[Sequence]) -> Matrix:
    rows = tuple(tuple(rat(v) for v in row) for row in m)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m)


class Echelon(NamedTuple):
    rref: Matrix
    pivot_cols: tuple
    rank: int


class RowReducer:
    """Incrementally maintained reduced row echelon form.

    Rows are dicts ``{column: value}`` with no zero values.  After every
    :meth:`add` the stored rows are in RREF: each pivot is 1 and is the only
    nonzero entry of its column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: dict[int, dict[int, Fraction]] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivot_cols(self) -> tuple:
        return tuple(sorted(self._rows))

    def reduce(self, row: dict) -> dict:
        """Return ``row`` reduced against the stored pivots (a new dict)."""
        out = {c: v for c, v in row.items() if v}
        for c in [c for c in out if c in self._rows]:
            f = out.get(c)
            if not f:
                continue
            for cc, vv in self._rows[c].items():
                nv = out.get(cc, 0) - f * vv
                if nv:
                    out[cc] = nv
                else:
                    out.pop(cc, None)
        return out

    def add(self, row: dict) -> bool:
        """Add a row; return True if it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for q, other in self._rows.items():
            f = other.get(p)
            if f:
                for c, v in r.items():
                    nv = other.get(c, 0) - f * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self._rows[p] = r
        return True

    def extend(self, rows: Iterable[dict]) -> None:
        for r in rows:
            self.add(r)

    def sparse_rows(self) -> list:
        """Stored rows ordered by pivot column."""
        return [self._rows[p] for p in sorted(self._rows)]

    def dense_rows(self) -> list:
        return [_densify(r, self.ncols) for r in self.sparse_rows()]

    def nullspace(self) -> list:
        """Canonical kernel basis: one vector per free column, in column order.

        The vector for free column f has a 1 at f, 0 at every other free
        column, and ``-rref[r][f]`` at the pivot of row r.
        """
        pivots = set(self._rows)
        basis = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, row in self._rows.items():
                x = row.get(f)
                if x:
                    v[p] = -x
            basis.append(tuple(v))
        return basis

    def coordinates(self, vec: Sequence[Fraction]):
        """Coefficients of ``vec`` in the stored rows, or None if outside the span."""
        coeffs = []
        rest = {c: rat(v) for c, v in enumerate(vec) if v}
        for p in sorted(self._rows):
            a = rest.get(p, Fraction(0))
            coeffs.append(a)
            if a:
                for c, v in self._rows[p].items():
                    nv = rest.get(c, 0) - a * v
                    if nv:
                        rest[c] = nv
                    else:
                        rest.pop(c, None)
        return None if rest else tuple(coeffs)


def _densify(row: dict, ncols: int) -> Vector:
    v = [Fraction(0)] * ncols
    for c, x in row.items():
        v[c] = x
    return tuple(v)


def _sparse(row: Sequence) -> dict:
    return {c: rat(v) for c, v in enumerate(row) if v}


def _ncols(m: Sequence[Sequence], ncols) -> int:
    if ncols is not None:
        return ncols
    if not m:
        raise ValueError("column count of an empty matrix is ambiguous; pass ncols")
    return len(m[0])


def rref(m: Sequence[Sequence], ncols: int | None = None) -> Echelon:
    """Reduced row echelon form of ``m``; zero rows are kept at the bottom."""
    m = as_matrix(m)
    n = _ncols(m, ncols)
    red = RowReducer(n)
    red.extend(_sparse(r) for r in m)
    rows = red.dense_rows()
    rows += [tuple([Fraction(0)] * n)] * (len(m) - len(rows))
    return Echelon(tuple(rows), red.pivot_cols, red.rank)


def rank(m: Sequence[Sequence], ncols: int | None = None) -> int:
    return rref(m, ncols).rank


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list:
    m = as_matrix(m)
    red = RowReducer(_ncols(m, ncols))
    red.extend(_sparse(r) for r in m)
    return red.nullspace()


def solve(a: Sequence[Sequence], b: Sequence, ncols: int | None = None):
    """One solution of ``a x = b`` with free variables set to 0, or None."""
    a = as_matrix(a)
    b = tuple(rat(x) for x in b)
    if len(b) != len(a):
        raise ValueError(f"right-hand side has length {len(b)}, expected {len(a)}")
    n = _ncols(a, ncols)
    red = RowReducer(n + 1)
    red.extend(_sparse(row + (rhs,)) for row, rhs in zip(a, b))
    if n in red.pivot_cols:
        return None
    x = [Fraction(0)] * n
    for p, row in zip(red.pivot_cols, red.sparse_rows()):
        x[p] = row.get(n, Fraction(0))
    return tuple(x)


def row_space(vectors: Iterable[Sequence], ncols: int) -> list:
    """Canonical (RREF) basis of the span of ``vectors``."""
    red = RowReducer(ncols)
    red.extend(_sparse(v) for v in vectors)
    return red.dense_rows()
