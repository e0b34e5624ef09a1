"""Finite-dimensional algebras given by structure constants.

An :class:`Algebra` stores ``[e_i, e_j] = sum_k c[i, j][k] e_k`` with
0-based indices.  Vectors are tuples of :class:`~fractions.Fraction` in
the basis ``e_0 .. e_{n-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Mapping, Optional, Sequence

from .linalg import RowReducer, rat, row_space

ZERO = Fraction(0)


class Algebra:
    """Bilinear bracket on ``Q^n`` fixed by its structure constants.

    Parameters
    ----------
    dim : int
        Dimension n >= 1.
    brackets : mapping
        ``{(i, j): {k: c}}`` with 0-based indices; omitted products are zero.
    labels : sequence of str, optional
        Basis names used for display and file output.
    """

    def __init__(self, dim: int, brackets: Mapping = (), labels: Optional[Sequence[str]] = None):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        table: dict = {}
        for (i, j), image in dict(brackets).items():
            for idx in (i, j):
                if not 0 <= idx < dim:
                    raise ValueError(f"basis index {idx} out of range for dimension {dim}")
            vec = {}
            for k, c in dict(image).items():
                if not 0 <= k < dim:
                    raise ValueError(f"basis index {k} out of range for dimension {dim}")
                c = rat(c)
                if c:
                    vec[k] = c
            if vec:
                table[(i, j)] = vec
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != dim:
                raise ValueError(f"{len(labels)} labels given for dimension {dim}")
        self.dim = dim
        self.table = table
        self.labels = labels
        self._dense = None

    def __repr__(self):
        return f"Algebra(dim={self.dim}, nonzero_products={len(self.table)})"

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.dim == other.dim and self.table == other.table and self.labels == other.labels

    def __hash__(self):
        return hash((self.dim, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.table.items()))))

    @property
    def basis_labels(self) -> tuple:
        return self.labels or tuple(f"e{i + 1}" for i in range(self.dim))

    def structure(self, i: int, j: int) -> dict:
        """Sparse image ``{k: c}`` of ``[e_i, e_j]``."""
        return self.table.get((i, j), {})

    def dense(self) -> tuple:
        """``c[i][j][k]`` as nested tuples (cached)."""
        if self._dense is None:
            n = self.dim
            c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
            for (i, j), vec in self.table.items():
                for k, v in vec.items():
                    c[i][j][k] = v
            self._dense = tuple(tuple(tuple(r) for r in plane) for plane in c)
        return self._dense

    def basis_vector(self, i: int) -> tuple:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def is_abelian(self) -> bool:
        return not self.table

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear extension of the table to arbitrary vectors."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError(f"vectors of length {len(x)} and {len(y)} in dimension {n}")
        out = [ZERO] * n
        for (i, j), vec in self.table.items():
            s = x[i] * y[j]
            if s:
                for k, v in vec.items():
                    out[k] += s * v
        return tuple(out)

    def basis_bracket(self, i: int, j: int) -> tuple:
        out = [ZERO] * self.dim
        for k, v in self.structure(i, j).items():
            out[k] = v
        return tuple(out)


def _add(*vs):
    return tuple(sum(t, ZERO) for t in zip(*vs))


def _neg(v):
    return tuple(-x for x in v)


@dataclass(frozen=True)
class Violation:
    """Failure of the Leibniz identity on the basis triple (i, j, k), 0-based."""

    triple: tuple
    residual: tuple


def _check(a: Algebra, left: bool) -> list:
    n = a.dim
    e = [a.basis_vector(i) for i in range(n)]
    br = a.bracket
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if left:
                    # [x,[y,z]] = [[x,y],z] + [y,[x,z]]
                    lhs = br(e[i], br(e[j], e[k]))
                    rhs = _add(br(br(e[i], e[j]), e[k]), br(e[j], br(e[i], e[k])))
                else:
                    # [[x,y],z] = [[x,z],y] + [x,[y,z]]
                    lhs = br(br(e[i], e[j]), e[k])
                    rhs = _add(br(br(e[i], e[k]), e[j]), br(e[i], br(e[j], e[k])))
                res = _add(lhs, _neg(rhs))
                if any(res):
                    out.append(Violation((i, j, k), res))
    return out


def check_right_leibniz(a: Algebra) -> list:
    """All basis triples violating the right Leibniz identity (empty if none)."""
    return _check(a, left=False)


def check_left_leibniz(a: Algebra) -> list:
    return _check(a, left=True)


def is_right_leibniz(a: Algebra) -> bool:
    return not check_right_leibniz(a)


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``Q^n`` held as a canonical RREF basis."""

    ambient_dim: int
    basis: tuple = ()

    @classmethod
    def span(cls, vectors, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(row_space(vectors, ambient_dim)))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, other: "Subspace") -> bool:
        red = RowReducer(self.ambient_dim)
        red.extend({c: v for c, v in enumerate(b) if v} for b in self.basis)
        return all(red.coordinates(v) is not None for v in other.basis)


def product_subspace(a: Algebra, u: Subspace, v: Subspace) -> Subspace:
    """Span of ``[x, y]`` over basis vectors x of u and y of v."""
    if u.ambient_dim != a.dim or v.ambient_dim != a.dim:
        raise ValueError("subspace ambient dimension does not match the algebra")
    return Subspace.span((a.bracket(x, y) for x in u.basis for y in v.basis), a.dim)


@dataclass(frozen=True)
class SeriesReport:
    kind: Literal["lower-central", "derived"]
    dims: tuple
    index: Optional[int] = None
    terms: tuple = field(default=(), repr=False, compare=False)

    @property
    def reaches_zero(self) -> bool:
        return self.index is not None


def _series(a: Algebra, kind: str) -> SeriesReport:
    cur = Subspace.full(a.dim)
    terms = [cur]
    while cur.dim:
        nxt = product_subspace(a, cur, terms[0] if kind == "lower-central" else cur)
        terms.append(nxt)
        if nxt.dim >= cur.dim:
            break
        cur = nxt
    dims = tuple(t.dim for t in terms)
    index = len(dims) if dims[-1] == 0 else None
    return SeriesReport(kind, dims, index, tuple(terms))


def lower_central_series(a: Algebra) -> SeriesReport:
    """Dimensions of L^1 = L, L^{k+1} = [L^k, L] until zero or stable.

    ``index`` is the nilpotency index (first k with L^k = 0), else None.
    """
    return _series(a, "lower-central")


def derived_series(a: Algebra) -> SeriesReport:
    """Dimensions of L^[1] = L, L^[s+1] = [L^[s], L^[s]]; ``index`` is the solvability index."""
    return _series(a, "derived")


def is_nilpotent(a: Algebra) -> bool:
    return lower_central_series(a).reaches_zero


def is_solvable(a: Algebra) -> bool:
    return derived_series(a).reaches_zero


def filiform_check(a: Algebra) -> bool:
    """True iff dim L^i = n - i for 2 <= i <= n."""
    n = a.dim
    dims = lower_central_series(a).dims
    for i in range(2, n + 1):
        d = dims[i - 1] if i - 1 < len(dims) else dims[-1]
        if d != n - i:
            return False
    return True


def squares_span(a: Algebra) -> Subspace:
    """Span of all ``[x, x]``: the c_ii and the c_ij + c_ji."""
    n = a.dim
    vecs = []
    for i in range(n):
        vecs.append(a.basis_bracket(i, i))
        for j in range(i + 1, n):
            vecs.append(_add(a.basis_bracket(i, j), a.basis_bracket(j, i)))
    return Subspace.span(vecs, n)
