"""Named families of Leibniz algebras and their closed-form map spaces.

Families: null-filiform ``NF``, the naturally graded filiform ``F1`` and
``F2``, and the solvable extensions ``R_NF`` (nilradical NF_n), ``R_F1``
(nilradical F1_n) and ``L1``, ``L2`` (nilradical F2_n).

Basis order follows the displayed matrices of the closed forms: the
adjoined elements come first, i.e. ``(h, e_1, .., e_n)`` for R_NF and
``(h_1, h_2, e_1, .., e_n)`` for R_F1, L1, L2.  Matrix units ``E(i, j)``
below are 1-based in that order, as are the ``e(i)`` / ``h(i)`` helpers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .algebra import Algebra
from .maps import Bider, LinMap

TAGS = ("NF", "F1", "F2", "R_NF", "R_F1", "L1", "L2")
KINDS = ("der", "antider", "bider")
MIN_N = {"NF": 1, "F1": 4, "F2": 4, "R_NF": 2, "R_F1": 4, "L1": 4, "L2": 4}
EXTRA = {"NF": 0, "F1": 0, "F2": 0, "R_NF": 1, "R_F1": 2, "L1": 2, "L2": 2}


@dataclass(frozen=True)
class FamilyId:
    tag: str
    n: int

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown family {self.tag!r}; expected one of {', '.join(TAGS)}")
        if not isinstance(self.n, int) or self.n < MIN_N[self.tag]:
            raise ValueError(f"family {self.tag} needs n >= {MIN_N[self.tag]}, got {self.n!r}")

    @property
    def dim(self) -> int:
        """Total dimension (nilradical plus adjoined elements)."""
        return self.n + EXTRA[self.tag]

    def __str__(self):
        return f"{self.tag}({self.n})"


def _family(f) -> FamilyId:
    if isinstance(f, FamilyId):
        return f
    tag, n = f
    return FamilyId(tag, n)


class _Basis:
    """1-based index helpers for one family's basis order."""

    def __init__(self, f: FamilyId):
        self.f = f
        self.extra = EXTRA[f.tag]
        self.dim = f.dim

    def e(self, i: int) -> int:
        return self.extra + i - 1

    def h(self, i: int = 1) -> int:
        return i - 1

    def labels(self) -> tuple:
        if self.extra == 1:
            hs = ("h",)
        else:
            hs = tuple(f"h{i + 1}" for i in range(self.extra))
        return hs + tuple(f"e{i}" for i in range(1, self.f.n + 1))


def make_algebra(f) -> Algebra:
    """Multiplication table of the family; omitted products are zero."""
    f = _family(f)
    b = _Basis(f)
    e, h, n = b.e, b.h, f.n
    table: dict = {}

    def put(i, j, k, c=1):
        table.setdefault((i, j), {})[k] = Fraction(c)

    if f.tag in ("NF", "R_NF"):
        for i in range(1, n):
            put(e(i), e(1), e(i + 1))
    if f.tag == "R_NF":
        put(h(), e(1), e(1), -1)
        for i in range(1, n + 1):
            put(e(i), h(), e(i), i)
    if f.tag == "F1":
        put(e(1), e(1), e(3))
        for i in range(2, n):
            put(e(i), e(1), e(i + 1))
    if f.tag in ("F2", "L1", "L2"):
        put(e(1), e(1), e(3))
        for i in range(3, n):
            put(e(i), e(1), e(i + 1))
    if f.tag == "R_F1":
        for i in range(2, n):
            put(e(i), e(1), e(i + 1))
        put(e(1), h(2), e(1))
        put(h(2), e(1), e(1), -1)
        for i in range(2, n + 1):
            put(e(i), h(1), e(i))
            put(e(i), h(2), e(i), i - 1)
    if f.tag in ("L1", "L2"):
        put(e(1), h(2), e(1))
        put(h(2), e(1), e(1), -1)
        put(e(2), h(1), e(2))
        if f.tag == "L1":
            put(h(1), e(2), e(2), -1)
        for i in range(3, n + 1):
            put(e(i), h(2), e(i), i - 1)
    return Algebra(f.dim, table, b.labels())


# -- closed-form parametric families -----------------------------------------
#
# A generator is the map obtained by setting one free parameter to 1 and all
# others to 0.  Entries are keyed by 1-based (row, column) of the displayed
# matrix; column j lists the coordinates of the image of the j-th basis vector.


@dataclass
class ParametricForm:
    family: FamilyId
    kind: str
    params: list = field(default_factory=list)  # parameter names, display order
    generators: list = field(default_factory=list)  # LinMap or Bider per parameter
    notes: tuple = ()  # departures from the printed display, if any

    @property
    def dim(self) -> int:
        return len(self.generators)

    def evaluate(self, values) -> object:
        """The map for a full parameter assignment ``{name: value}``."""
        values = dict(values)
        out = None
        for name, g in zip(self.params, self.generators):
            c = Fraction(values.get(name, 0))
            term = c * g
            out = term if out is None else out + term
        return out


def _linmap(dim: int, entries: dict) -> LinMap:
    return LinMap.from_entries(dim, {(i - 1, j - 1): v for (i, j), v in entries.items()})


class _FormBuilder:
    def __init__(self, f: FamilyId, kind: str):
        self.form = ParametricForm(f, kind)
        self.dim = f.dim

    def add(self, name: str, d: Optional[dict] = None, D: Optional[dict] = None) -> None:
        d, D = d or {}, D or {}
        if self.form.kind == "bider":
            g = Bider(_linmap(self.dim, d), _linmap(self.dim, D))
        elif self.form.kind == "der":
            g = _linmap(self.dim, d)
        else:
            g = _linmap(self.dim, D)
        self.form.params.append(name)
        self.form.generators.append(g)

    def note(self, text: str) -> None:
        self.form.notes += (text,)


def _nf_der_entries(n: int) -> dict:
    """d(e_i) = i a1 e_i + sum_{j>i} a_{j-i+1} e_j, keyed by parameter index."""
    out = {1: {(i, i): i for i in range(1, n + 1)}}
    for k in range(2, n + 1):
        out[k] = {(i + k - 1, i): 1 for i in range(1, n - k + 2)}
    return out


def _f1_der_entries(n: int) -> dict:
    # column 1: a1..an; column 2: (a1+a2) e2 + a3 e3 + .. + a_{n-1} e_{n-1} + a_{n+1} e_n;
    # column j >= 3: ((j-1) a1 + a2) e_j + sum_{i>j} a_{i-j+2} e_i
    out = {k: {} for k in range(1, n + 2)}
    for i in range(1, n + 1):
        out[i][(i, 1)] = 1
    out[1][(2, 2)] = 1
    out[2][(2, 2)] = 1
    for i in range(3, n):
        out[i][(i, 2)] = 1
    out[n + 1][(n, 2)] = 1
    for j in range(3, n + 1):
        out[1][(j, j)] = j - 1
        out[2][(j, j)] = 1
        for i in range(j + 1, n + 1):
            out[i - j + 2][(i, j)] = 1
    return out


def _f2_der_entries(n: int) -> dict:
    # column 1: a1..an; column 2: a_{n+1} e2 + a_{n+2} e_n;
    # column j >= 3: (j-1) a1 e_j + sum_{i>j} a_{i-j+2} e_i
    out = {k: {} for k in range(1, n + 3)}
    for i in range(1, n + 1):
        out[i][(i, 1)] = 1
    out[n + 1][(2, 2)] = 1
    out[n + 2][(n, 2)] = 1
    for j in range(3, n + 1):
        out[1][(j, j)] = j - 1
        for i in range(j + 1, n + 1):
            out[i - j + 2][(i, j)] = 1
    return out


def _form_nf(f: FamilyId, kind: str, b: _FormBuilder) -> None:
    n = f.n
    der = _nf_der_entries(n)
    if kind == "der":
        for k in range(1, n + 1):
            b.add(f"alpha_{k}", d=der[k])
    elif kind == "antider":
        for j in range(1, n + 1):
            b.add(f"beta_{j}", D={(j, 1): 1})
    else:
        # beta_1 = alpha_1
        b.add("alpha_1", d=der[1], D={(1, 1): 1})
        for k in range(2, n + 1):
            b.add(f"alpha_{k}", d=der[k])
        for k in range(2, n + 1):
            b.add(f"beta_{k}", D={(k, 1): 1})


def _form_f(f: FamilyId, kind: str, b: _FormBuilder) -> None:
    n = f.n
    if f.tag == "F1":
        der = _f1_der_entries(n)
        if kind == "der":
            b.note(
                "Der(F1_n) display: column 2 is taken from the biderivation theorem "
                "(entries a3..a_{n-1} then a_{n+1} at row n), adding the free parameter "
                "a_{n+1} that the derivation display omits; the display's row n "
                "(a_n, a_{n-1}, a_{n-2}, ..) is read as (a_n, a_{n+1}, a_{n-1}, .., a_3)"
            )
    else:
        der = _f2_der_entries(n)
        if kind == "der":
            b.note(
                "Der(F2_n) display: the free (n, 2) entry a_{n+2} from the biderivation "
                "theorem is added, and the display's row n entry a_4 in column 3 is "
                "read as a_{n-1}"
            )
    if kind == "der":
        for k in sorted(der):
            b.add(f"alpha_{k}", d=der[k])
        return
    if kind == "antider":
        for j in range(1, n + 1):
            b.add(f"beta_{j}", D={(j, 1): 1})
        if f.tag == "F1":
            b.add(f"beta_{n + 1}", D={(1, 2): 1, (2, 2): -1})
            b.add(f"beta_{n + 2}", D={(n, 2): 1})
        else:
            b.add(f"beta_{n + 1}", D={(2, 2): 1})
            b.add(f"beta_{n + 2}", D={(n, 2): 2})
        return
    # biderivations: beta_1 = alpha_1, and for F1 beta_{n+1} = 0
    b.add("alpha_1", d=der[1], D={(1, 1): 1})
    for k in sorted(der):
        if k != 1:
            b.add(f"alpha_{k}", d=der[k])
    for j in range(2, n + 1):
        b.add(f"beta_{j}", D={(j, 1): 1})
    if f.tag == "F2":
        b.add(f"beta_{n + 1}", D={(2, 2): 1})
    b.add(f"beta_{n + 2}", D={(n, 2): 1})


def _form_r_nf(f: FamilyId, kind: str, b: _FormBuilder) -> None:
    # basis (h, e_1, .., e_n): row/column 1 is h, row/column i+1 is e_i
    n = f.n
    a1 = {(2, 1): -1, **{(i + 2, i + 1): 1 for i in range(1, n)}}
    a2 = {(i + 1, i + 1): i for i in range(1, n + 1)}
    if kind == "der":
        b.add("alpha_1", d=a1)
        b.add("alpha_2", d=a2)
        return
    if kind == "antider":
        # column 1 (D(h)) rows 2..n: (k-1) beta_k, row n+1: beta_{n+1};
        # column 2 (D(e_1)) row k: beta_{k-1}
        for k in range(1, n + 2):
            D = {}
            if 2 <= k <= n:
                D[(k, 1)] = k - 1
            if k == n + 1:
                D[(n + 1, 1)] = 1
            if k <= n:
                D[(k + 1, 2)] = 1
            b.add(f"beta_{k}", D=D)
        return
    # beta_1 = alpha_2, beta_2 = -alpha_1
    b.add("alpha_1", d=a1, D={(2, 1): -1, (3, 2): -1})
    b.add("alpha_2", d=a2, D={(2, 2): 1})
    for k in range(3, n + 2):
        D = {(k, 1): k - 1} if k <= n else {(n + 1, 1): 1}
        if k <= n:
            D[(k + 1, 2)] = 1
        b.add(f"beta_{k}", D=D)
    b.note(
        "Bider(R): the displayed pair has n+1 free parameters; the prose states "
        "(n+2)-dimensional"
    )


def _form_r_f1(f: FamilyId, kind: str, b: _FormBuilder) -> None:
    # basis (h_1, h_2, e_1, .., e_n): e_i sits at row/column i+2
    n = f.n
    a1 = {(i + 2, i + 2): 1 for i in range(2, n + 1)}
    a2 = {(3, 2): -1, **{(i + 3, i + 2): 1 for i in range(2, n)}}
    a3 = {(3, 3): 1, **{(i + 2, i + 2): i - 1 for i in range(2, n + 1)}}
    if kind == "der":
        b.add("alpha_1", d=a1)
        b.add("alpha_2", d=a2)
        b.add("alpha_3", d=a3)
        return

    def beta(k):
        # beta_k for 3 <= k <= n+1: D(h_1) e_{k-1} coefficient 1, D(h_2) e_{k-1}
        # coefficient (k-2), D(e_1) e_k coefficient 1 (k <= n)
        D = {(k + 1, 1): 1, (k + 1, 2): k - 2}
        if k <= n:
            D[(k + 2, 3)] = 1
        return D

    if kind == "antider":
        b.add("beta_1", D={(3, 3): 1})
        b.add("beta_2", D={(3, 2): 1})
        for k in range(3, n + 2):
            b.add(f"beta_{k}", D=beta(k))
        b.add(f"beta_{n + 2}", D={(1, 1): 1})
        b.add(f"beta_{n + 3}", D={(1, 2): 1})
        return
    # beta_1 = alpha_3, beta_2 = -alpha_2, beta_{n+2} = beta_{n+3} = 0
    b.add("alpha_1", d=a1)
    b.add("alpha_2", d=a2, D={(3, 2): -1})
    b.add("alpha_3", d=a3, D={(3, 3): 1})
    for k in range(3, n + 2):
        b.add(f"beta_{k}", D=beta(k))


def _form_l(f: FamilyId, kind: str, b: _FormBuilder) -> None:
    # basis (h_1, h_2, e_1, .., e_n): e_i sits at row/column i+2
    n = f.n
    l1 = f.tag == "L1"
    # shift-by-e_1 part: d(h_2) = -e_1, d(e_i) = e_{i+1} for i = 1 and 3..n-1
    shift = {(3, 2): -1, (5, 3): 1, **{(i + 3, i + 2): 1 for i in range(3, n)}}
    grade = {(3, 3): 1, **{(i + 2, i + 2): i - 1 for i in range(3, n + 1)}}
    e2 = {(4, 4): 1}
    h1 = {(4, 1): -1}
    if kind == "der":
        b.add("alpha_1", d=shift)
        if l1:
            b.add("alpha_2", d=h1)
            b.add("alpha_3", d=e2)
            b.add("alpha_4", d=grade)
        else:
            b.add("alpha_2", d=e2)
            b.add("alpha_3", d=grade)
        return

    def beta(k):
        # 4 <= k <= n+1: D(h_2) e_{k-1} coefficient (k-2) (1 at k = n+1 as
        # displayed), D(e_1) e_k coefficient 1 (k <= n)
        D = {(k + 1, 2): (k - 2) if k <= n else 1}
        if k <= n:
            D[(k + 2, 3)] = 1
        return D

    if kind == "antider":
        b.add("beta_1", D={(3, 3): 1})
        if l1:
            b.add("beta_2", D={(4, 4): 1})
        else:
            b.add("beta_2", D={(1, 2): 1})
        b.add("beta_3", D={(3, 2): 1, (5, 3): 1})
        for k in range(4, n + 2):
            b.add(f"beta_{k}", D=beta(k))
        if l1:
            b.add(f"beta_{n + 2}", D={(4, 1): 1})
        else:
            b.add(f"beta_{n + 2}", D={(1, 1): 1})
            b.add(f"beta_{n + 3}", D={(4, 1): 1})
        return
    # biderivations
    b.add("alpha_1", d=shift, D={(3, 2): -1, (5, 3): -1})
    if l1:
        b.add("alpha_2", d=h1, D={(4, 1): -1})
        b.add("alpha_3", d=e2, D={(4, 4): 1})
        b.add("alpha_4", d=grade, D={(3, 3): 1})
        b.note("Bider(L1): the displayed D entry -beta_1 at (5, 3) is read as -alpha_1")
    else:
        b.add("alpha_2", d=e2)
        b.add("alpha_3", d=grade, D={(3, 3): 1})
    for k in range(4, n + 2):
        b.add(f"beta_{k}", D=beta(k))
    if not l1:
        b.add(f"beta_{n + 2}", D={(4, 1): 1})


_FORMS: dict = {
    "NF": _form_nf,
    "F1": _form_f,
    "F2": _form_f,
    "R_NF": _form_r_nf,
    "R_F1": _form_r_f1,
    "L1": _form_l,
    "L2": _form_l,
}


def paper_form(f, kind: str) -> ParametricForm:
    """Closed-form family of maps, one generator per free parameter."""
    f = _family(f)
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    b = _FormBuilder(f, kind)
    _FORMS[f.tag](f, kind, b)
    return b.form


# -- named bases of Bider(L) and their printed bracket tables ----------------


@dataclass
class PaperBiderBasis:
    """Named biderivations and the expected brackets between them.

    ``table`` entries are ``(left, right, {name: coeff})``; a pair may occur
    more than once when the printed table lists it twice.  Pairs absent from
    the table are expected to bracket to zero.
    """

    family: FamilyId
    names: list = field(default_factory=list)
    elements: dict = field(default_factory=dict)
    table: list = field(default_factory=list)
    notes: tuple = ()

    def expected(self, left: str, right: str) -> list:
        return [expr for l, r, expr in self.table if (l, r) == (left, right)]


class _BasisBuilder:
    def __init__(self, f: FamilyId):
        self.pb = PaperBiderBasis(f)
        self.dim = f.dim

    def el(self, name: str, d: Optional[dict] = None, D: Optional[dict] = None) -> None:
        self.pb.names.append(name)
        self.pb.elements[name] = Bider(_linmap(self.dim, d or {}), _linmap(self.dim, D or {}))

    def rule(self, left: str, right: str, **coeffs) -> None:
        # keyword names use X1 / Y3 / H2 spelling; the empty expression means zero
        expr = {_name(k): Fraction(v) for k, v in coeffs.items() if v}
        for nm in (left, right, *expr):
            if nm not in self.pb.elements:
                raise KeyError(f"{nm} is not an element of the basis")
        self.pb.table.append((left, right, expr))

    def note(self, text: str) -> None:
        self.pb.notes += (text,)


def _name(key: str) -> str:
    return key if "_" in key else f"{key[0]}_{key[1:]}"


def _x(i):
    return f"X_{i}"


def _y(i):
    return f"Y_{i}"


def _basis_nf(f: FamilyId, b: _BasisBuilder) -> None:
    n = f.n
    der = _nf_der_entries(n)
    b.el("X_1", d=der[1], D={(1, 1): 1})
    for k in range(2, n + 1):
        b.el(_x(k), d=der[k])
    for k in range(2, n + 1):
        b.el(_y(k), D={(k, 1): 1})
    for k in range(2, n + 1):
        b.rule("X_1", _x(k), **{_x(k): 1, _y(k): -1})
        b.rule(_x(k), "X_1", **{_x(k): -1})
        b.rule(_y(k), "X_1", **{_y(k): -(k - 1)})
        for l in range(2, n + 2 - k):
            b.rule(_y(k), _x(l), **{_y(k + l - 1): -1})


def _basis_f1(f: FamilyId, b: _BasisBuilder) -> None:
    n = f.n
    der = _f1_der_entries(n)
    b.el("X_1", d=der[1], D={(1, 1): 1})
    for k in range(2, n + 2):
        b.el(_x(k), d=der[k])
    for k in range(2, n + 1):
        b.el(_y(k), D={(k, 1): 1})
    b.el(_y(n + 1), D={(n, 2): 1})
    X, Y = _x, _y
    b.rule("X_1", "X_2", **{Y(2): -1})
    b.rule(X(n + 1), "X_1", **{X(n + 1): -(n - 2)})
    b.rule("X_1", X(n + 1), **{X(n + 1): n - 2, Y(n + 1): -1})
    b.rule(Y(n + 1), "X_1", **{Y(n + 1): -(n - 2)})
    b.rule("X_1", "Y_2", **{Y(2): -1})
    b.rule("Y_2", X(n + 1), **{Y(2): -1})
    for k in range(2, n + 2):
        b.rule(Y(k), "X_2", **{Y(k): -1})
    for k in range(2, n + 1):
        for l in range(3, n + 1):
            if k + l - 2 <= n:
                b.rule(Y(k), X(l), **{Y(k + l - 2): -1})
    for k in range(3, n + 1):
        b.rule(Y(k), "X_1", **{Y(k): -(k - 2)})
        b.rule(X(k), "X_1", **{X(k): -(k - 2)})
        b.rule("X_1", Y(k), **{X(k): k - 2, Y(k): -1})
    b.note("[Y_k, X_l] = -Y_{k+l-2} read for 2 <= k <= n, 3 <= l <= n, k+l-2 <= n")


def _basis_f2(f: FamilyId, b: _BasisBuilder) -> None:
    n = f.n
    der = _f2_der_entries(n)
    b.el("X_1", d=der[1], D={(1, 1): 1})
    for k in range(2, n + 3):
        b.el(_x(k), d=der[k])
    for k in range(2, n + 1):
        b.el(_y(k), D={(k, 1): 1})
    b.el(_y(n + 1), D={(2, 2): 1})
    b.el(_y(n + 2), D={(n, 2): 1})
    X, Y = _x, _y
    b.rule("X_1", "X_2", **{Y(2): -1})
    b.rule("X_2", "X_1", **{X(2): 1})
    b.rule("X_1", X(n), **{X(n): n - 2, Y(n): -1})
    b.rule(X(n), "X_1", **{X(n): 1})
    b.rule("Y_2", "X_1", **{Y(2): 1})
    b.rule(Y(n + 1), "X_2", **{Y(2): 1})
    b.rule("X_1", X(n + 2), **{X(n + 2): n - 1})
    b.rule(X(n + 2), "X_1", **{X(n + 2): -(n - 2)})
    b.rule(Y(n + 2), "X_1", **{Y(n + 2): -(n - 1)})
    b.rule(Y(n + 2), "X_2", **{Y(n + 2): 1})
    b.rule(Y(n + 1), X(n + 2), **{Y(n + 2): 1})
    for k in range(3, n + 1):
        b.rule(Y(k), "X_1", **{Y(k): -(k - 2)})
    for k in range(3, n):
        b.rule("X_1", X(k), **{X(k): k - 2, Y(k): -1})
        b.rule(X(k), "X_1", **{X(k): -(k - 2)})
    for k in range(3, n):
        for l in range(3, n):
            if k + l - 2 <= n:
                b.rule(Y(k), X(l), **{Y(k + l - 2): -1})
    b.note(
        "the printed name list repeats X_{n+2}; elements are X_1..X_{n+2}, Y_2..Y_{n+2} "
        "as defined"
    )
    b.note("[Y_k, X_l] = -Y_{k+l-2} read for 3 <= k, l <= n-1, k+l-2 <= n")


def _basis_r_nf(f: FamilyId, b: _BasisBuilder) -> None:
    n = f.n
    b.el("H", d={(i + 1, i + 1): i for i in range(1, n + 1)}, D={(2, 2): 1})
    b.el("X_1", d={(2, 1): -1, **{(i + 2, i + 1): 1 for i in range(1, n)}}, D={(2, 1): -1, (3, 2): -1})
    for i in range(2, n):
        b.el(_x(i), D={(i + 1, 1): i, (i + 2, 2): 1})
    b.el(_x(n), D={(n + 1, 1): 1})
    b.rule("H", "X_1", X1=1)
    for i in [1] + list(range(3, n + 1)):
        if i + 1 <= n:
            b.rule(_x(i), "X_1", **{_x(i + 1): -1})
        b.rule(_x(i), "H", **{_x(i): i})
    b.note(
        "the printed list names X_1, X_2, X_3, Y_4, .., Y_{n+2} but defines only H, "
        "X_1, .., X_n; the defined elements are used"
    )
    b.note("row rules [X_i, X_1] = -X_{i+1}, [X_i, H] = i X_i read for i in {1, 3, .., n}")


def _basis_r_f1(f: FamilyId, b: _BasisBuilder) -> None:
    n = f.n
    b.el("H_1", d={(i + 2, i + 2): -1 for i in range(2, n + 1)})
    b.el("H_2", d={(3, 3): 1, **{(i + 2, i + 2): i - 1 for i in range(2, n + 1)}}, D={(3, 3): 1})
    b.el("X_1", d={(3, 2): 1, **{(i + 3, i + 2): -1 for i in range(2, n)}}, D={(3, 2): 1})
    for i in range(2, n):
        b.el(_x(i), D={(i + 2, 1): 1, (i + 2, 2): i - 1, (i + 3, 3): 1})
    b.el(_x(n), D={(n + 2, 1): 1, (n + 2, 2): n - 1})
    b.rule("X_1", "H_2", X1=1)
    b.rule("H_2", "X_1", X1=-1)
    for i in range(2, n + 1):
        b.rule(_x(i), "H_1", **{_x(i): 1})
        b.rule(_x(i), "H_2", **{_x(i): i - 1})
    for i in range(2, n):
        b.rule(_x(i), "X_1", **{_x(i + 1): 1})


def _basis_l(f: FamilyId, b: _BasisBuilder) -> None:
    n = f.n
    l1 = f.tag == "L1"
    b.el("H_1", d={(4, 4): 1}, D={(4, 4): 1} if l1 else None)
    b.el("H_2", d={(3, 3): 1, **{(i + 2, i + 2): i - 1 for i in range(3, n + 1)}}, D={(3, 3): 1})
    b.el(
        "X_1",
        d={(3, 2): -1, (5, 3): 1, **{(i + 3, i + 2): 1 for i in range(3, n)}},
        D={(3, 2): -1, (5, 3): -1},
    )
    if l1:
        b.el("X_2", d={(4, 1): -1}, D={(4, 1): -1})
    else:
        b.el("X_2", D={(4, 1): 1})
    for i in range(3, n):
        b.el(_x(i), D={(i + 2, 2): i - 1, (i + 3, 3): 1})
    b.el(_x(n), D={(n + 2, 2): 1})
    b.rule("X_1", "X_1", X3=1)
    b.rule("X_1", "X_4", X1=-1)
    b.rule("X_4", "X_1", X1=1)
    b.rule("X_2", "H_1", X2=-1)
    if l1:
        b.rule("H_1", "X_2", X2=1)
    for i in range(3, n):
        b.rule(_x(i), "X_1", **{_x(i + 1): -1})
        b.rule(_x(i), "H_2", **{_x(i): -(i - 1)})
    b.rule(_x(n), "H_2", **{_x(n): -(n - 1)})
    b.note(
        "the printed list names X_1, .., X_4, Y_5, .., Y_{n+2} but defines H_1, H_2, "
        "X_1, .., X_n; the defined elements are used"
    )


_BASES: dict = {
    "NF": _basis_nf,
    "F1": _basis_f1,
    "F2": _basis_f2,
    "R_NF": _basis_r_nf,
    "R_F1": _basis_r_f1,
    "L1": _basis_l,
    "L2": _basis_l,
}


def paper_bider_basis(f) -> PaperBiderBasis:
    """Named basis of Bider(L) as matrix-unit sums, with the printed table."""
    f = _family(f)
    if f.tag == "NF" and f.n < 2:
        raise ValueError("Bider(NF_1) has no printed basis; need n >= 2")
    b = _BasisBuilder(f)
    _BASES[f.tag](f, b)
    return b.pb


# -- stated dimensions -------------------------------------------------------


@dataclass(frozen=True)
class ExpectedDim:
    stated: Optional[int]  # value printed in prose; None when not stated
    parameters: int  # free parameters of the displayed closed form
    note: str = ""

    @property
    def discrepancy(self) -> bool:
        return self.stated is not None and self.stated != self.parameters


_STATED = {
    ("NF", "der"): lambda n: n,
    ("NF", "antider"): lambda n: n,
    ("NF", "bider"): lambda n: 2 * n - 1,
    ("F1", "bider"): lambda n: 2 * n + 1,
    ("F2", "bider"): lambda n: 2 * n + 3,
    ("R_NF", "bider"): lambda n: n + 2,
    ("R_F1", "bider"): lambda n: n + 2,
    ("L1", "bider"): lambda n: n + 2,
    ("L2", "bider"): lambda n: n + 2,
}


def expected_dim(f, kind: str) -> ExpectedDim:
    """Dimension printed in prose against the parameter count of the closed form."""
    f = _family(f)
    rule = _STATED.get((f.tag, kind))
    stated = rule(f.n) if rule else None
    params = paper_form(f, kind).dim
    note = ""
    if stated is not None and stated != params:
        note = f"stated {stated}, displayed form has {params} parameters"
    return ExpectedDim(stated, params, note)
