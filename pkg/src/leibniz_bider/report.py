"""JSON-ready payloads and the claim-by-claim verification suite."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import (
    Algebra,
    check_left_leibniz,
    check_right_leibniz,
    derived_series,
    lower_central_series,
)
from .catalog import KINDS, MIN_N, TAGS, FamilyId, expected_dim, make_algebra, paper_bider_basis, paper_form
from .induced import bider_algebra, fingerprint, innerness, verify_table
from .io import structure_records
from .linalg import rat_str
from .maps import (
    Bider,
    LinMap,
    MapSpace,
    antiderivation_space,
    biderivation_space,
    biderivation_space_by_intersection,
    derivation_space,
    same_space,
    span_contains,
    span_of,
)

SOLVABLE_EXTENSIONS = ("R_NF", "R_F1", "L1", "L2")


def map_entries(m: LinMap) -> list:
    """Nonzero entries as 1-based ``[row, col, "value"]`` triples."""
    return [[i + 1, j + 1, rat_str(v)] for i, row in enumerate(m.matrix) for j, v in enumerate(row) if v]


def element_payload(m) -> object:
    if isinstance(m, Bider):
        return {"d": map_entries(m.d), "D": map_entries(m.D)}
    return map_entries(m)


def violations_payload(viol) -> list:
    return [{"triple": [t + 1 for t in v.triple], "residual": [rat_str(x) for x in v.residual]} for v in viol]


def check_payload(a: Algebra) -> dict:
    out = {}
    for name, fn in (("right_leibniz", check_right_leibniz), ("left_leibniz", check_left_leibniz)):
        viol = fn(a)
        out[name] = {"ok": not viol, "violations": violations_payload(viol)}
    return out


def space_payload(space: MapSpace) -> dict:
    return {
        "kind": space.kind,
        "dim": space.dim,
        "n": space.n,
        "basis": [element_payload(b) for b in space.basis],
    }


def compute_space(a: Algebra, kind: str, left: bool = False) -> MapSpace:
    if kind == "der":
        return derivation_space(a)
    if kind == "antider":
        return antiderivation_space(a, left=left)
    if kind == "bider":
        return biderivation_space(a)
    raise ValueError(f"unknown kind {kind!r}")


def series_payload(a: Algebra) -> dict:
    lc = lower_central_series(a)
    dr = derived_series(a)
    return {
        "lower_central": {"dims": list(lc.dims), "index": lc.index, "nilpotent": lc.reaches_zero},
        "derived": {"dims": list(dr.dims), "index": dr.index, "solvable": dr.reaches_zero},
    }


def bider_algebra_payload(a: Algebra) -> tuple:
    """(payload, induced algebra or None)."""
    ind = bider_algebra(a)
    out = {"dim": ind.dim, "closure_ok": ind.closure_ok}
    if ind.failure is not None:
        out["closure_failure"] = [x + 1 for x in ind.failure]
    alg = ind.algebra
    if alg is not None:
        out["structure_constants"] = structure_records(alg)
        out["induced_right_leibniz"] = not check_right_leibniz(alg)
        out["series"] = series_payload(alg)
    inn = innerness(a)
    out["innerness"] = {
        "dim_bider": inn.dim_bider,
        "dim_inner": inn.dim_inner,
        "inner_equals_all": inn.inner_equals_all,
    }
    return out, alg


def _expr(e: Optional[dict]):
    if e is None:
        return None
    return {k: rat_str(v) for k, v in e.items()}


def table_payload(a: Algebra, f) -> dict:
    """Conformance of the named Bider(L) basis against its printed table."""
    pb = paper_bider_basis(f)
    rep = verify_table(a, pb)
    return {
        "family": rep.family,
        "elements": list(rep.elements),
        "defects": list(rep.defects),
        "independent": rep.independent,
        "spans_bider": rep.spans_bider,
        "pairs_checked": len(rep.rows),
        "mismatches": [
            {"left": r.left, "right": r.right, "expected": _expr(r.expected or {}), "computed": _expr(r.computed)}
            for r in rep.mismatches
        ],
        "notes": list(pb.notes),
    }


# -- verify-paper --------------------------------------------------------------


@dataclass
class Claim:
    family: str
    claim: str
    status: str  # PASS, FAIL or DELTA
    expected: object = None
    computed: object = None
    note: str = ""

    def payload(self) -> dict:
        return {
            "family": self.family,
            "claim": self.claim,
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "note": self.note,
        }


@dataclass
class Suite:
    claims: list = field(default_factory=list)

    def add(self, *args, **kw) -> Claim:
        c = Claim(*args, **kw)
        self.claims.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.status != "FAIL" for c in self.claims)

    def counts(self) -> dict:
        out = {"PASS": 0, "FAIL": 0, "DELTA": 0}
        for c in self.claims:
            out[c.status] += 1
        return out


def _pass(b: bool) -> str:
    return "PASS" if b else "FAIL"


def verify_family(f, suite: Optional[Suite] = None) -> Suite:
    """Run every checked claim about one catalog algebra."""
    f = f if isinstance(f, FamilyId) else FamilyId(*f)
    suite = suite if suite is not None else Suite()
    fam = str(f)
    a = make_algebra(f)

    viol = check_right_leibniz(a)
    suite.add(fam, "right-leibniz", _pass(not viol), 0, len(viol))

    spaces = {k: compute_space(a, k) for k in KINDS}
    for kind in KINDS:
        ed = expected_dim(f, kind)
        got = spaces[kind].dim
        if ed.stated is not None:
            if got == ed.stated:
                suite.add(fam, f"dim-{kind}", "PASS", ed.stated, got)
            elif ed.discrepancy and got == ed.parameters:
                suite.add(fam, f"dim-{kind}", "DELTA", ed.stated, got, ed.note)
            else:
                suite.add(fam, f"dim-{kind}", "FAIL", ed.stated, got, ed.note)
        form = paper_form(f, kind)
        fs = span_of(kind, a.dim, form.generators)
        equal = all(span_contains(spaces[kind], g) for g in fs) and all(span_contains(fs, g) for g in spaces[kind])
        suite.add(fam, f"form-{kind}", _pass(equal), fs.dim, spaces[kind].dim, "; ".join(form.notes))

    inter = biderivation_space_by_intersection(a)
    suite.add(fam, "bider-routes-agree", _pass(same_space(inter, spaces["bider"])), inter.dim, spaces["bider"].dim)

    if f.tag != "NF" or f.n >= 2:
        tp = table_payload(a, f)
        basis_ok = not tp["defects"] and tp["independent"] and tp["spans_bider"]
        suite.add(fam, "table-basis", _pass(basis_ok), True, basis_ok, ", ".join(tp["defects"]))
        nm = len(tp["mismatches"])
        if f.tag == "NF":
            # the NF table is asserted exactly
            suite.add(fam, "table", _pass(nm == 0), 0, nm, _mismatch_note(tp))
        else:
            suite.add(fam, "table", "PASS" if nm == 0 else "DELTA", 0, nm, _mismatch_note(tp))

    ind = bider_algebra(a, spaces["bider"])
    suite.add(fam, "bider-closure", _pass(ind.closure_ok), True, ind.closure_ok)
    if ind.algebra is not None:
        ok = not check_right_leibniz(ind.algebra)
        suite.add(fam, "bider-right-leibniz", _pass(ok), True, ok)
        if f.tag == "NF":
            solv = derived_series(ind.algebra).reaches_zero
            suite.add(fam, "bider-solvable", _pass(solv), True, solv)

    inn = innerness(a)
    if f.tag in SOLVABLE_EXTENSIONS:
        suite.add(fam, "all-inner", _pass(inn.inner_equals_all), True, inn.inner_equals_all,
                  f"dim inner {inn.dim_inner}, dim bider {inn.dim_bider}")
        if ind.algebra is not None:
            same = fingerprint(ind.algebra) == fingerprint(a)
            suite.add(fam, "fingerprint-matches", "PASS" if same else "DELTA", True, same)
    elif f.tag == "NF":
        suite.add(fam, "all-inner", _pass(not inn.inner_equals_all), False, inn.inner_equals_all,
                  f"dim inner {inn.dim_inner}, dim bider {inn.dim_bider}")
    return suite


def _mismatch_note(tp: dict) -> str:
    return "; ".join(
        f"[{m['left']},{m['right']}] expected {_fmt_expr(m['expected'])} computed {_fmt_expr(m['computed'])}"
        for m in tp["mismatches"]
    )


def _fmt_expr(e) -> str:
    if e is None:
        return "outside span"
    if not e:
        return "0"
    parts = []
    for name, c in sorted(e.items()):
        if c == "1":
            parts.append(f"+{name}")
        elif c == "-1":
            parts.append(f"-{name}")
        else:
            parts.append(f"{'' if c.startswith('-') else '+'}{c}*{name}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def sweep_families(n_max: int, tags=TAGS) -> list:
    """Every (tag, n) with a printed Bider table and n <= n_max."""
    out = []
    for t in tags:
        lo = max(MIN_N[t], 2)
        out += [FamilyId(t, n) for n in range(lo, n_max + 1)]
    return out


__all__ = [
    "Claim",
    "SOLVABLE_EXTENSIONS",
    "Suite",
    "bider_algebra_payload",
    "check_payload",
    "compute_space",
    "element_payload",
    "map_entries",
    "series_payload",
    "space_payload",
    "sweep_families",
    "table_payload",
    "verify_family",
]
