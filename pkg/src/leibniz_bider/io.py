"""Algebra files and canonical JSON output.

An algebra file is a JSON object::

    {"dim": 3,
     "basis": ["e1", "e2", "e3"],            (optional)
     "brackets": [{"i": 1, "j": 1, "k": 2, "c": "1"}, ...]}

Indices are 1-based; ``c`` is an integer or "p/q" string.  Entries that are
not listed are zero.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .algebra import Algebra
from .linalg import rat_str


class AlgebraFileError(ValueError):
    """Malformed or invalid algebra file; the message names the field."""


def _fail(where: str, msg: str):
    raise AlgebraFileError(f"{where}: {msg}")


def _index(rec: dict, key: str, dim: int, where: str) -> int:
    v = rec.get(key)
    if isinstance(v, bool) or not isinstance(v, int):
        _fail(f"{where}.{key}", f"expected an integer index, got {v!r}")
    if not 1 <= v <= dim:
        _fail(f"{where}.{key}", f"index {v} outside 1..{dim}")
    return v - 1


_RAT = re.compile(r"\s*[+-]?\d+(/\d+)?\s*")


def _coeff(v, where: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        _fail(where, f"expected an integer or 'p/q' string, got {v!r}")
    if isinstance(v, str) and not _RAT.fullmatch(v):
        _fail(where, f"not a rational 'p' or 'p/q' string: {v!r}")
    try:
        return Fraction(v)
    except ZeroDivisionError:
        _fail(where, f"zero denominator in {v!r}")


def algebra_from_dict(obj, source: str = "<input>") -> Algebra:
    if not isinstance(obj, dict):
        _fail(source, "top level must be an object")
    unknown = set(obj) - {"dim", "basis", "brackets"}
    if unknown:
        _fail(source, f"unknown field(s) {', '.join(sorted(unknown))}")
    dim = obj.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        _fail(f"{source}: dim", f"expected a positive integer, got {dim!r}")
    labels = obj.get("basis")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            _fail(f"{source}: basis", "expected a list of names")
        if len(labels) != dim:
            _fail(f"{source}: basis", f"{len(labels)} names for dimension {dim}")
        if len(set(labels)) != dim:
            _fail(f"{source}: basis", "names must be distinct")
    recs = obj.get("brackets", [])
    if not isinstance(recs, list):
        _fail(f"{source}: brackets", "expected a list")
    table: dict = {}
    seen = set()
    for n, rec in enumerate(recs):
        where = f"{source}: brackets[{n}]"
        if not isinstance(rec, dict):
            _fail(where, "expected an object with i, j, k, c")
        extra = set(rec) - {"i", "j", "k", "c"}
        if extra:
            _fail(where, f"unknown field(s) {', '.join(sorted(extra))}")
        if "c" not in rec:
            _fail(f"{where}.c", "missing coefficient")
        i, j, k = (_index(rec, key, dim, where) for key in "ijk")
        if (i, j, k) in seen:
            _fail(where, f"duplicate entry for (i, j, k) = ({i + 1}, {j + 1}, {k + 1})")
        seen.add((i, j, k))
        table.setdefault((i, j), {})[k] = _coeff(rec["c"], f"{where}.c")
    return Algebra(dim, table, labels)


def parse_algebra(text: str, source: str = "<input>") -> Algebra:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise AlgebraFileError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from None
    return algebra_from_dict(obj, source)


def load_algebra(path) -> Algebra:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise AlgebraFileError(f"{path}: {e.strerror or e}") from None
    return parse_algebra(text, str(path))


def structure_records(a: Algebra) -> list:
    """Nonzero structure constants as sorted 1-based records."""
    return [
        {"i": i + 1, "j": j + 1, "k": k + 1, "c": rat_str(c)}
        for (i, j), vec in sorted(a.table.items())
        for k, c in sorted(vec.items())
    ]


def algebra_to_dict(a: Algebra) -> dict:
    out = {"dim": a.dim, "brackets": structure_records(a)}
    if a.labels is not None:
        out["basis"] = list(a.labels)
    return out


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dump_algebra(a: Algebra) -> str:
    return dumps(algebra_to_dict(a))
