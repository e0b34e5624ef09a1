"""Command-line front end.

Exit status: 0 on success, 1 when a checked mathematical property fails,
2 on bad input (unparsable file, unknown family, invalid n).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import TAGS, FamilyId, expected_dim, make_algebra
from .io import AlgebraFileError, dump_algebra, dumps, load_algebra
from .linalg import rat_str
from .maps import Bider, LinMap
from .report import (
    Suite,
    bider_algebra_payload,
    check_payload,
    compute_space,
    series_payload,
    space_payload,
    sweep_families,
    verify_family,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=TAGS, help="catalog family tag")
    p.add_argument("--n", type=int, help="family size parameter")
    p.add_argument("--file", help="algebra file (JSON, 1-based indices)")


def _format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "pretty"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibniz-bider",
        description="Exact derivations, anti-derivations and biderivations of Leibniz algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check the Leibniz identity")
    _source_args(p)
    _format_arg(p)
    p.add_argument("--left", action="store_true", help="exit status follows the left identity")

    for kind, text in (("der", "derivations"), ("antider", "anti-derivations"), ("bider", "biderivations")):
        p = sub.add_parser(kind, help=f"space of {text}")
        _source_args(p)
        _format_arg(p)
        if kind == "antider":
            p.add_argument("--left", action="store_true", help="left anti-derivations D([x,y]) = [x,Dy] - [y,Dx]")

    p = sub.add_parser("bider-algebra", help="structure constants of Bider(L)")
    _source_args(p)
    _format_arg(p)
    p.add_argument("--emit", metavar="PATH", help="write the induced algebra as an algebra file")

    p = sub.add_parser("series", help="lower central and derived series")
    _source_args(p)
    _format_arg(p)

    p = sub.add_parser("verify-paper", help="check the catalogued claims family by family")
    p.add_argument("--family", choices=TAGS)
    p.add_argument("--n", type=int)
    p.add_argument("--all", action="store_true", help="sweep every family")
    p.add_argument("--n-max", type=int, default=None, help="largest n for --all")
    _format_arg(p)
    return parser


def _resolve(args) -> tuple:
    """(algebra, family or None) from --file or --family/--n."""
    if args.file and args.family:
        raise InputError("give either --file or --family, not both")
    if args.file:
        if args.n is not None:
            raise InputError("--n only applies to --family")
        try:
            return load_algebra(args.file), None
        except AlgebraFileError as e:
            raise InputError(str(e)) from None
    if not args.family:
        raise InputError("an algebra is required: use --file PATH or --family TAG --n N")
    if args.n is None:
        raise InputError("--family requires --n")
    try:
        f = FamilyId(args.family, args.n)
    except ValueError as e:
        raise InputError(str(e)) from None
    return make_algebra(f), f


def _echo(args) -> dict:
    keys = ("family", "n", "file", "left", "emit", "all", "n_max")
    out = {"name": args.command}
    for k in keys:
        v = getattr(args, k, None)
        if v not in (None, False):
            out[k] = v
    return out


# -- pretty printing -----------------------------------------------------------


def _matrix_lines(m: LinMap, indent: str = "  ") -> list:
    cells = [[rat_str(v) for v in row] for row in m.matrix]
    w = max(len(c) for row in cells for c in row)
    return [indent + "[" + " ".join(c.rjust(w) for c in row) + "]" for row in cells]


def _pretty_element(m) -> list:
    if isinstance(m, Bider):
        d, D = _matrix_lines(m.d, ""), _matrix_lines(m.D, "")
        w = max(len(s) for s in d)
        return ["  " + a.ljust(w) + "   " + b for a, b in zip(d, D)]
    return _matrix_lines(m)


def _pretty_space(space, warnings) -> str:
    lines = [f"{space.kind}: dim {space.dim}"]
    for w in warnings:
        lines.append(f"warning: {w}")
    if space.kind == "bider":
        lines.append("each basis element shown as d | D (columns are images of basis vectors)")
    for k, b in enumerate(space.basis, 1):
        lines.append(f"basis element {k}:")
        lines += _pretty_element(b)
    return "\n".join(lines) + "\n"


def _pretty_check(res: dict) -> str:
    lines = []
    for key, name in (("right_leibniz", "right Leibniz"), ("left_leibniz", "left Leibniz")):
        r = res[key]
        if r["ok"]:
            lines.append(f"{name}: OK")
        else:
            v = r["violations"][0]
            i, j, k = v["triple"]
            lines.append(f"{name}: FAIL ({len(r['violations'])} violating triples; first (i,j,k) = ({i},{j},{k}),"
                         f" residual [{', '.join(v['residual'])}])")
    return "\n".join(lines) + "\n"


def _pretty_series(res: dict) -> str:
    lc, dr = res["lower_central"], res["derived"]
    return (
        f"lower central dims: {lc['dims']}  nilpotent: {lc['nilpotent']}"
        + (f" (index {lc['index']})" if lc["index"] else "") + "\n"
        + f"derived dims: {dr['dims']}  solvable: {dr['solvable']}"
        + (f" (index {dr['index']})" if dr["index"] else "") + "\n"
    )


def _pretty_bider_algebra(res: dict) -> str:
    lines = [f"Bider(L): dim {res['dim']}, closure {'OK' if res['closure_ok'] else 'FAILED'}"]
    if "structure_constants" in res:
        lines.append(f"induced algebra is right Leibniz: {res['induced_right_leibniz']}")
        lines.append(_pretty_series(res["series"]).rstrip("\n"))
        lines.append("nonzero products [B_i, B_j] (canonical basis B1..):")
        prod: dict = {}
        for r in res["structure_constants"]:
            prod.setdefault((r["i"], r["j"]), []).append(f"{r['c']}*B{r['k']}")
        for (i, j), terms in sorted(prod.items()):
            lines.append(f"  [B{i}, B{j}] = " + " + ".join(terms))
    inn = res["innerness"]
    lines.append(f"inner: dim {inn['dim_inner']} of {inn['dim_bider']}; all inner: {inn['inner_equals_all']}")
    return "\n".join(lines) + "\n"


def _pretty_claims(claims: list, counts: dict) -> str:
    lines = []
    for c in claims:
        line = f"{c['status']:<5}  {c['family']:<8}  {c['claim']:<20}  expected={c['expected']} computed={c['computed']}"
        if c["note"]:
            line += f"  ({c['note']})"
        lines.append(line)
    lines.append(f"summary: {counts['PASS']} PASS, {counts['FAIL']} FAIL, {counts['DELTA']} DELTA")
    return "\n".join(lines) + "\n"


# -- commands ------------------------------------------------------------------


def _emit(args, result: dict, warnings: list, pretty_text: str, out) -> None:
    if args.format == "pretty":
        for w in warnings:
            if w not in pretty_text:
                out.write(f"warning: {w}\n")
        out.write(pretty_text)
    else:
        out.write(dumps({"command": _echo(args), "result": result, "warnings": warnings}))


def cmd_check(args, out) -> int:
    a, _ = _resolve(args)
    res = check_payload(a)
    res["basis"] = list(a.basis_labels)
    _emit(args, res, [], _pretty_check(res), out)
    key = "left_leibniz" if args.left else "right_leibniz"
    return EXIT_OK if res[key]["ok"] else EXIT_FAIL


def cmd_space(args, out) -> int:
    a, f = _resolve(args)
    space = compute_space(a, args.command, left=getattr(args, "left", False))
    warnings = list(space.warnings)
    res = space_payload(space)
    res["basis_labels"] = list(a.basis_labels)
    if f is not None:
        ed = expected_dim(f, args.command)
        if ed.stated is not None:
            res["stated_dim"] = ed.stated
            if ed.stated != space.dim:
                warnings.append(f"dimension discrepancy: stated {ed.stated}, computed {space.dim}")
    _emit(args, res, warnings, _pretty_space(space, warnings), out)
    return EXIT_OK


def cmd_series(args, out) -> int:
    a, _ = _resolve(args)
    res = series_payload(a)
    _emit(args, res, [], _pretty_series(res), out)
    return EXIT_OK


def cmd_bider_algebra(args, out) -> int:
    a, _ = _resolve(args)
    res, alg = bider_algebra_payload(a)
    warnings = []
    if check_payload(a)["right_leibniz"]["violations"]:
        warnings.append("input is not a right Leibniz algebra")
    if args.emit:
        if alg is None:
            warnings.append("nothing emitted: the induced algebra is empty or failed to close")
        else:
            try:
                Path(args.emit).write_text(dump_algebra(alg), encoding="utf-8")
            except OSError as e:
                raise InputError(f"{args.emit}: {e.strerror or e}") from None
    _emit(args, res, warnings, _pretty_bider_algebra(res), out)
    ok = res["closure_ok"] and res.get("induced_right_leibniz", True)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_paper(args, out) -> int:
    if args.all:
        if args.family or args.n is not None:
            raise InputError("--all sweeps every family; drop --family/--n")
        if args.n_max is None:
            raise InputError("--all requires --n-max")
        if args.n_max < 2:
            raise InputError("--n-max must be at least 2")
        fams = sweep_families(args.n_max)
    else:
        if not args.family or args.n is None:
            raise InputError("give --family TAG --n N, or --all --n-max K")
        if args.n_max is not None:
            raise InputError("--n-max only applies with --all")
        try:
            fams = [FamilyId(args.family, args.n)]
        except ValueError as e:
            raise InputError(str(e)) from None
    suite = Suite()
    for f in fams:
        verify_family(f, suite)
    claims = [c.payload() for c in suite.claims]
    counts = suite.counts()
    res = {"claims": claims, "summary": counts}
    _emit(args, res, [], _pretty_claims(claims, counts), out)
    return EXIT_OK if suite.ok else EXIT_FAIL


COMMANDS = {
    "check": cmd_check,
    "der": cmd_space,
    "antider": cmd_space,
    "bider": cmd_space,
    "bider-algebra": cmd_bider_algebra,
    "series": cmd_series,
    "verify-paper": cmd_verify_paper,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, which matches the input-error status
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
