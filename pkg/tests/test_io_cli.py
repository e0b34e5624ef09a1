import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibniz_bider.algebra import Algebra
from leibniz_bider.catalog import MIN_N, TAGS, make_algebra
from leibniz_bider.cli import main
from leibniz_bider.io import AlgebraFileError, algebra_from_dict, dump_algebra, parse_algebra


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def write(tmp_path, obj, name="alg.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


# -- file format ---------------------------------------------------------------


def test_parse_basic():
    a = parse_algebra('{"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 2, "c": "3/6"}]}')
    assert a.dim == 2 and a.structure(0, 0) == {1: 1 / 2}


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ({"dim": 0}, "dim"),
        ({"dim": 2, "brackets": [{"i": 3, "j": 1, "k": 1, "c": "1"}]}, "brackets[0].i"),
        ({"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1, "c": "0.5"}]}, "brackets[0].c"),
        ({"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1, "c": 0.5}]}, "brackets[0].c"),
        ({"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1, "c": "1/0"}]}, "zero denominator"),
        ({"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1}]}, "missing coefficient"),
        ({"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1, "c": "1"}, {"i": 1, "j": 1, "k": 1, "c": "2"}]},
         "duplicate"),
        ({"dim": 2, "basis": ["a"]}, "basis"),
        ({"dim": 2, "extra": 1}, "unknown field"),
        ([], "top level"),
    ],
)
def test_parse_errors(obj, fragment):
    with pytest.raises(AlgebraFileError) as e:
        algebra_from_dict(obj)
    assert fragment in str(e.value)


def test_json_syntax_error_has_line():
    with pytest.raises(AlgebraFileError) as e:
        parse_algebra('{"dim": 2,\n "brackets": [}', "f.json")
    assert "line 2" in str(e.value)


@pytest.mark.parametrize("tag", TAGS)
def test_catalog_round_trip(tag):
    a = make_algebra((tag, max(MIN_N[tag], 5)))
    text = dump_algebra(a)
    b = parse_algebra(text)
    assert b == a and b.labels == a.labels
    assert dump_algebra(b) == text


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def algebras(draw):
    n = draw(st.integers(1, 4))
    keys = draw(st.lists(st.tuples(*(st.integers(0, n - 1),) * 3), unique=True, max_size=12))
    table = {}
    for i, j, k in keys:
        table.setdefault((i, j), {})[k] = draw(coeff)
    labels = draw(st.one_of(st.none(), st.just([f"x{t}" for t in range(n)])))
    return Algebra(n, table, labels)


@settings(max_examples=100, deadline=None)
@given(algebras())
def test_round_trip_property(a):
    assert parse_algebra(dump_algebra(a)) == a


# -- commands ------------------------------------------------------------------


def test_check_ok_and_left(tmp_path):
    code, out = run("check", "--family", "NF", "--n", "5", "--format", "pretty")
    assert code == 0 and "right Leibniz: OK" in out
    code, _ = run("check", "--family", "NF", "--n", "5", "--left")
    assert code == 1


def test_check_lie_table_passes_both(tmp_path):
    sl2 = {"dim": 3, "brackets": [
        {"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 2, "j": 1, "k": 3, "c": "-1"},
        {"i": 3, "j": 1, "k": 1, "c": "2"}, {"i": 1, "j": 3, "k": 1, "c": "-2"},
        {"i": 3, "j": 2, "k": 2, "c": "-2"}, {"i": 2, "j": 3, "k": 2, "c": "2"},
    ]}
    path = write(tmp_path, sl2)
    assert run("check", "--file", path)[0] == 0
    assert run("check", "--file", path, "--left")[0] == 0


def test_check_broken_table(tmp_path):
    path = write(tmp_path, {"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1, "c": "1"}]})
    code, out = run("check", "--file", path, "--format", "pretty")
    assert code == 1
    assert "right Leibniz: FAIL" in out and "(1,1,1)" in out
    code, out = run("check", "--file", path)
    rep = json.loads(out)
    assert rep["result"]["right_leibniz"]["violations"][0] == {"triple": [1, 1, 1], "residual": ["-1", "0"]}


def test_space_commands():
    assert json.loads(run("bider", "--family", "NF", "--n", "4")[1])["result"]["dim"] == 7
    assert json.loads(run("der", "--family", "NF", "--n", "2")[1])["result"]["dim"] == 2
    assert json.loads(run("antider", "--family", "F1", "--n", "5")[1])["result"]["dim"] == 7
    left = json.loads(run("antider", "--family", "NF", "--n", "4", "--left")[1])
    assert left["command"]["left"] is True


def test_space_reports_discrepancy():
    rep = json.loads(run("bider", "--family", "R_NF", "--n", "5")[1])
    assert rep["result"]["stated_dim"] == 7 and rep["result"]["dim"] == 6
    assert any("discrepancy" in w for w in rep["warnings"])


def test_space_pretty_layout():
    code, out = run("der", "--family", "NF", "--n", "2", "--format", "pretty")
    assert code == 0
    assert out.splitlines()[0] == "der: dim 2"


def test_non_leibniz_file_warns(tmp_path):
    path = write(tmp_path, {"dim": 2, "brackets": [{"i": 1, "j": 1, "k": 1, "c": "1"}]})
    rep = json.loads(run("der", "--file", path)[1])
    assert rep["warnings"] == ["input is not a right Leibniz algebra"]


def test_series_command():
    rep = json.loads(run("series", "--family", "NF", "--n", "4")[1])
    assert rep["result"]["lower_central"]["dims"] == [4, 3, 2, 1, 0]
    assert rep["result"]["lower_central"]["index"] == 5


def test_bider_algebra_command(tmp_path):
    emitted = tmp_path / "bider.json"
    code, out = run("bider-algebra", "--family", "NF", "--n", "3", "--emit", str(emitted))
    rep = json.loads(out)["result"]
    assert code == 0 and rep["dim"] == 5 and rep["series"]["derived"]["solvable"]
    back = parse_algebra(emitted.read_text())
    assert back.dim == 5
    assert dump_algebra(back) == emitted.read_text()
    code, out = run("bider-algebra", "--family", "R_NF", "--n", "4")
    assert json.loads(out)["result"]["innerness"]["inner_equals_all"] is True
    path = write(tmp_path, {"dim": 2, "brackets": []}, "ab.json")
    assert json.loads(run("bider-algebra", "--file", path)[1])["result"]["dim"] == 8


def test_verify_paper_rows():
    code, out = run("verify-paper", "--family", "R_NF", "--n", "5")
    rep = json.loads(out)["result"]
    dim_row = next(c for c in rep["claims"] if c["claim"] == "dim-bider")
    assert dim_row["status"] == "DELTA"
    assert (dim_row["expected"], dim_row["computed"]) == (7, 6)
    assert code == 0


def test_verify_paper_nf_table_row_reports_truth():
    # the NF table row is asserted; only its k-1 coefficient rows disagree
    code, out = run("verify-paper", "--family", "NF", "--n", "6")
    claims = json.loads(out)["result"]["claims"]
    bad = [c for c in claims if c["status"] == "FAIL"]
    assert [c["claim"] for c in bad] == ["table"]
    assert code == 1


def test_verify_paper_sweep_small():
    code, out = run("verify-paper", "--all", "--n-max", "4", "--format", "pretty")
    assert "summary:" in out
    assert "R_F1(4)" in out and "NF(2)" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["bider"],
        ["bider", "--family", "NF"],
        ["bider", "--family", "F1", "--n", "2"],
        ["bider", "--family", "NF", "--n", "3", "--file", "x.json"],
        ["bider", "--file", "/nonexistent/x.json"],
        ["verify-paper", "--all"],
        ["verify-paper", "--family", "NF"],
        ["frobnicate"],
        ["bider", "--family", "ZZ", "--n", "3"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    assert main(argv, out=io.StringIO()) == 2


def test_malformed_file_exit_2(tmp_path, capsys):
    path = write(tmp_path, '{"dim": 2, "brackets": [{"i": 1, "j": 9, "k": 1, "c": "1"}]}')
    assert main(["check", "--file", path], out=io.StringIO()) == 2
    assert "brackets[0].j" in capsys.readouterr().err


def test_reports_are_deterministic():
    a = run("bider-algebra", "--family", "L1", "--n", "4")[1]
    b = run("bider-algebra", "--family", "L1", "--n", "4")[1]
    assert a == b
    assert json.dumps(json.loads(a), sort_keys=True, indent=2) + "\n" == a


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "leibniz_bider", "der", "--family", "NF", "--n", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["dim"] == 3
