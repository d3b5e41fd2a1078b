"""Command-line interface: outputs, formats and exit codes."""

import io
import json
import subprocess
import sys

import pytest

from treegrammar.cli import run
from treegrammar.grammar import SOY
from treegrammar.poly import LaurentPoly, parse_poly
from treegrammar.verify import CheckReport


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_trees_csv():
    code, out = call("trees", "--edges", "3", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 6
    assert lines[0].startswith("encoding,edges,leaf")


def test_trees_text_and_json():
    _, text = call("trees", "--edges", "2")
    assert text == "2 ()()\n2 (())\n"
    _, js = call("trees", "--edges", "4", "--tip-augmented", "--format", "json")
    data = json.loads(js)
    assert len(data["trees"]) == 4
    assert all(t["yint"] == 0 for t in data["trees"])


def test_poly_narayana_zero():
    assert call("poly", "--family", "narayana", "--n", "0") == (0, "1\n")


def test_poly_with_subst():
    code, out = call("poly", "--family", "g6", "--n", "3", "--subst", "x11=x,x12=x,x2=x",
                     "--subst", "y11=1,y12=1,y2=1")
    assert code == 0
    assert parse_poly(out) == parse_poly("x + 3*x^2 + x^3")


def test_poly_json_round_trip():
    _, out = call("poly", "--family", "m5", "--n", "3", "--format", "json")
    assert LaurentPoly.from_json(out) == parse_poly("u2*v1^2*v2 + u1*u3*v1 + u1*u2*v2 + u2*u3*v2")


def test_derive_builtin_and_file(tmp_path):
    code, out = call("derive", "--grammar", "soy", "--seed", "d", "--n", "2")
    assert (code, out) == (0, "6*a*d*t + 6*b*c*t\n")
    f = tmp_path / "soy.txt"
    f.write_text(SOY.to_text())
    assert call("derive", "--grammar", str(f), "--seed", "d", "--n", "2") == (0, out)


def test_series():
    code, out = call("series", "--family", "m2", "--order", "3")
    assert code == 0
    assert out.splitlines()[3] == "q^3: 3*u^2*v + u*v^3"


def test_gamma_and_roots():
    assert call("gamma", "--n", "3") == (0, "shift=1 m=2 gammas=[1, 1]\n")
    code, out = call("roots", "--family", "m2", "--n", "8", "--format", "json")
    assert code == 0
    assert json.loads(out)["all_real"] is True


def test_verify_pass():
    code, out = call("verify", "--suite", "symmetry", "--max-n", "5")
    assert code == 0
    assert out.strip().endswith("4/4 checks passed")


def test_verify_json():
    code, out = call("verify", "--suite", "gf", "--max-n", "3", "--format", "json")
    reports = [CheckReport.from_dict(d) for d in json.loads(out)]
    assert code == 0 and len(reports) == 8 and all(r.passed for r in reports)


def test_verify_failure_exit_code(monkeypatch):
    from treegrammar import catalog

    monkeypatch.setitem(catalog.FAMILIES[catalog.FamilyId.G4_GF].conventions, 0, parse_poly("x2"))
    code, out = call("verify", "--suite", "gf", "--max-n", "2")
    assert code == 1
    assert "FAIL  gf:g4" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["poly", "--family", "g9", "--n", "1"],
        ["poly", "--family", "g2", "--n", "-1"],
        ["poly", "--family", "g2", "--n", "2", "--subst", "x1"],
        ["derive", "--grammar", "nosuch", "--seed", "x", "--n", "1"],
        ["derive", "--grammar", "motz", "--seed", "w", "--n", "1"],
        ["derive", "--grammar", "motz", "--seed", "u +", "--n", "1"],
        ["roots", "--family", "g6", "--n", "3"],
        ["gamma", "--family", "g2", "--n", "4"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv, io.StringIO()) == 2
    assert capsys.readouterr().err


def test_output_is_deterministic():
    argv = ("trees", "--edges", "6", "--format", "csv")
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "treegrammar", "poly", "--family", "m2", "--n", "2"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "u^2 + u*v^2\n"


def test_verify_all_at_nine():
    code, out = call("verify", "--suite", "all", "--max-n", "9")
    assert code == 0
    assert "FAIL" not in out
