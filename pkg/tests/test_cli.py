import json
import subprocess
import sys

import pytest

from lcg.cli import main


def run(*argv):
    return main(list(argv))


def test_list(capsys):
    assert run("list") == 0
    out = capsys.readouterr().out
    assert "N4_8" in out and "T^2-T-a has no root in F" in out


def test_list_with_field(capsys):
    assert run("list", "--field", "2^2") == 0
    out = capsys.readouterr().out
    assert "unsatisfiable_over_finite_field" in out


def test_verify_pass_with_json(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run("verify", "--algebra", "N4_11", "--q", "3", "--shapes", "--json", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["verdict"]["status"] == "pass" and doc["params"] == {}
    assert "28/28" in capsys.readouterr().out


def test_verify_with_parameters_and_poly(tmp_path):
    out = tmp_path / "r.json"
    assert run("verify", "--algebra", "N4_10", "--alpha", "2", "--beta", "3", "--q", "2^2", "--poly", "1,1,1", "--json", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["params"] == {"alpha": 2, "beta": 3} and doc["field"]["modulus"] == [1, 1, 1]


def test_verify_failure_exit_code():
    # N4_8 has q^2 + 1 components while the closed form gives q^2 + 2
    assert run("verify", "--algebra", "N4_8", "--alpha", "1", "--q", "2") == 1


def test_verify_unsatisfiable_exit_code(capsys):
    assert run("verify", "--algebra", "N4_9", "--alpha", "1", "--q", "4") == 2
    assert "UnsatisfiableOverFiniteField" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--algebra", "N4_5", "--q", "3"],
        ["verify", "--algebra", "N4_1", "--alpha", "1", "--q", "3"],
        ["verify", "--algebra", "N9_9", "--q", "3"],
        ["verify", "--algebra", "N2", "--q", "6"],
        ["verify", "--algebra", "N3_2", "--alpha", "5", "--q", "3"],
        ["verify", "--q", "3"],
        ["sweep", "--max-q", "11", "--json", "x.json"],
        ["sweep", "--max-q", "3", "--dims", "5", "--json", "x.json"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_verify_algebra_json(tmp_path, capsys):
    spec = {"field": "3", "dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": [1, 0]}], "name": "mine"}
    path = tmp_path / "a.json"
    path.write_text(json.dumps(spec))
    out = tmp_path / "r.json"
    assert run("verify", "--algebra-json", str(path), "--json", str(out)) == 0
    assert json.loads(out.read_text())["computed"]["cc_count"] == 4


@pytest.mark.parametrize("doc", [{}, [1], {"field": "3", "dim": "x"}, {"field": "6", "dim": 2}])
def test_verify_malformed_algebra_json_is_usage_error(tmp_path, capsys, doc):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert run("verify", "--algebra-json", str(path)) == 2
    assert "lcg: error" in capsys.readouterr().err


def test_sweep_writes_report(tmp_path, capsys):
    out = tmp_path / "s.json"
    assert run("sweep", "--max-q", "3", "--dims", "2,3", "--json", str(out)) == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1 and doc["summary"]["fail"] == 0


def test_sweep_exit_code_reflects_failures(tmp_path):
    out = tmp_path / "s.json"
    code = run("sweep", "--max-q", "2", "--dims", "4", "--json", str(out), "--no-shapes")
    doc = json.loads(out.read_text())
    assert code == (1 if doc["summary"]["fail"] else 0)


def test_graph_export(tmp_path, capsys):
    e, l = tmp_path / "e.csv", tmp_path / "l.csv"
    assert run("graph", "--algebra", "N4_7", "--q", "2", "--edges", str(e), "--labels", str(l)) == 0
    assert e.read_text().startswith("u_index,v_index\n")
    assert len(l.read_text().splitlines()) == 16


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "lcg", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and "N4_13" in res.stdout
