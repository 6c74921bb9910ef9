import json
import subprocess
import sys

import pytest

from wittforge import tables
from wittforge.cli import run
from wittforge.forms import DiagonalForm, dumps_form


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def machine(capsys, *argv):
    code, out, _ = cli(capsys, *argv, "--format", "machine")
    assert code == 0
    return json.loads(out)


def test_ideal_level_3(capsys):
    code, out, _ = cli(capsys, "ideal", "--level", "3", "--form", "1,1,1,1,1,1,1,1")
    assert code == 0 and out.strip() == "true"
    assert machine(capsys, "ideal", "--level", "3", "--form", "1,1,1,1") == {"level": 3, "member": False}


def test_invariants(capsys):
    rec = machine(capsys, "invariants", "--form", "1,-1")
    assert rec["dimension"] == 2 and rec["signature"] == 0
    code, out, _ = cli(capsys, "invariants", "--form", "1,2", "--field", "Fp:5")
    assert code == 0 and "signature" not in out


def test_witt_equiv_and_hyperbolic(capsys):
    assert machine(capsys, "witt-equiv", "--form", "1,1,-1", "--form", "1") == {"witt_equivalent": True}
    assert machine(capsys, "hyperbolic", "--form", "1,2,-1,-2", "--field", "Fp:5") == {"hyperbolic": True}
    assert machine(capsys, "hyperbolic", "--form", "1,1") == {"hyperbolic": False}


def test_pfister_expand(capsys):
    code, out, _ = cli(capsys, "pfister-expand", "--slots", "2,3", "--sign", "-")
    assert code == 0 and out.strip() == "-<<2, 3>> = <-1, -2, -3, -6>"


def test_decompose(capsys):
    rec = machine(capsys, "decompose", "--level", "1", "--form", "2,3")
    assert rec["count"] == 2
    rec = machine(capsys, "decompose", "--level", "2", "--form", "1,1,1,1")
    assert rec["count"] <= 2 and all(t["fold"] == 2 for t in rec["terms"])


def test_decompose_outside_ideal_is_domain_error(capsys):
    code, _, err = cli(capsys, "decompose", "--level", "2", "--form", "1,1")
    assert code == 1 and "I^2" in err


def test_phi(capsys):
    rec = machine(capsys, "phi", "--triples", "2,3,5; -(7,11,13); 1/2,3,-1")
    assert rec["r"] == 3 and rec["dimension"] == 22 and rec["in_I3"] is True


def test_clifford_and_ed(capsys):
    rec = machine(capsys, "clifford", "--n", "6")
    assert rec["center_kind"] == "Z4" and rec["ed"] == 4 and rec["order"] == 64
    rec = machine(capsys, "ed", "--n", "16")
    assert rec["ed_G_n"] == rec["closed_form"] == 129
    assert rec["minus_dim_spin"] == 9


def test_bounds(capsys):
    code, out, _ = cli(capsys, "bounds", "--n", "20")
    assert code == 0
    assert "lower 326" in out and "upper 342" in out
    rec = machine(capsys, "bounds", "--n", "20")
    assert rec["tn_interval"] == [325, 342]


def test_table_matches_module(capsys):
    code, out, _ = cli(capsys, "table", "--which", "rost")
    assert code == 0 and out == tables.render("rost")


def test_selftest(capsys):
    code, out, _ = cli(capsys, "selftest", "--trials", "5")
    assert code == 0 and "FAIL" not in out


def test_form_round_trip_through_file(capsys, tmp_path):
    q = DiagonalForm.of(["1/3", -2, 7])
    path = tmp_path / "q.json"
    path.write_text(dumps_form(q))
    out_path = tmp_path / "out.json"
    code, out, _ = cli(capsys, "invariants", "--form", str(path), "--format", "machine", "--out", str(out_path))
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["dimension"] == 3
    inline = machine(capsys, "invariants", "--form", json.dumps({"field": "Q", "diag": ["1/3", "-2", "7"]}))
    assert inline == json.loads(out_path.read_text())


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["invariants", "--form", '{"field": "Q", "diag": ["1", "x"]}'], "diag[1]"),
        (["invariants", "--form", "1,0"], "--form"),
        (["invariants", "--form", "{not json"], "--form"),
        (["invariants"], "--form"),
        (["invariants", "--form", "1", "--field", "R"], "--field"),
        (["invariants", "--form", "1", "--field", "Fp:4"], "--field"),
        (["clifford"], "--n"),
        (["table", "--which", "nope"], "--which"),
    ],
)
def test_malformed_input_exits_2(capsys, argv, fragment):
    code, _, err = cli(capsys, *argv)
    assert code == 2 and fragment in err


def test_domain_errors_exit_1(capsys):
    assert cli(capsys, "clifford", "--n", "40")[0] == 1
    assert cli(capsys, "decompose", "--level", "1", "--form", "1,2,3")[0] == 1
    # a 2-fold form where a triple is expected parses fine but is out of domain
    assert cli(capsys, "phi", "--triples", "1,2")[0] == 1


def test_unknown_verb_exits_2():
    proc = subprocess.run([sys.executable, "-m", "wittforge", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_machine_output_is_deterministic():
    argv = [sys.executable, "-m", "wittforge", "table", "--which", "all"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b == tables.render("all")
