import json
import subprocess
import sys

import pytest

from qalg.cli import main
from conftest import FIXTURES


def run(capsys, *args):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


def fx(name):
    return FIXTURES / f"{name}.qalg"


def test_report_example_3_json(capsys):
    code, out, _ = run(capsys, "report", fx("example_3"), "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert rep["hochschild"]["presentation"] == "K[x1]/()"
    assert [g["degree"] for g in rep["hochschild"]["generators"]] == [4]
    assert {v: r["status"] for v, r in rep["varieties"].items()} == {
        "1": "Nontrivial", "2": "Trivial", "3": "Nontrivial", "4": "Trivial"}
    assert rep["homology"]["gorenstein"] == "Gorenstein(2, 2)"


def test_stacked_example_1(capsys):
    code, out, _ = run(capsys, "stacked", fx("example_1"), "--json")
    st = json.loads(out)["stacked"]
    assert code == 0 and (st["D"], st["A"]) == (2, 1)


def test_hh_nonstacked_exit_2(capsys):
    code, out, err = run(capsys, "hh", fx("nonstacked"))
    assert code == 2 and "not (D,A)-stacked" in err and out == ""


def test_validation_failure_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.qalg"
    bad.write_text("algebra b\nvertices 1\narrow a 1 1\n")
    code, _, err = run(capsys, "validate", bad)
    assert code == 1 and "infinite-dimensional" in err
    bad.write_text("algebra b\nvertices 1\narrow a 1 2\n")
    code, _, err = run(capsys, "validate", bad)
    assert code == 1 and "unknown-vertex" in err


def test_missing_file_exit_1(capsys, tmp_path):
    code, _, _ = run(capsys, "validate", tmp_path / "nope.qalg")
    assert code == 1


@pytest.mark.parametrize("args", [
    ["validate"], ["chains", "--max-degree", "4"], ["stacked"], ["hh"], ["classify-simples"], ["pd"],
    ["pd", "--vertex", "2"], ["resolve", "--module", "inj:3", "--max", "4"], ["center"], ["ext", "--max-degree", "4"],
    ["fg-probe", "--window", "2..6"], ["report"],
])
def test_every_command_text_and_json(capsys, args):
    code, out, _ = run(capsys, args[0], fx("not_gorenstein"), *args[1:])
    assert code == 0 and out
    code, out, _ = run(capsys, args[0], fx("not_gorenstein"), *args[1:], "--json")
    assert code == 0 and json.loads(out)["schema"] == 1


def test_resolve_i3_text(capsys):
    code, out, _ = run(capsys, "resolve", fx("not_gorenstein"), "--module", "inj:3", "--max", "6")
    assert code == 0
    assert "P_0: e_3^2" in out and "P_6: e_2^12" in out and "periodic" in out


def test_bad_module_argument(capsys):
    with pytest.raises(SystemExit):
        main(["resolve", str(fx("example_1")), "--module", "weird:1"])


def test_env_var_bounds_degree(capsys, monkeypatch):
    monkeypatch.setenv("QALG_MAX_DEGREE", "3")
    _, out, _ = run(capsys, "chains", fx("example_1"), "--json")
    assert sorted(json.loads(out)["chains"], key=int) == ["0", "1", "2", "3"]


@pytest.mark.parametrize("name", ["example_1", "example_2", "example_3", "not_gorenstein", "radical_square_zero", "nonstacked"])
def test_report_deterministic_across_runs_and_threads(capsys, name):
    outputs = set()
    for extra in ([], ["--parallel"], []):
        code, out, _ = run(capsys, "report", fx(name), "--json", *extra)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_report_in_fresh_processes_is_byte_identical():
    cmd = [sys.executable, "-m", "qalg.cli", "report", str(fx("example_2")), "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b


def test_timing_flag_appends_time(capsys):
    _, out, _ = run(capsys, "report", fx("example_1"), "--timing")
    assert "timing:" in out
