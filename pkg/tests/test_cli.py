import json
import subprocess
import sys

import pytest

from sgf import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "4,9,15", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["schema"] == 1
    assert doc["frobenius"] == 14 and doc["pf"] == [11, 14]
    keys = ["schema", "command", "input", "oracle_checked", "generators", "minimal_generators", "gcd",
            "multiplicity", "embedding_dimension", "frobenius", "genus", "pf", "type", "wilf"]
    assert list(doc) == keys
    assert doc["wilf"] == {"holds": True, "n": 3, "green_count": 6, "ratio": [6, 5]}
    assert "elapsed_ms" not in doc


def test_analyze_space_separated_and_gaps(capsys):
    code, out, _ = run(capsys, "analyze", "4", "9", "15", "--json", "--with-gaps", "--oracle")
    doc = json.loads(out)
    assert code == 0 and doc["gaps"] == [1, 2, 3, 5, 6, 7, 10, 11, 14]
    assert doc["oracle_checked"] is True


def test_frobenius_text(capsys):
    assert run(capsys, "frobenius", "2,3") == (0, "1\n", "")


@pytest.mark.parametrize("argv, key, value", [
    (("gaps", "3,5"), "gaps", [1, 2, 4, 7]),
    (("pf", "7,8,10"), "pf", [13, 19]),
    (("reduce", "5,6,9"), "frobenius", 13),
    (("bezout", "4,9"), "coefficients", [-2, 1]),
    (("bezout", "6,9", "--mode", "semigroup"), "valid", True),
    (("conductor", "6,10"), "alpha0", 8),
    (("ncrep", "4", "9", "15"), "k", 1),
    (("ncrep", "4", "9", "30"), "alpha", 3),
    (("family", "arith", "5", "1", "2"), "values", [13, 11]),
    (("family", "ss", "8", "1"), "value", 23),
    (("sylvester", "3", "5"), "pairs", [[1, 14], [2, 13], [4, 11], [7, 8]]),
])
def test_commands_json(capsys, argv, key, value):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    assert json.loads(out)[key] == value


def test_jk_json(capsys):
    code, out, _ = run(capsys, "jk", "7", "8", "10", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["candidates"] == [13] and doc["oracle_pf"] == [13, 19]
    assert [s["kind"] for s in doc["stage_trace"]["steps"]] == ["origin", "downgrade", "in_q"]


def test_sylvester_cross_checks(capsys):
    code, out, _ = run(capsys, "sylvester", "4", "9", "--json", "--oracle")
    doc = json.loads(out)
    assert code == 0
    assert doc["counts"] == {"nc": 12, "c": 12, "formula": 12}
    assert doc["frobenius_agrees"] and doc["po_set_equals_nc"] and doc["two_green_equals_f_plus_1"]


def test_text_output(capsys):
    code, out, _ = run(capsys, "analyze", "7,8,10")
    assert code == 0
    assert "frobenius: 19" in out and "pf: [13, 19]" in out


@pytest.mark.parametrize("argv", [
    ("analyze",),
    ("analyze", "4,x"),
    ("frobenius", "2,3", "--seed-free=1"),
    ("nonsense",),
    ("scan", "wilf", "--max-gen", "10"),
    ("scan", "stage2", "--max-a2", "2", "--max-a3", "10"),
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err


@pytest.mark.parametrize("argv", [
    ("analyze", "6,9"),
    ("frobenius", "0,3"),
    ("frobenius", "3", str(1 << 64)),
    ("ncrep", "4", "6", "5"),
    ("ncrep", "7", "8", "-3"),
    ("jk", "4", "9", "13"),
    ("family", "ss", "6", "1"),
    ("reduce", "6,9,15"),
])
def test_domain_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_seed_free_accepted(capsys):
    assert run(capsys, "frobenius", "2,3", "--seed-free")[0] == 0


def test_timing_flag(capsys):
    code, out, _ = run(capsys, "frobenius", "2,3", "--json", "--timing")
    assert isinstance(json.loads(out)["elapsed_ms"], float)


def test_scan_outputs_and_progress(capsys):
    code, out, err = run(capsys, "scan", "stage2", "--max-a2", "12", "--max-a3", "40", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["counterexamples"]
    assert "[scan stage2]" in err and "[scan" not in out
    code, out, _ = run(capsys, "scan", "ert", "--max-a2", "10", "--max-a3", "40", "--json", "--parallel", "3")
    assert code == 0 and json.loads(out)["counterexamples"] == []
    code, out, _ = run(capsys, "scan", "wilf", "--max-gen", "12", "--max-dim", "3", "--json")
    assert code == 0 and json.loads(out)["stats"]["violations"] == 0


def test_json_integers_only(capsys):
    def walk(v):
        assert not isinstance(v, float)
        if isinstance(v, dict):
            for x in v.values():
                walk(x)
        elif isinstance(v, list):
            for x in v:
                walk(x)
    for argv in (("analyze", "4,9,15"), ("jk", "7", "8", "10"), ("sylvester", "5", "7"), ("reduce", "6,10,15")):
        _, out, _ = run(capsys, *argv, "--json")
        walk(json.loads(out))


def test_command_result_round_trip(capsys):
    _, out, _ = run(capsys, "jk", "4", "9", "15", "--json")
    result = cli.CommandResult.from_json(out)
    assert result.command == "jk" and result.oracle_checked
    assert result.to_json() == out.strip()
    timed = cli.CommandResult("frobenius", {"gens": ["2,3"]}, {"frobenius": 1}, False, 1.5)
    assert cli.CommandResult.from_json(timed.to_json(timing=True)) == timed


def test_byte_identical_across_processes_and_workers():
    cmd = [sys.executable, "-m", "sgf", "scan", "stage2", "--max-a2", "10", "--max-a3", "60", "--json"]
    first = subprocess.run(cmd + ["--parallel", "4"], capture_output=True, check=True).stdout
    second = subprocess.run(cmd + ["--parallel", "1"], capture_output=True, check=True).stdout
    assert first == second
