import json
import subprocess
import sys

import pytest

from descjones.algebra.cyclotomic import CyclotomicNumber
from descjones.algebra.laurent import LaurentPolynomial
from descjones.cli import main, parse_range
from descjones.habiro import jones_from_habiro
from descjones.rmatrix import rmatrix_suite


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_range():
    assert parse_range("5") == [5]
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("2,5,-1..0") == [2, 5, -1, 0]


def test_jones_example(capsys):
    code, out, _ = run(capsys, "jones", "--knot", "4_1", "--n", "2")
    assert code == 0
    assert out.strip() == "knot=4_1 n=2\tq^-2 - q^-1 + 1 - q + q^2"


def test_json_output_round_trips(capsys):
    code, out, _ = run(capsys, "--format", "json", "jones", "--knot", "5_2", "--n", "1..4")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [1, 2, 3, 4]
    for r in rows:
        assert LaurentPolynomial.from_json(r["value"]) == jones_from_habiro("5_2", r["n"])


def test_output_is_byte_stable(capsys):
    first = run(capsys, "--format", "json", "eval", "--knot", "5_2", "--m", "-1..1", "--N", "3,4")
    second = run(capsys, "eval", "--format", "json", "--knot", "5_2", "--m", "-1..1", "--N", "3,4")
    assert first == second
    value = json.loads(first[1])[0]["value"]
    assert CyclotomicNumber.from_json(value).N == 3


def test_conjecture_example(capsys):
    code, out, _ = run(capsys, "conjecture2", "--knot", "4_1", "--N", "3", "--color", "2")
    assert code == 0
    assert out.splitlines()[0] == "CONJECTURE-PASS conjecture2:4_1 - N=3,n=2 13 13"
    assert "PASS kashaev-diagonal:4_1" in out


def test_recursion_example(capsys):
    code, out, _ = run(capsys, "recursion-check", "--knot", "5_2", "--m", "0..5", "--n", "1..6")
    assert code == 0
    assert out.strip().endswith("summary: 36 passed, 0 failed")
    assert "FAIL" not in out.replace("0 failed", "")


def test_recursion_in_habiro_ring(capsys):
    code, out, _ = run(capsys, "recursion-check", "--knot", "4_1", "--m", "-1..1", "--level", "5")
    assert code == 0 and "summary: 3 passed" in out


def test_habiro_sources_agree(capsys):
    _, closed, _ = run(capsys, "habiro", "--knot", "5_2", "--k", "0..6")
    _, recursive, _ = run(capsys, "habiro", "--knot", "5_2", "--k", "0..6", "--source", "recursion")
    assert closed == recursive


def test_descendant_modes(capsys):
    code, out, _ = run(capsys, "descendant", "--knot", "3_1", "--m", "1", "--param", "2")
    assert code == 0 and out.strip().endswith("1 - q + q^2 + q^4 - q^5")
    code, out, _ = run(capsys, "descendant", "--knot", "3_1", "--m", "1", "--param", "2", "--mirror")
    assert code == 0 and "3_1*" in out
    for mode in ("x", "habiro", "root"):
        code, _, _ = run(capsys, "descendant", "--knot", "4_1", "--m", "0", "--param", "3", "--mode", mode)
        assert code == 0


def test_habiro_file_input(capsys, tmp_path):
    path = tmp_path / "h.txt"
    path.write_text("0\t[[0, \"1\"]]\n1\t[[0, \"1\"]]\n2\t[[0, \"1\"]]\n")
    code, out, _ = run(capsys, "jones", "--habiro-file", str(path), "--n", "2")
    assert code == 0 and "q^-2 - q^-1 + 1 - q + q^2" in out


def test_eval_two_parameter_family(capsys):
    code, out, _ = run(capsys, "eval", "--ab", "0,0", "--N", "1")
    assert code == 0 and out.strip().endswith("\t1")


def test_statesum_and_invariance(capsys):
    code, out, _ = run(capsys, "statesum", "--diagram", "4_1", "--N", "2", "--color", "1")
    assert code == 0 and out.strip() == "diagram=4_1 N=2 color=1\t(5) * 1_2"
    code, out, _ = run(capsys, "invariance", "--diagram-a", "4_1", "--diagram-b", "4_1_braid", "--N", "2..3")
    assert code == 0 and "summary: 5 passed, 0 failed" in out


def test_identities_and_rmatrix(capsys, monkeypatch):
    monkeypatch.setenv("DESCJONES_LEVEL", "6")
    code, out, _ = run(capsys, "identities-52", "--N", "5")
    assert code == 0 and "summary: 10 passed" in out
    code, out, _ = run(capsys, "rmatrix-check", "--N", "2", "--skip-yang-baxter")
    assert code == 0
    assert "YB" not in out


def test_failing_report_exits_one(capsys, monkeypatch):
    from descjones import cli
    from descjones.report import Report

    def broken(*args, **kwargs):
        report = Report()
        report.add(False, "forced", None, "-", 1, 2)
        return report

    monkeypatch.setattr(cli, "rmatrix_suite", broken)
    code, out, _ = run(capsys, "rmatrix-check", "--N", "2")
    assert code == 1 and out.startswith("FAIL forced")


@pytest.mark.parametrize("argv", [
    ["habiro", "--knot", "6_1", "--k", "1"],
    ["jones", "--knot", "4_1", "--n", "0"],
    ["jones", "--n", "2"],
    ["jones", "--knot", "4_1", "--n", "x..y"],
    ["habiro", "--knot", "3_1", "--k", "1", "--source", "recursion"],
    ["statesum", "--diagram", "/nonexistent.json", "--N", "2"],
    ["recursion-check", "--knot", "3_1*", "--m", "0"],
    ["frobnicate"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_bad_level_env(capsys, monkeypatch):
    monkeypatch.setenv("DESCJONES_LEVEL", "zero")
    code, _, err = run(capsys, "identities-52", "--N", "5")
    assert code == 2 and "DESCJONES_LEVEL" in err


def test_malformed_diagram_file(capsys, tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"slices": [{"event": "cup", "pos": 1}, {"event": "X4+", "pos": 1},
                                           {"event": "X4+", "pos": 0}, {"event": "cap", "pos": 0}]}))
    code, _, err = run(capsys, "statesum", "--diagram", str(path), "--N", "2")
    assert code == 2 and "writhe" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "descjones", "eval", "--knot", "4_1", "--N", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "knot=4_1 m=0 N=2\t5"
