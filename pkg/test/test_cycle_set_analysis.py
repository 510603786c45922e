"""Test the command line."""
from catalog import get_entry
from cycle_set_analysis import EXIT_INCONSISTENT, EXIT_INVALID_INPUT, EXIT_OK, EXIT_USAGE, run
from permutation_braces import gbrace
from text_formats import parse_brace, parse_solution, render_cycle_set
from cycle_sets import to_solution
import json
import pytest


def test_theorem(capsys: pytest.CaptureFixture) -> None:
    """Test the three conditions on P4, as JSON."""
    assert run(["theorem", "--catalog", "P4", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["group_order"] == 8
    assert report["cond1"] and report["cond2"] and report["cond3"]
    assert report["equivalent"] and report["preconditions_hold"]
    assert len(report["minimal_ideals"]) == 1


def test_enumerate(capsys: pytest.CaptureFixture) -> None:
    """Test listing every cycle set of a size."""
    assert run(["--json", "enumerate", "2", "--simple-only"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["count"] == 2
    assert all(listed["simple"] for listed in report["cycle_sets"])

    assert run(["enumerate", "3", "--up-to-iso", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["count"] == 5

    assert run(["enumerate", "9"]) == EXIT_USAGE
    assert "error: usage:" in capsys.readouterr().err


def test_classify(capsys: pytest.CaptureFixture) -> None:
    """Test that prime sizes go through the prime case."""
    assert run(["classify", "--catalog", "C_7", "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["branch"] == "prime"
    assert report["simple"] is True and report["oracle"] is True

    assert run(["classify", "-c", "P4"]) == EXIT_OK
    assert "branch: general\n" in capsys.readouterr().out


def test_analyze_and_catalog(capsys: pytest.CaptureFixture) -> None:
    """Test the analysis report and the catalog listing."""
    assert run(["analyze", "-c", "P4", "--json"]) == EXIT_OK
    first = capsys.readouterr().out
    assert json.loads(first)["ideal_sizes"] == [1, 4, 8]
    assert run(["analyze", "-c", "P4", "--json"]) == EXIT_OK
    assert capsys.readouterr().out == first

    assert run(["catalog", "--json"]) == EXIT_OK
    assert [entry["id"] for entry in json.loads(capsys.readouterr().out)][:5] == ["E12a", "E12b", "E16", "E27", "P4"]
    assert run(["catalog", "show", "C_5", "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["expected"]["multipermutation_level"] == 1


def test_usage_errors(capsys: pytest.CaptureFixture, tmp_path) -> None:
    """Test the usage exit code."""
    assert run([]) == EXIT_USAGE
    assert run(["theorem", "--catalog", "P5"]) == EXIT_USAGE
    assert "P5" in capsys.readouterr().err
    assert run(["catalog", "show", "P5", "--json"]) == EXIT_USAGE
    assert json.loads(capsys.readouterr().err)["error"] == "usage"
    assert run(["validate", str(tmp_path / "missing.txt")]) == EXIT_USAGE
    assert run(["convert", str(tmp_path / "missing.txt"), "--to", "solution"]) == EXIT_USAGE


def test_invalid_input(capsys: pytest.CaptureFixture, tmp_path) -> None:
    """Test the invalid input exit code."""
    invalid = tmp_path / "invalid.txt"
    invalid.write_text("n 2\nsigma 1 := ()\nsigma 2 := (1,2)\n", encoding="utf-8")
    assert run(["validate", str(invalid)]) == EXIT_INVALID_INPUT
    assert "CycleSetError" in capsys.readouterr().err

    malformed = tmp_path / "malformed.txt"
    malformed.write_text("n 2\nsigma 1 := ()\nsigma 2 := (1 2)\n", encoding="utf-8")
    assert run(["analyze", str(malformed), "--json"]) == EXIT_INVALID_INPUT
    error = json.loads(capsys.readouterr().err)
    assert error["error"] == "ParseError"
    assert "line 3" in error["message"]

    valid = tmp_path / "valid.txt"
    valid.write_text(render_cycle_set(get_entry("C_3").cycle_set), encoding="utf-8")
    assert run(["validate", str(valid), "--json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["valid"] is True


def test_convert_and_save(capsys: pytest.CaptureFixture, tmp_path) -> None:
    """Test converting to a solution and back, and saving a brace."""
    p4 = get_entry("P4").cycle_set
    cycle_set_file = tmp_path / "p4.txt"
    cycle_set_file.write_text(render_cycle_set(p4), encoding="utf-8")

    assert run(["convert", str(cycle_set_file), "--to", "solution"]) == EXIT_OK
    solution_text = capsys.readouterr().out
    assert parse_solution(solution_text) == to_solution(p4)
    solution_file = tmp_path / "p4_solution.txt"
    solution_file.write_text(solution_text, encoding="utf-8")
    assert run(["convert", str(solution_file), "--to", "cycleset"]) == EXIT_OK
    assert capsys.readouterr().out == render_cycle_set(p4)
    assert run(["convert", str(cycle_set_file), "--to", "solution", "--json"]) == EXIT_OK
    converted = json.loads(capsys.readouterr().out)
    assert converted == {"to": "solution", "text": solution_text}

    brace_file = tmp_path / "p4_brace.txt"
    assert run(["brace", str(solution_file), "--save", str(brace_file), "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 8 and report["socle"] == [0]
    assert parse_brace(brace_file.read_text(encoding="utf-8")) == gbrace(p4).brace
