"""
Command line tests.

Commands run in-process through click's CliRunner; --json output is
parsed back and compared.
"""

import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from config.io_paths import PROJECT_ROOT
from src.algebra.field import QQ_FIELD
from src.cli.main import cli, run
from src.exporter.serialization import matrix_to_json, rep_to_json, write_json
from src.algebra.jordan import jordan_matrix
from src.quiver import covering_preset, standard_modules


@pytest.fixture
def runner():
    return CliRunner()


def invoke_json(runner, args):
    result = runner.invoke(cli, args + ["--json"])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


# ----------------------------------------------------------------------
# Classifier commands
# ----------------------------------------------------------------------
def test_classify_infinite(runner):
    data = invoke_json(runner, ["classify", "--bv", "2,2,2"])
    assert data["status"] == "ok"
    assert data["command"] == {"name": "classify", "bv": "2,2,2"}
    assert data["payload"]["verdict"] == "infinite"
    assert data["payload"]["witness_verified"] is True


def test_classify_bounded(runner):
    data = invoke_json(runner, ["classify", "--bv", "2,2,2", "--x", "2"])
    assert data["payload"]["verdict"] == "finite"
    assert data["payload"]["witness_verified"] is None


def test_levi_classify(runner):
    data = invoke_json(runner, ["levi-classify", "--bv", "1,2,1"])
    assert data["payload"]["verdict"] == "infinite"


def test_tables(runner):
    data = invoke_json(runner, ["tables"])
    assert "d4_222" in data["payload"]["minimal_infinite"]
    assert "commuting_pair" in data["payload"]["families"]


def test_json_output_is_reproducible(runner):
    first = runner.invoke(cli, ["classify", "--bv", "1,3,5,1", "--json"])
    second = runner.invoke(cli, ["classify", "--bv", "1,3,5,1", "--json"])
    assert first.stdout == second.stdout


def test_rich_report_renders(runner):
    result = runner.invoke(cli, ["classify", "--bv", "5,4"])
    assert result.exit_code == 0
    assert "finite" in result.output


# ----------------------------------------------------------------------
# Exit codes
# ----------------------------------------------------------------------
def test_domain_error_exits_with_one(runner):
    result = runner.invoke(cli, ["classify", "--bv", "1,0", "--json"])
    assert result.exit_code == 1


def test_usage_error_exits_with_two(runner):
    assert runner.invoke(cli, ["classify"]).exit_code == 2
    assert runner.invoke(cli, ["orbits", "--bv", "1,1", "--q", "2", "--target", "everything"]).exit_code == 2
    assert runner.invoke(cli, ["rep", "--bv", "1,1"]).exit_code == 2


def test_run_returns_error_result():
    result = run(["orbits", "--bv", "1,1", "--q", "4", "--json"])
    assert not result.ok
    assert result.exit_code == 1
    assert result.payload["error"] == "FieldNotSupported"
    assert "timing" not in result.to_dict()


# ----------------------------------------------------------------------
# Oracle and families
# ----------------------------------------------------------------------
def test_orbits(runner, tmp_path):
    reps = tmp_path / "reps.json"
    data = invoke_json(runner, ["orbits", "--bv", "1,1", "--q", "2", "--reps-out", str(reps)])
    payload = data["payload"]
    assert payload["orbit_count"] == 2
    assert payload["flags"] == []
    written = json.loads(reps.read_text())
    assert [m["entries"] for m in written] == [[[0, 0], [0, 0]], [[0, 1], [0, 0]]]


def test_orbits_with_growth(runner):
    data = invoke_json(runner, ["orbits", "--bv", "1,1", "--q", "2", "--growth"])
    assert data["payload"]["growth"]["signal"] == "finite-signal"
    assert data["payload"]["flags"] == []


def test_family_member(runner):
    data = invoke_json(runner, ["family", "--name", "levi_nilr_111", "--t", "3"])
    assert data["payload"]["member"]["entries"] == [[0, 1, 3], [0, 0, 1], [0, 0, 0]]
    assert data["payload"]["entries_in_01t"] is True


def test_d4_family_member_entries(runner):
    data = invoke_json(runner, ["family", "--name", "d4_222", "--t", "3"])
    assert data["payload"]["entries_in_01t"] is True


def test_family_report_needs_commuting_pair(runner):
    result = runner.invoke(cli, ["family", "--name", "d4_222", "--report", "--json"])
    assert result.exit_code == 1


def test_census(runner):
    data = invoke_json(runner, ["census", "--bv", "1,1", "--q", "3"])
    assert data["payload"]["count"] == 1


def test_distinguished(runner, tmp_path):
    path = tmp_path / "j3.json"
    write_json(matrix_to_json(jordan_matrix(QQ_FIELD, (3,))), path)
    data = invoke_json(runner, ["distinguished", "--bv", "3", "--matrix", str(path)])
    assert data["payload"]["distinguished"] is True


# ----------------------------------------------------------------------
# Normal forms and representations
# ----------------------------------------------------------------------
def test_normalize_random_pair(runner):
    data = invoke_json(runner, ["normalize", "--random", "--lam", "3,2,1", "--mu", "2,1", "--seed", "7"])
    assert data["payload"]["reduced_ok"] is True
    assert data["payload"]["violations"] == []


def test_normalize_needs_one_source(runner):
    assert runner.invoke(cli, ["normalize"]).exit_code == 2


def test_rep_pipeline(runner, tmp_path):
    matrix = tmp_path / "m.json"
    write_json({"field": "Q", "entries": [[0, 1, 3], [0, 0, 1], [0, 0, 0]]}, matrix)
    result = runner.invoke(cli, ["rep", "--from-matrix", str(matrix), "--bv", "1,2", "--assert", "--json"])
    assert result.exit_code == 0, result.output
    envelope = json.loads(result.stdout)
    assert envelope["payload"]["round_trip"] is True

    back = runner.invoke(cli, ["rep", "--to-matrix", "-", "--json"], input=result.stdout)
    assert back.exit_code == 0, back.output
    payload = json.loads(back.stdout)["payload"]
    assert payload["bv"] == [1, 2]
    assert payload["matrix"]["entries"] == [[0, 1, 3], [0, 0, 1], [0, 0, 0]]


def test_rep_rejects_matrix_outside_cone(runner, tmp_path):
    matrix = tmp_path / "lower.json"
    write_json({"field": "Q", "entries": [[0, 0], [1, 0]]}, matrix)
    result = runner.invoke(cli, ["rep", "--from-matrix", str(matrix), "--bv", "1,1", "--json"])
    assert result.exit_code == 1


def test_delta(runner, tmp_path):
    modules = standard_modules(covering_preset(2, 2), QQ_FIELD)
    path = tmp_path / "t21.json"
    write_json(rep_to_json(modules.T(2, 1)), path)
    data = invoke_json(runner, ["delta", "--rep", str(path)])
    assert data["payload"]["filtration"] == [[1, 1], [2, 1]]
    assert data["payload"]["phi_first_row_zero"] is True


# ----------------------------------------------------------------------
# Import order
# ----------------------------------------------------------------------
@pytest.mark.parametrize(
    "module",
    [
        "src.algebra",
        "src.validation",
        "src.validation.errors",
        "src.validation.input_validator",
        "src.quiver",
        "src.young",
        "src.families",
        "src.exporter.serialization",
        "src.cli",
    ],
)
def test_package_imports_in_a_fresh_interpreter(module):
    result = subprocess.run(
        [sys.executable, "-c", f"import {module}"],
        cwd=PROJECT_ROOT,
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr


def test_main_help_in_a_fresh_interpreter():
    result = subprocess.run(
        [sys.executable, "main.py", "--help"],
        cwd=PROJECT_ROOT,
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr
    assert "classify" in result.stdout
