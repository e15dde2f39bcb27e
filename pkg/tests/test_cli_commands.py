"""Tests for the CLI commands.

Tests each command with basic invocation, JSON format, edge cases,
and error handling.
"""
import json

import pytest
from typer.testing import CliRunner

from src.cli import app

# CliRunner for testing Typer apps
runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point every command at an empty config file."""
    missing = tmp_path / "frieze.toml"
    monkeypatch.setattr("src.config.settings.DEFAULT_CONFIG_PATH", missing)
    monkeypatch.setattr("src.cli.commands.config.DEFAULT_CONFIG_PATH", missing)
    monkeypatch.delenv("FRIEZE_SEED", raising=False)
    monkeypatch.delenv("FRIEZE_LOG_LEVEL", raising=False)
    return missing


# ==================== Reduce Command Tests ====================


def test_reduce_to_skeletal():
    result = runner.invoke(app, ["reduce", "--q", "4,1,2,5"])
    assert result.exit_code == 0
    assert "skeletal: 2,4" in result.stdout


def test_reduce_trace():
    result = runner.invoke(app, ["reduce", "--q", "4,1,2,5", "--trace"])
    assert result.exit_code == 0
    assert "reduce at 1: 3,1,5" in result.stdout


def test_reduce_at():
    result = runner.invoke(app, ["reduce", "--q", "1,5", "--at", "0"])
    assert result.exit_code == 0
    assert "reduced: 3" in result.stdout


def test_reduce_insert():
    result = runner.invoke(app, ["reduce", "--q", "2,3", "--insert", "1"])
    assert result.exit_code == 0
    assert "reverse: 3,1,4" in result.stdout


def test_reduce_json():
    result = runner.invoke(app, ["reduce", "--q", "4,1,2,5", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["skeletal"] == [2, 4]


def test_reduce_finite_is_domain_error():
    result = runner.invoke(app, ["reduce", "--q", "1,1,1"])
    assert result.exit_code == 1
    assert "NotInfiniteType" in result.output


def test_reduce_at_not_a_one():
    result = runner.invoke(app, ["reduce", "--q", "2,3,3", "--at", "0"])
    assert result.exit_code == 1
    assert "NotAOne" in result.output


def test_reduce_malformed_is_usage_error():
    result = runner.invoke(app, ["reduce", "--q", "2,x"])
    assert result.exit_code == 2


def test_reduce_missing_q():
    result = runner.invoke(app, ["reduce"])
    assert result.exit_code == 2


# ==================== Classify Command Tests ====================


@pytest.mark.parametrize(
    "q,expected",
    [("2,3,3", "InfiniteType"), ("1,1,1", "FiniteType"), ("1,1", "Invalid"), ("1,2", "Invalid")],
)
def test_classify(q, expected):
    result = runner.invoke(app, ["classify", "--q", q])
    assert result.exit_code == 0
    assert result.stdout.strip() == expected


def test_classify_json():
    result = runner.invoke(app, ["classify", "--q", "2,2,2", "--format", "json"])
    data = json.loads(result.stdout)
    assert data["type"] == "InfiniteType"
    assert data["trivial"] is True
    assert data["skeletal"] is False


def test_unknown_format():
    result = runner.invoke(app, ["classify", "--q", "2,3,3", "--format", "yaml"])
    assert result.exit_code == 2


# ==================== Partner Command Tests ====================


def test_partner():
    result = runner.invoke(app, ["partner", "--q", "2,3,3"])
    assert result.exit_code == 0
    assert "partner: 3,4" in result.stdout


def test_partner_blocks():
    result = runner.invoke(app, ["partner", "--q", "4,3,2,2,3", "--blocks"])
    assert result.exit_code == 0
    assert "blocks: (4,0) (3,2) (3,0)" in result.stdout
    assert "partner: 2,3,5,3" in result.stdout


def test_partner_rejects_trivial():
    result = runner.invoke(app, ["partner", "--q", "2,2"])
    assert result.exit_code == 1
    assert "NotSkeletal" in result.output


# ==================== Growth Command Tests ====================


def test_growth_both():
    result = runner.invoke(app, ["growth", "--q", "2,3,4,2,4", "--method", "both"])
    assert result.exit_code == 0
    assert "rows: 87, formula: 87" in result.stdout


def test_growth_sequence():
    result = runner.invoke(app, ["growth", "--q", "4,3,4,3", "--format", "json"])
    data = json.loads(result.stdout)
    assert data["s_q"] == 98
    assert data["minimal_period"] == 2
    assert data["s_sequence"] == [10, 98]


def test_growth_given_period():
    result = runner.invoke(app, ["growth", "--q", "4,3,4,3", "--given-period", "--format", "json"])
    assert json.loads(result.stdout)["s_sequence"] == [98]


def test_growth_single_method():
    result = runner.invoke(app, ["growth", "--q", "3", "--method", "rows"])
    assert result.exit_code == 0
    assert "rows: 3" in result.stdout


def test_growth_unknown_method():
    result = runner.invoke(app, ["growth", "--q", "3", "--method", "guess"])
    assert result.exit_code == 2


def test_growth_invalid_sequence():
    result = runner.invoke(app, ["growth", "--q", "1,2"])
    assert result.exit_code == 1


def test_growth_both_skips_formula_above_limit(isolated_config):
    isolated_config.write_text("[frieze]\nsubset_window_limit = 4\n")
    result = runner.invoke(app, ["growth", "--q", "2,3,4,2,4"])
    assert result.exit_code == 0
    assert "rows: 87" in result.stdout
    assert "formula skipped" in result.output


def test_growth_formula_above_limit_is_domain_error(isolated_config):
    isolated_config.write_text("[frieze]\nsubset_window_limit = 4\n")
    result = runner.invoke(app, ["growth", "--q", "2,3,4,2,4", "--method", "formula"])
    assert result.exit_code == 1
    assert "SubsetLimit" in result.output


def test_growth_long_sequence_finishes():
    long_q = ",".join(["3", "2", "2", "2", "2"] * 7)
    result = runner.invoke(app, ["growth", "--q", long_q, "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["formula_skipped"] is True


# ==================== Rows Command Tests ====================


def test_rows():
    result = runner.invoke(app, ["rows", "--q", "2,3,4,2,4", "--depth", "5"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].split() == ["0"] * 5
    assert lines[1].split() == ["1"] * 5
    assert lines[-1].split() == ["104", "105", "106", "111", "99"]


def test_frieze_alias_json():
    result = runner.invoke(app, ["frieze", "--q", "2,3,3", "--depth", "2", "--format", "json"])
    assert result.exit_code == 0
    assert sorted(json.loads(result.stdout)["rows"][1]) == [5, 5, 8]


def test_rows_default_depth_from_config(isolated_config):
    isolated_config.write_text("[frieze]\ndefault_depth = 3\n")
    result = runner.invoke(app, ["rows", "--q", "3", "--format", "json"])
    assert len(json.loads(result.stdout)["rows"]) == 3


def test_rows_rejects_finite():
    result = runner.invoke(app, ["rows", "--q", "1,1,1"])
    assert result.exit_code == 1


# ==================== Triangulate Command Tests ====================


def test_triangulate():
    result = runner.invoke(app, ["triangulate", "--q", "2,3,3"])
    assert result.exit_code == 0
    assert "C_{3,2}" in result.stdout
    assert "arcs: (1,1) (2,1) (2,2) (3,2) (3,1)" in result.stdout
    assert "inner: 4,3" in result.stdout
    assert "quiver: DIDID" in result.stdout


def test_triangulate_json():
    result = runner.invoke(app, ["triangulate", "--q", "2,3,3", "--format", "json"])
    data = json.loads(result.stdout)
    assert data["outer"] == 3
    assert data["inner"] == 2
    assert data["arcs"][0] == [1, 1]
    assert data["quiddity_pair"]["inner"] == [4, 3]


def test_triangulate_svg(tmp_path):
    target = tmp_path / "out.svg"
    result = runner.invoke(app, ["triangulate", "--q", "2,3,3", "--svg", str(target)])
    assert result.exit_code == 0
    svg = target.read_text(encoding="utf-8")
    assert svg.count("<path") == 5


def test_triangulate_svg_unwritable(tmp_path):
    target = tmp_path / "missing" / "out.svg"
    result = runner.invoke(app, ["triangulate", "--q", "2,3,3", "--svg", str(target)])
    assert result.exit_code == 1
    assert "IOFailure" in result.output


def test_triangulate_net():
    result = runner.invoke(app, ["triangulate", "--q", "2,3,3", "--offset", "1", "--net"])
    assert result.exit_code == 0
    assert "inner_offset=1" in result.stdout


def test_triangulate_rejects_trivial():
    result = runner.invoke(app, ["triangulate", "--q", "2,2,2"])
    assert result.exit_code == 1
    assert "NotSkeletal" in result.output


# ==================== Quiver Command Tests ====================


def test_quiver_sigma_tilde_from_q():
    result = runner.invoke(app, ["quiver", "--from-q", "4,3,2,2,3", "--emit", "sigma-tilde"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "2,3,5,3"


def test_quiver_sigma():
    result = runner.invoke(app, ["quiver", "--word", "IIDIDDDID", "--emit", "sigma"])
    assert result.stdout.strip() == "4,3,2,2,3"


def test_quiver_word_from_q():
    result = runner.invoke(app, ["quiver", "--from-q", "4,2", "--emit", "word"])
    assert result.stdout.strip() == "IIDD"


def test_quiver_summary():
    result = runner.invoke(app, ["quiver", "--word", "Inc,Dec"])
    assert result.exit_code == 0
    assert "sigma: 3" in result.stdout
    assert "sigma-tilde: 3" in result.stdout


def test_quiver_dot_to_file(tmp_path):
    target = tmp_path / "q.dot"
    result = runner.invoke(app, ["quiver", "--word", "IIDD", "--emit", "dot", "--out", str(target)])
    assert result.exit_code == 0
    assert target.read_text(encoding="utf-8").startswith("digraph Q {")


def test_quiver_oriented_word():
    result = runner.invoke(app, ["quiver", "--word", "IIII"])
    assert result.exit_code == 1
    assert "NotACycleWord" in result.output


def test_quiver_needs_one_source():
    assert runner.invoke(app, ["quiver"]).exit_code == 2
    assert runner.invoke(app, ["quiver", "--word", "ID", "--from-q", "3"]).exit_code == 2


def test_quiver_unknown_emit():
    result = runner.invoke(app, ["quiver", "--word", "ID", "--emit", "png"])
    assert result.exit_code == 2


# ==================== Tube Command Tests ====================


@pytest.mark.parametrize("check", ["repth", "growth", "ar"])
def test_tube_checks_pass(check):
    result = runner.invoke(app, ["tube", "--q", "2,3,4,2,4", "--check", check, "--max-level", "8"])
    assert result.exit_code == 0


def test_tube_json():
    result = runner.invoke(
        app, ["tube", "--q", "2,3,3", "--check", "repth", "--max-level", "5", "--format", "json"]
    )
    data = json.loads(result.stdout)
    assert data["passed"] is True
    assert data["cases"] == 9


def test_tube_module():
    result = runner.invoke(app, ["tube", "--q", "2,3,3", "--module", "1,3"])
    assert result.exit_code == 0
    assert "s(M(1,3)) = 13" in result.stdout


def test_tube_unknown_check():
    result = runner.invoke(app, ["tube", "--q", "2,3,3", "--check", "snake"])
    assert result.exit_code == 2


# ==================== Verify Command Tests ====================


def test_verify_single_suite():
    result = runner.invoke(app, ["verify", "--suite", "negatives", "--samples", "5"])
    assert result.exit_code == 0
    assert "negatives" in result.stdout


def test_verify_json():
    result = runner.invoke(
        app, ["verify", "--suite", "negatives", "--suite", "tube", "--samples", "5", "--format", "json"]
    )
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["passed"] is True
    assert [suite["name"] for suite in data["suites"]] == ["negatives", "tube"]


def test_verify_unknown_suite():
    result = runner.invoke(app, ["verify", "--suite", "negatvies"])
    assert result.exit_code == 2
    assert "negatives" in result.output


# ==================== Config Command Tests ====================


def test_config_show():
    result = runner.invoke(app, ["config"])
    assert result.exit_code == 0
    assert "verify.seed" in result.stdout


def test_config_set_and_get(tmp_path):
    path = tmp_path / "custom.toml"
    result = runner.invoke(app, ["config", "--path", str(path), "--set", "verify.samples=500"])
    assert result.exit_code == 0
    assert "samples = 500" in path.read_text()

    result = runner.invoke(app, ["config", "--path", str(path), "--get", "verify.samples"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "500"


def test_config_json():
    result = runner.invoke(app, ["config", "--format", "json"])
    assert json.loads(result.stdout)["default_depth"] == 10


def test_config_unknown_key():
    result = runner.invoke(app, ["config", "--get", "verify.sead"])
    assert result.exit_code == 2
    assert "verify.seed" in result.output


def test_config_bad_value(tmp_path):
    result = runner.invoke(app, ["config", "--path", str(tmp_path / "c.toml"), "--set", "verify.samples=lots"])
    assert result.exit_code == 2


def test_config_set_needs_equals():
    result = runner.invoke(app, ["config", "--set", "verify.samples"])
    assert result.exit_code == 2
