"""Tests for CLI foundation components.

Tests the CLI app instance, version handling, utils (typo suggestions, format
checks, exit codes), input handling, and output functions.
"""
import pytest
import typer
from typer.testing import CliRunner

from src.cli import app
from src.cli.input import read_pair, read_quiddity
from src.cli.output import format_output, print_error, print_success
from src.cli.utils import (
    EXIT_BAD_ARGS,
    EXIT_ERROR,
    EXIT_SUCCESS,
    VALID_COMMANDS,
    check_format,
    domain_errors,
    suggest_command,
)
from src.models import NotSkeletalError, QuidditySequence

# CliRunner for testing Typer apps
runner = CliRunner()


# ==================== App Tests ====================


def test_app_help():
    """Test --help flag lists every command."""
    result = runner.invoke(app, ["--help"])

    assert result.exit_code == 0
    for cmd in VALID_COMMANDS:
        assert cmd in result.stdout


def test_app_no_args_shows_help():
    """Test no args shows help (no_args_is_help=True)."""
    result = runner.invoke(app, [])

    assert "frieze" in result.output.lower() or "Usage:" in result.output


def test_app_version():
    """Test --version flag shows version string."""
    result = runner.invoke(app, ["--version"])

    assert result.exit_code == 0
    assert "frieze version" in result.stdout.lower()


def test_unknown_command_is_usage_error():
    result = runner.invoke(app, ["grwoth"])
    assert result.exit_code == EXIT_BAD_ARGS


# ==================== Utils Tests ====================


def test_exit_codes():
    assert (EXIT_SUCCESS, EXIT_ERROR, EXIT_BAD_ARGS) == (0, 1, 2)


def test_suggest_command_growth():
    """Test suggest_command for 'grwoth' -> 'growth'."""
    assert suggest_command("grwoth") == "growth"


def test_suggest_command_triangulate():
    assert suggest_command("triangluate") == "triangulate"


def test_suggest_command_custom_choices():
    assert suggest_command("negatvies", ["growth", "negatives"]) == "negatives"


def test_suggest_command_no_match():
    """Test suggest_command returns None for garbage."""
    assert suggest_command("xyz") is None


def test_check_format():
    assert check_format(None) == "text"
    assert check_format("JSON") == "json"
    with pytest.raises(typer.BadParameter):
        check_format("yaml")


def test_domain_errors_exit_code(capsys):
    with pytest.raises(typer.Exit) as exc:
        with domain_errors():
            raise NotSkeletalError("(2,2) is not skeletal")
    assert exc.value.exit_code == EXIT_ERROR


def test_domain_errors_passes_through_success():
    with domain_errors():
        value = 1
    assert value == 1


# ==================== Input Tests ====================


def test_read_quiddity():
    assert read_quiddity("2,3,4,2,4") == QuidditySequence.of(2, 3, 4, 2, 4)


def test_read_quiddity_missing():
    with pytest.raises(typer.BadParameter):
        read_quiddity(None)


def test_read_quiddity_malformed():
    with pytest.raises(typer.BadParameter):
        read_quiddity("2,,x")


def test_read_quiddity_non_positive():
    with pytest.raises(typer.BadParameter):
        read_quiddity("2,0,3")


def test_read_pair():
    assert read_pair("1,3", "--module") == (1, 3)
    with pytest.raises(typer.BadParameter):
        read_pair("1,2,3", "--module")


# ==================== Output Tests ====================


def test_print_success(capsys):
    print_success("done")
    assert "done" in capsys.readouterr().out


def test_print_error_goes_to_stderr(capsys):
    print_error("broken", suggestion="try again")
    captured = capsys.readouterr()
    assert "broken" in captured.err
    assert "try again" in captured.err


def test_format_output_text(capsys):
    format_output({"a": 1}, "text", text="plain [not markup]")
    assert "plain [not markup]" in capsys.readouterr().out


def test_format_output_json(capsys):
    format_output({"a": 1}, "json", text="ignored")
    out = capsys.readouterr().out
    assert '"a": 1' in out
    assert "ignored" not in out
