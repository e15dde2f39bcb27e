"""Shared utility functions for CLI commands.

Provides exit codes, typo suggestions, output-format validation and the
translation of domain errors into exit statuses.
"""
import difflib
from contextlib import contextmanager
from typing import Iterator, Optional

import typer

from src.cli.output import print_error
from src.models import FriezeError


# Exit code constants (POSIX convention)
EXIT_SUCCESS = 0
EXIT_ERROR = 1
EXIT_BAD_ARGS = 2

OUTPUT_FORMATS = ("text", "json")

# Valid CLI commands for typo suggestions
VALID_COMMANDS = [
    "reduce",
    "classify",
    "partner",
    "growth",
    "rows",
    "frieze",
    "triangulate",
    "quiver",
    "tube",
    "verify",
    "config",
]


def suggest_command(
    invalid: str, choices: Optional[list[str]] = None, cutoff: float = 0.6
) -> Optional[str]:
    """Suggest a valid name for a misspelled one.

    Uses difflib.get_close_matches to find similar names.

    Args:
        invalid: The misspelled name
        choices: Candidate names (defaults to the CLI commands)
        cutoff: Similarity threshold (0.0-1.0, default 0.6)

    Returns:
        Suggested name or None if no close match found

    Example:
        >>> suggest_command("grwoth")
        "growth"
        >>> suggest_command("xyz")
        None
    """
    matches = difflib.get_close_matches(
        invalid, choices if choices is not None else VALID_COMMANDS, n=1, cutoff=cutoff
    )
    return matches[0] if matches else None


def check_format(fmt: Optional[str]) -> str:
    """Validate --format.

    Raises:
        typer.BadParameter: If the format is not text or json
    """
    fmt = (fmt or "text").lower()
    if fmt not in OUTPUT_FORMATS:
        raise typer.BadParameter(
            f"Unknown format '{fmt}'. Use one of: {', '.join(OUTPUT_FORMATS)}",
            param_hint="--format",
        )
    return fmt


@contextmanager
def domain_errors() -> Iterator[None]:
    """Report FriezeError as '<code>: <message>' and exit with EXIT_ERROR."""
    try:
        yield
    except FriezeError as e:
        print_error(f"{e.code}: {e}")
        raise typer.Exit(EXIT_ERROR) from e
