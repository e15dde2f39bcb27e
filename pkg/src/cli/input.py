"""Input handling for CLI commands.

Turns option strings into domain values. Malformed input is a usage
error and is reported against the offending flag.
"""
import typer

from src.models import FriezeError, QuidditySequence


def read_quiddity(text: str | None, flag: str = "--q") -> QuidditySequence:
    """Parse a comma-separated quiddity sequence.

    Raises:
        typer.BadParameter: If the option is missing or malformed

    Example:
        >>> read_quiddity("2,3,4,2,4")
        QuidditySequence(entries=(2, 3, 4, 2, 4))
    """
    if text is None:
        raise typer.BadParameter("A quiddity sequence is required, e.g. 2,3,3", param_hint=flag)
    try:
        return QuidditySequence.parse(text)
    except FriezeError as e:
        raise typer.BadParameter(str(e), param_hint=flag) from e


def read_pair(text: str, flag: str) -> tuple[int, int]:
    """Parse 'i,j'.

    Raises:
        typer.BadParameter: If the text is not two integers
    """
    parts = [p for p in text.replace(" ", ",").split(",") if p]
    try:
        first, second = (int(p) for p in parts)
    except ValueError as e:
        raise typer.BadParameter(f"Expected two integers 'i,j', got {text!r}", param_hint=flag) from e
    return first, second
