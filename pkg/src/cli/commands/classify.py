"""Classify command."""
from typing import Annotated, Optional

import typer

from src.cli.input import read_quiddity
from src.cli.output import format_output
from src.cli.utils import check_format
from src.quiddity import classify, is_skeletal, is_trivial


def classify_command(
    q: Annotated[Optional[str], typer.Option("--q", "-q", help="Quiddity sequence, e.g. 1,1,1")] = None,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Classify a quiddity sequence as InfiniteType, FiniteType or Invalid."""
    fmt = check_format(format)
    sequence = read_quiddity(q)
    kind = classify(sequence)
    format_output(
        {
            "quiddity": list(sequence),
            "type": kind.value,
            "skeletal": is_skeletal(sequence),
            "trivial": is_trivial(sequence),
        },
        fmt,
        text=kind.value,
    )
