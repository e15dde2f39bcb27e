"""Rows command: print the first rows of a frieze."""
from typing import Annotated, Optional

import typer

from src.cli.input import read_quiddity
from src.cli.output import format_output
from src.cli.utils import check_format, domain_errors
from src.config import load_config
from src.frieze import rows


def rows_command(
    q: Annotated[Optional[str], typer.Option("--q", "-q", help="Quiddity sequence, e.g. 2,3,4,2,4")] = None,
    depth: Annotated[
        Optional[int], typer.Option("--depth", "-d", min=1, help="Number of non-trivial rows")
    ] = None,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Print the rows of 0's and 1's and the first non-trivial rows."""
    fmt = check_format(format)
    sequence = read_quiddity(q)
    if depth is None:
        depth = load_config().default_depth

    with domain_errors():
        table = rows(sequence, depth)
    format_output(table.to_json(), fmt, text=table.render())
