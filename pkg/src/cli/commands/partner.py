"""Partner command: the quiddity sequence of the other boundary."""
from typing import Annotated, Optional

import typer

from src.cli.input import read_quiddity
from src.cli.output import format_output
from src.cli.utils import check_format, domain_errors
from src.quiddity import block_form, partner


def partner_command(
    q: Annotated[Optional[str], typer.Option("--q", "-q", help="Skeletal quiddity sequence, e.g. 2,3,3")] = None,
    blocks: Annotated[bool, typer.Option("--blocks", help="Also show the block form")] = False,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Compute the partner quiddity sequence."""
    fmt = check_format(format)
    sequence = read_quiddity(q)
    with domain_errors():
        form = block_form(sequence)
        result = partner(sequence)

    lines = []
    if blocks:
        lines.append("blocks: " + " ".join(f"({head},{run})" for head, run in form))
    lines.append(f"partner: {result}")
    format_output(
        {
            "quiddity": list(sequence),
            "blocks": [list(block) for block in form],
            "partner": list(result),
        },
        fmt,
        text="\n".join(lines),
    )
