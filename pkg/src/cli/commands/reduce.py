"""Reduce command: skeletal form, single reductions and reverse reductions."""
from typing import Annotated, Optional

import typer

from src.cli.input import read_quiddity
from src.cli.output import format_output
from src.cli.utils import check_format, domain_errors
from src.quiddity import reduce_once, reduce_to_skeletal, reduction_trace, reverse_reduce


def reduce_command(
    q: Annotated[Optional[str], typer.Option("--q", "-q", help="Quiddity sequence, e.g. 4,1,2,5")] = None,
    at: Annotated[
        Optional[int], typer.Option("--at", help="Reduce once at this 0-based position")
    ] = None,
    insert: Annotated[
        Optional[int], typer.Option("--insert", help="Reverse reduction: insert a 1 before this position")
    ] = None,
    trace: Annotated[bool, typer.Option("--trace", help="Show every reduction step")] = False,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Reduce a quiddity sequence.

    Examples:
        frieze reduce --q 4,1,2,5            # skeletal: 2,4
        frieze reduce --q 1,5 --at 0         # reduced: 3
        frieze reduce --q 2,3 --insert 1     # reverse: 3,1,4
    """
    fmt = check_format(format)
    sequence = read_quiddity(q)
    if at is not None and insert is not None:
        raise typer.BadParameter("Use either --at or --insert", param_hint="--at")

    with domain_errors():
        if at is not None:
            result = reduce_once(sequence, at)
            format_output(
                {"quiddity": list(sequence), "reduced": list(result), "index": at},
                fmt,
                text=f"reduced: {result}",
            )
            return

        if insert is not None:
            result = reverse_reduce(sequence, insert)
            format_output(
                {"quiddity": list(sequence), "reverse": list(result), "gap": insert},
                fmt,
                text=f"reverse: {result}",
            )
            return

        skeletal = reduce_to_skeletal(sequence)
        steps = reduction_trace(sequence) if trace else []
        lines = [f"reduce at {index}: {step}" for index, step in steps]
        lines.append(f"skeletal: {skeletal}")
        format_output(
            {
                "quiddity": list(sequence),
                "skeletal": list(skeletal),
                "trace": [{"index": index, "entries": list(step)} for index, step in steps],
            },
            fmt,
            text="\n".join(lines),
        )
