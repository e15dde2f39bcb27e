"""Triangulate command: the skeletal annulus triangulation of a quiddity sequence."""
from pathlib import Path
from typing import Annotated, Optional

import typer

from src.cli.input import read_quiddity
from src.cli.output import format_output, print_success
from src.cli.utils import check_format, domain_errors
from src.config import load_config
from src.triangulation import quiddity_pair, quiver_of, render_net, render_svg, triangulation_from_quiddity


def triangulate_command(
    q: Annotated[Optional[str], typer.Option("--q", "-q", help="Skeletal quiddity sequence, e.g. 2,3,3")] = None,
    offset: Annotated[int, typer.Option("--offset", help="Inner label of the first arc, minus one")] = 0,
    svg: Annotated[Optional[Path], typer.Option("--svg", help="Write an SVG drawing to this path")] = None,
    net: Annotated[bool, typer.Option("--net", help="Print the arcs one per line")] = False,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Build the triangulation of C_{m,n} whose outer quiddity is --q.

    Examples:
        frieze triangulate --q 2,3,3
        frieze triangulate --q 4,3,2,2,3 --svg annulus.svg
    """
    fmt = check_format(format)
    sequence = read_quiddity(q)
    config = load_config()

    with domain_errors():
        T = triangulation_from_quiddity(sequence, inner_offset=offset)
        outer, inner = quiddity_pair(T)
        quiver = quiver_of(T)
        if svg is not None:
            render_svg(T, svg, size=config.svg_size, samples=config.svg_samples)

    if net and fmt == "text":
        text = render_net(T)
    else:
        text = "\n".join(
            [
                f"C_{{{T.outer_count},{T.inner_count}}}",
                "arcs: " + " ".join(f"({o},{i})" for o, i in T.arcs),
                f"outer: {outer}",
                f"inner: {inner}",
                f"quiver: {quiver}",
            ]
        )
    data = T.to_json()
    data["quiddity_pair"] = {"outer": list(outer), "inner": list(inner)}
    data["quiver"] = str(quiver)
    format_output(data, fmt, text=text)
    if svg is not None and fmt == "text":
        print_success(f"SVG written to {svg}")
