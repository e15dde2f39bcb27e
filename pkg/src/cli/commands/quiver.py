"""Quiver command: the maps between cycle quivers and skeletal quiddity sequences."""
from pathlib import Path
from typing import Annotated, Optional

import typer

from src.cli.input import read_quiddity
from src.cli.output import format_output, print_success
from src.cli.utils import check_format, domain_errors
from src.models import IOFailureError, NonOrientedCycle
from src.quiver import canonicalize, mu, sigma, sigma_tilde, to_dot

EMIT_CHOICES = ("sigma", "sigma-tilde", "dot", "word")


def quiver_command(
    word: Annotated[Optional[str], typer.Option("--word", "-w", help="Arrow word, e.g. IIDD or Inc,Dec")] = None,
    from_q: Annotated[
        Optional[str], typer.Option("--from-q", help="Build the quiver of a skeletal quiddity sequence")
    ] = None,
    emit: Annotated[
        Optional[str], typer.Option("--emit", "-e", help="sigma, sigma-tilde, dot or word")
    ] = None,
    out: Annotated[Optional[Path], typer.Option("--out", "-o", help="Write the emitted text to a file")] = None,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Compute sigma, sigma-tilde or mu.

    Examples:
        frieze quiver --word IIDIDDDID --emit sigma         # 4,3,2,2,3
        frieze quiver --from-q 4,3,2,2,3 --emit sigma-tilde # 2,3,5,3
        frieze quiver --word IIDD --emit dot --out q.dot
    """
    fmt = check_format(format)
    if (word is None) == (from_q is None):
        raise typer.BadParameter("Give exactly one of --word or --from-q", param_hint="--word")
    if emit is not None and emit not in EMIT_CHOICES:
        raise typer.BadParameter(
            f"Unknown emit target '{emit}'. Use one of: {', '.join(EMIT_CHOICES)}", param_hint="--emit"
        )
    sequence = read_quiddity(from_q, "--from-q") if from_q is not None else None

    with domain_errors():
        Q = mu(sequence) if sequence is not None else NonOrientedCycle.parse(word)
        outer, inner = sigma(Q), sigma_tilde(Q)

        data = {
            "word": str(Q),
            "canonical": str(canonicalize(Q)),
            "vertices": Q.vertex_count,
            "sigma": list(outer),
            "sigma_tilde": list(inner),
        }
        if emit == "sigma":
            text = str(outer)
        elif emit == "sigma-tilde":
            text = str(inner)
        elif emit == "dot":
            text = to_dot(Q)
            data["dot"] = text
        elif emit == "word":
            text = str(Q)
        else:
            text = "\n".join([f"word: {Q}", f"sigma: {outer}", f"sigma-tilde: {inner}"])

        if out is not None:
            try:
                out.write_text(text + "\n", encoding="utf-8")
            except OSError as e:
                raise IOFailureError(f"Cannot write {out}: {e}") from e

    if out is not None:
        print_success(f"Wrote {emit or 'summary'} to {out}")
        return
    format_output(data, fmt, text=text)
