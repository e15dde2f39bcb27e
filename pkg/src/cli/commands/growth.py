"""Growth command."""
from typing import Annotated, Optional

import typer

from src.cli.input import read_quiddity
from src.cli.output import format_output, print_warning
from src.cli.utils import check_format, domain_errors
from src.config import load_config
from src.growth import growth_report
from src.models import GrowthMethod

METHODS = [method.value for method in GrowthMethod]


def growth_command(
    q: Annotated[Optional[str], typer.Option("--q", "-q", help="Quiddity sequence, e.g. 2,3,4,2,4")] = None,
    r: Annotated[
        Optional[int], typer.Option("--r", "-r", min=1, help="Number of growth values s_1..s_r")
    ] = None,
    method: Annotated[str, typer.Option("--method", "-m", help="rows, formula or both")] = "both",
    given_period: Annotated[
        bool, typer.Option("--given-period", help="Treat the full length as the period")
    ] = False,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Compute the growth coefficient and the values s_1..s_r.

    The subset-sum formula only runs up to frieze.subset_window_limit
    entries; above that, 'both' reports the rows value alone.

    Examples:
        frieze growth --q 2,3,4,2,4 --method both   # rows: 87, formula: 87
        frieze growth --q 4,3,4,3 --r 3
    """
    fmt = check_format(format)
    sequence = read_quiddity(q)
    if method not in METHODS:
        raise typer.BadParameter(f"Unknown method '{method}'. Use one of: {', '.join(METHODS)}", param_hint="--method")
    window_limit = load_config().subset_window_limit

    with domain_errors():
        report = growth_report(
            sequence, r=r, method=method, given_period=given_period, window_limit=window_limit
        )

    if report.formula_skipped and fmt != "json":
        print_warning(f"formula skipped: length {len(sequence)} exceeds subset_window_limit {window_limit}")
    if report.method is GrowthMethod.BOTH:
        head = f"rows: {report.s_q}, formula: {report.s_q}"
    else:
        head = f"{report.method.value}: {report.s_q}"

    lines = [
        head,
        f"minimal period: {report.minimal_period}",
        f"delta_n: {report.delta_n}",
        "s_1..s_{}: {}".format(len(report.s_sequence), ", ".join(str(s) for s in report.s_sequence)),
    ]
    format_output(report.to_json(), fmt, text="\n".join(lines))
