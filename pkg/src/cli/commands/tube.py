"""Tube command: check the tube identities against frieze entries."""
from typing import Annotated, Optional

import typer

from src.cli.input import read_pair, read_quiddity
from src.cli.output import format_output, print_error, print_success, print_warning
from src.cli.utils import EXIT_ERROR, check_format, domain_errors
from src.config import load_config
from src.models import TubeModuleIndex
from src.tube import cc_value, check_ar, check_growth, check_repth, middle_terms, verify_ar_diamond

CHECKS = ("repth", "growth", "ar")


def tube_command(
    q: Annotated[Optional[str], typer.Option("--q", "-q", help="Quiddity sequence, e.g. 2,3,4,2,4")] = None,
    check: Annotated[str, typer.Option("--check", "-c", help="repth, growth or ar")] = "repth",
    max_level: Annotated[
        Optional[int], typer.Option("--max-level", min=1, help="Highest level checked")
    ] = None,
    module: Annotated[
        Optional[str], typer.Option("--module", help="Show s(M_{i,j}) for one module 'i,j'")
    ] = None,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Check a tube identity, or evaluate a single module.

    Exits 1 when the identity fails anywhere.

    Examples:
        frieze tube --q 2,3,4,2,4 --check repth --max-level 12
        frieze tube --q 2,3,3 --module 1,3
    """
    fmt = check_format(format)
    sequence = read_quiddity(q)
    if check not in CHECKS:
        raise typer.BadParameter(f"Unknown check '{check}'. Use one of: {', '.join(CHECKS)}", param_hint="--check")
    config = load_config()
    if max_level is None:
        max_level = config.tube_max_level

    with domain_errors():
        if module is not None:
            i, j = read_pair(module, "--module")
            if j < i:
                raise typer.BadParameter("Module end must not precede its start", param_hint="--module")
            M = TubeModuleIndex.between(len(sequence), i, j)
            value = cc_value(sequence, M)
            data = {
                "module": str(M),
                "level": M.level,
                "s": value,
                "tau": str(M.tau()),
                "middle_terms": [str(term) for term in middle_terms(M)],
                "ar_diamond": verify_ar_diamond(sequence, M),
            }
            format_output(data, fmt, text=f"s({M}) = {value}")
            return

        if check == "repth":
            report = check_repth(sequence, max_level)
        elif check == "growth":
            report = check_growth(sequence, config.subset_window_limit)
        else:
            report = check_ar(sequence, max_level)

    if fmt == "json":
        format_output(report.to_json(), fmt)
    elif report.passed:
        print_success(f"{check}: {report.cases} cases passed")
        if report.flagged:
            print_warning(f"{len(report.flagged)} cases above level {len(sequence)} read numerically")
    else:
        print_error(f"{check}: {len(report.failures)} of {report.cases} cases failed")
        for failure in report.failures:
            print_error(f"  {failure}")
    if not report.passed:
        raise typer.Exit(EXIT_ERROR)
