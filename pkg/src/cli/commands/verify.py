"""Verify command: run the property suites."""
from typing import Annotated, Optional

import typer

from src.cli.output import format_output, print_error, print_success, print_table
from src.cli.utils import EXIT_ERROR, check_format, suggest_command
from src.config import load_config, resolve_seed
from src.verify import SUITES, run_suites


def verify_command(
    suite: Annotated[
        Optional[list[str]], typer.Option("--suite", "-s", help="Suite to run (repeatable)")
    ] = None,
    all_suites: Annotated[bool, typer.Option("--all", help="Run every suite")] = False,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Random seed")] = None,
    samples: Annotated[
        Optional[int], typer.Option("--samples", min=1, help="Random cases per suite")
    ] = None,
    workers: Annotated[
        Optional[int], typer.Option("--workers", min=1, help="Suites run side by side")
    ] = None,
    format: Annotated[Optional[str], typer.Option("--format", "-f", help="Output format: text or json")] = None,
):
    """Cross-check every identity by independent computations.

    Exits 0 only if every selected suite passes.

    Examples:
        frieze verify --all
        frieze verify --suite growth --suite tube --samples 200
    """
    fmt = check_format(format)
    if all_suites or not suite:
        names = list(SUITES)
    else:
        names = suite
        for name in names:
            if name not in SUITES:
                hint = suggest_command(name, list(SUITES))
                message = f"Unknown suite '{name}'"
                if hint:
                    message += f". Did you mean '{hint}'?"
                raise typer.BadParameter(message, param_hint="--suite")

    config = load_config()
    results = run_suites(
        names,
        seed=resolve_seed(seed, config),
        samples=samples,
        workers=workers,
        config=config,
    )
    passed = all(result.passed for result in results)

    if fmt == "json":
        format_output({"passed": passed, "suites": [result.to_json() for result in results]}, fmt)
    else:
        print_table(
            [
                {
                    "Suite": result.name,
                    "Cases": result.cases,
                    "Failures": len(result.failures),
                    "Status": "pass" if result.passed else "FAIL",
                    "Seconds": f"{result.seconds:.2f}",
                }
                for result in results
            ],
            title="Verification",
            numeric=("Cases", "Failures", "Seconds"),
        )
        for result in results:
            for failure in result.failures:
                print_error(f"{result.name}: {failure}")
        if passed:
            print_success(f"All {len(results)} suites passed")
    if not passed:
        raise typer.Exit(EXIT_ERROR)
