"""Rich consoles and printers shared by the frieze commands.

stdout carries results only; errors, warnings and log lines go to stderr.
"""
from typing import Iterable, Optional

from rich.console import Console
from rich.table import Table


console = Console()
err_console = Console(stderr=True)


def print_success(message: str):
    console.print(f"[green]✓[/green] {message}", highlight=False)


def print_error(message: str, suggestion: Optional[str] = None):
    """Print ``✗ message`` to stderr, with an optional hint underneath."""
    err_console.print(f"[red]✗[/red] {message}", highlight=False)
    if suggestion:
        err_console.print(f"  [dim]Suggestion: {suggestion}[/dim]")


def print_warning(message: str):
    err_console.print(f"[yellow]⚠[/yellow] {message}", highlight=False)


def print_plain(text: str):
    """Print text verbatim: no markup, highlighting or wrapping.

    Frieze rows and sequences contain brackets and long digit runs that Rich
    would otherwise style or fold.
    """
    console.print(text, markup=False, highlight=False, soft_wrap=True)


def print_table(rows: list[dict], title: Optional[str] = None, numeric: Iterable[str] = ()):
    """Print dict rows as a table; columns come from the first row.

    Args:
        rows: One dict per table row
        title: Optional table title
        numeric: Columns to right-align
    """
    if not rows:
        console.print("[dim]No results[/dim]")
        return

    right = set(numeric)
    table = Table(title=title, show_header=True, header_style="bold cyan")
    for col in rows[0]:
        if col in right:
            table.add_column(col, justify="right")
        elif col == "Status":
            table.add_column(col, style="magenta")
        else:
            table.add_column(col, style="cyan")
    for row in rows:
        table.add_row(*(str(value) for value in row.values()))
    console.print(table)


def print_json(data: dict | list):
    console.print_json(data=data)


def format_output(data: dict | list, fmt: Optional[str] = None, text: Optional[str] = None):
    """Print ``data`` as JSON, or ``text`` verbatim for text output.

    Without ``text``, lists become a table and dicts fall back to JSON.
    """
    if fmt == "json":
        print_json(data)
    elif text is not None:
        print_plain(text)
    elif isinstance(data, list):
        print_table(data)
    else:
        print_json(data)
