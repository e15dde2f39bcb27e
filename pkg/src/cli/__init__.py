"""Typer app for the frieze toolkit.

Every subcommand registers on ``app``; ``cli_entry`` is the console script.
Exit statuses: 0 success, 1 domain error, 2 usage error.
"""
import importlib.metadata
import sys

import typer

from src.cli.output import print_error
from src.cli.utils import EXIT_BAD_ARGS, EXIT_ERROR
from src.config import configure_logging, load_config
from src.models import FriezeError


app = typer.Typer(
    name="frieze",
    help="Exact computations with infinite periodic friezes, annulus triangulations and cyclic quivers",
    no_args_is_help=True,
    add_completion=False,
)


def _version() -> str:
    try:
        return importlib.metadata.version("infinite-friezes")
    except importlib.metadata.PackageNotFoundError:
        return "0.1.0 (development)"


@app.callback(invoke_without_command=True)
def main_callback(
    version: bool = typer.Option(
        False, "--version", "-V", help="Show version and exit"
    ),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Log debug events to stderr"
    ),
):
    """Set up logging before any subcommand runs."""
    if version:
        typer.echo(f"frieze version {_version()}")
        raise typer.Exit(0)

    configure_logging("DEBUG" if verbose else load_config().log_level)


def cli_entry():
    """Console script registered in pyproject.toml as 'frieze'."""
    try:
        app()
    except typer.BadParameter as e:
        print_error(str(e))
        sys.exit(EXIT_BAD_ARGS)
    except FriezeError as e:
        print_error(f"{e.code}: {e}")
        sys.exit(EXIT_ERROR)
    except Exception as e:
        print_error(f"Unexpected error: {str(e)}")
        sys.exit(EXIT_ERROR)


# Command imports
from src.cli.commands.reduce import reduce_command
from src.cli.commands.classify import classify_command
from src.cli.commands.partner import partner_command
from src.cli.commands.growth import growth_command
from src.cli.commands.rows import rows_command
from src.cli.commands.triangulate import triangulate_command
from src.cli.commands.quiver import quiver_command
from src.cli.commands.tube import tube_command
from src.cli.commands.verify import verify_command
from src.cli.commands.config import config_command


# Register commands
app.command(name="reduce", help="Reduce a quiddity sequence to skeletal form")(reduce_command)
app.command(name="classify", help="Classify a quiddity sequence")(classify_command)
app.command(name="partner", help="Compute the partner quiddity sequence")(partner_command)
app.command(name="growth", help="Compute growth coefficients")(growth_command)

app.command(name="rows", help="Print the first rows of a frieze")(rows_command)
app.command(name="frieze", help="Alias of 'rows'")(rows_command)

app.command(
    name="triangulate",
    help="Build the skeletal annulus triangulation of a quiddity sequence"
)(triangulate_command)

app.command(name="quiver", help="Map between cycle quivers and quiddity sequences")(quiver_command)
app.command(name="tube", help="Check tube identities against frieze entries")(tube_command)

app.command(
    name="verify",
    help="Run the property suites"
)(verify_command)

app.command(
    name="config",
    help="View and modify configuration"
)(config_command)
