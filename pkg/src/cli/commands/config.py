"""Config command for viewing and modifying toolkit configuration."""
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Annotated, Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
import typer
from rich.table import Table

from src.cli.output import console, print_error, print_json, print_success
from src.cli.utils import EXIT_BAD_ARGS, EXIT_SUCCESS, suggest_command
from src.config import DEFAULT_CONFIG_PATH, load_config

# Dotted TOML key -> (FriezeConfig attribute, type, description)
VALID_CONFIG_KEYS = {
    "frieze.default_depth": ("default_depth", int, "Rows printed by 'frieze rows'"),
    "frieze.subset_window_limit": ("subset_window_limit", int, "Longest window a subset sum may run over"),
    "frieze.tube_max_level": ("tube_max_level", int, "Default --max-level for 'frieze tube'"),
    "verify.seed": ("default_seed", int, "Seed for the property suites"),
    "verify.samples": ("verify_samples", int, "Random cases per suite"),
    "verify.max_length": ("verify_max_length", int, "Longest random quiddity sequence"),
    "verify.max_entry": ("verify_max_entry", int, "Largest random quiddity entry"),
    "verify.workers": ("verify_workers", int, "Suites run side by side"),
    "render.svg_size": ("svg_size", int, "SVG width and height in pixels"),
    "render.svg_samples": ("svg_samples", int, "Points per arc in SVG paths"),
    "logging.level": ("log_level", str, "Log level (DEBUG, INFO, WARNING, ERROR)"),
}


def _set_nested_value(config_dict: dict, key_path: str, value):
    section, key = key_path.split(".", 1)
    config_dict.setdefault(section, {})[key] = value


def _format_toml_value(value) -> str:
    if isinstance(value, str):
        return f'"{value}"'
    return str(value)


def _write_toml(config_dict: dict, path: Path):
    """Write a flat two-level config dict as TOML."""
    path.parent.mkdir(parents=True, exist_ok=True)

    lines = []
    for section, values in sorted(config_dict.items()):
        lines.append(f"[{section}]")
        for key, value in sorted(values.items()):
            lines.append(f"{key} = {_format_toml_value(value)}")
        lines.append("")  # Blank line between sections

    path.write_text("\n".join(lines))


def _unknown_key(key: str):
    hint = suggest_command(key, list(VALID_CONFIG_KEYS))
    print_error(
        f"Unknown config key '{key}'.",
        suggestion=f"Did you mean '{hint}'?" if hint else "Run 'frieze config' to see valid keys.",
    )
    sys.exit(EXIT_BAD_ARGS)


def config_command(
    set_value: Annotated[
        Optional[str], typer.Option("--set", help="Set config value: key=value")
    ] = None,
    get_key: Annotated[
        Optional[str], typer.Option("--get", help="Get a specific config value")
    ] = None,
    config_path: Annotated[
        Optional[Path], typer.Option("--path", help="Config file (default ~/.frieze/frieze.toml)")
    ] = None,
    format: Annotated[
        Optional[str], typer.Option("--format", "-f", help="Output format: json")
    ] = None,
):
    """View and modify configuration.

    Examples:
        frieze config                          # Show all settings
        frieze config --get verify.seed        # Get specific value
        frieze config --set verify.samples=500 # Set value
        frieze config --format json            # JSON output
    """
    config_path = config_path or DEFAULT_CONFIG_PATH

    if set_value:
        if "=" not in set_value:
            print_error(
                "Invalid format. Use: frieze config --set key=value",
                suggestion="Example: frieze config --set verify.samples=500",
            )
            sys.exit(EXIT_BAD_ARGS)

        key, value_str = (part.strip() for part in set_value.split("=", 1))
        if key not in VALID_CONFIG_KEYS:
            _unknown_key(key)

        _, target_type, _ = VALID_CONFIG_KEYS[key]
        try:
            parsed_value = target_type(value_str)
        except ValueError:
            print_error(
                f"Invalid value for {key}: {value_str!r}",
                suggestion=f"Expected type: {target_type.__name__}",
            )
            sys.exit(EXIT_BAD_ARGS)

        existing_toml = {}
        if config_path.exists():
            with open(config_path, "rb") as f:
                existing_toml = tomllib.load(f)
        _set_nested_value(existing_toml, key, parsed_value)
        _write_toml(existing_toml, config_path)

        print_success(f"Set {key} = {parsed_value}")
        sys.exit(EXIT_SUCCESS)

    config = load_config(config_path)

    if get_key:
        if get_key not in VALID_CONFIG_KEYS:
            _unknown_key(get_key)
        value = getattr(config, VALID_CONFIG_KEYS[get_key][0])
        if format == "json":
            print_json({get_key: value})
        else:
            console.print(f"{value}")
        sys.exit(EXIT_SUCCESS)

    if format == "json":
        print_json(asdict(config))
    else:
        table = Table(title="Frieze Configuration", show_header=True, header_style="bold cyan")
        table.add_column("Key", style="cyan")
        table.add_column("Value", style="white")
        table.add_column("Description", style="dim")
        for key, (attr, _, desc) in VALID_CONFIG_KEYS.items():
            table.add_row(key, str(getattr(config, attr)), desc)
        console.print(table)

    sys.exit(EXIT_SUCCESS)
