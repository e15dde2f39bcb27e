"""Frieze toolkit configuration.

This module provides configuration management including:
- TOML-based configuration with defaults for every knob
- Environment variable overrides for the seed and log level
- Type-safe configuration via frozen dataclass
"""

import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass
from pathlib import Path

from src.config.paths import DEFAULT_CONFIG_PATH

DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class FriezeConfig:
    """Toolkit configuration.

    Frozen dataclass ensures immutable configuration after load.
    All fields have defaults, so a missing file is not an error.
    """

    # Rows
    default_depth: int = 10

    # Verification
    default_seed: int = DEFAULT_SEED
    verify_samples: int = 10000
    verify_max_length: int = 12
    verify_max_entry: int = 9
    verify_workers: int = 4

    # Subset sums refuse windows longer than this
    subset_window_limit: int = 24

    # Tube checks
    tube_max_level: int = 12

    # Rendering
    svg_size: int = 480
    svg_samples: int = 24

    # Logging
    log_level: str = "WARNING"


def _env_int(name: str, fallback: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return fallback
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


def load_config(config_path: Path | None = None) -> FriezeConfig:
    """Load configuration from TOML with environment overrides.

    Priority: environment variables > TOML file > defaults

    Args:
        config_path: Path to TOML config file.
                    Defaults to ~/.frieze/frieze.toml

    Returns:
        Frozen FriezeConfig instance
    """
    if config_path is None:
        config_path = DEFAULT_CONFIG_PATH

    config_data = {}
    if config_path.exists():
        with open(config_path, "rb") as f:
            config_data = tomllib.load(f)

    frieze = config_data.get("frieze", {})
    verify = config_data.get("verify", {})
    render = config_data.get("render", {})
    logging = config_data.get("logging", {})

    defaults = FriezeConfig()
    seed = _env_int("FRIEZE_SEED", verify.get("seed", defaults.default_seed))
    log_level = os.getenv("FRIEZE_LOG_LEVEL", logging.get("level", defaults.log_level))

    return FriezeConfig(
        default_depth=frieze.get("default_depth", defaults.default_depth),
        default_seed=seed,
        verify_samples=verify.get("samples", defaults.verify_samples),
        verify_max_length=verify.get("max_length", defaults.verify_max_length),
        verify_max_entry=verify.get("max_entry", defaults.verify_max_entry),
        verify_workers=verify.get("workers", defaults.verify_workers),
        subset_window_limit=frieze.get("subset_window_limit", defaults.subset_window_limit),
        tube_max_level=frieze.get("tube_max_level", defaults.tube_max_level),
        svg_size=render.get("svg_size", defaults.svg_size),
        svg_samples=render.get("svg_samples", defaults.svg_samples),
        log_level=log_level.upper(),
    )


def resolve_seed(cli_seed: int | None, config: FriezeConfig) -> int:
    """FRIEZE_SEED beats --seed, which beats the configured seed."""
    env_seed = os.getenv("FRIEZE_SEED")
    if env_seed:
        return _env_int("FRIEZE_SEED", config.default_seed)
    if cli_seed is not None:
        return cli_seed
    return config.default_seed
