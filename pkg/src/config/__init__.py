from src.config.logging import configure_logging
from src.config.paths import DEFAULT_CONFIG_PATH, FRIEZE_HOME
from src.config.settings import DEFAULT_SEED, FriezeConfig, load_config, resolve_seed

__all__ = [
    "configure_logging",
    "DEFAULT_CONFIG_PATH",
    "FRIEZE_HOME",
    "DEFAULT_SEED",
    "FriezeConfig",
    "load_config",
    "resolve_seed",
]
