from pathlib import Path

# User configuration directory: ~/.frieze
FRIEZE_HOME = Path.home() / ".frieze"
DEFAULT_CONFIG_PATH = FRIEZE_HOME / "frieze.toml"
