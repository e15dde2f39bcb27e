"""Test suite for toolkit configuration.

Tests configuration loading from TOML files with environment variable overrides,
config immutability, seed resolution and logging setup.
"""

import logging

import pytest

from src.config import DEFAULT_SEED, FriezeConfig, configure_logging, load_config, resolve_seed


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("FRIEZE_SEED", raising=False)
    monkeypatch.delenv("FRIEZE_LOG_LEVEL", raising=False)


class TestConfigDefaults:
    """Test default configuration values."""

    def test_load_config_defaults(self, tmp_path):
        """Load config with no file present - should return all defaults."""
        config = load_config(tmp_path / "nonexistent" / "frieze.toml")

        assert config.default_depth == 10
        assert config.default_seed == DEFAULT_SEED
        assert config.verify_samples == 10000
        assert config.verify_workers == 4
        assert config.subset_window_limit == 24
        assert config.tube_max_level == 12
        assert config.svg_size == 480
        assert config.log_level == "WARNING"

    def test_config_is_frozen(self):
        config = FriezeConfig()
        with pytest.raises(Exception):
            config.default_depth = 3


class TestConfigFromTOML:
    """Test configuration loading from TOML files."""

    def test_load_config_from_toml(self, tmp_path):
        config_file = tmp_path / "frieze.toml"
        config_file.write_text("""
[frieze]
default_depth = 6
tube_max_level = 8

[verify]
seed = 7
samples = 50
workers = 2

[render]
svg_size = 300

[logging]
level = "info"
""")
        config = load_config(config_file)

        assert config.default_depth == 6
        assert config.tube_max_level == 8
        assert config.default_seed == 7
        assert config.verify_samples == 50
        assert config.verify_workers == 2
        assert config.svg_size == 300
        assert config.svg_samples == 24
        assert config.log_level == "INFO"

    def test_shipped_template_loads(self):
        from pathlib import Path

        template = Path(__file__).parent.parent / "config" / "frieze.toml"
        config = load_config(template)
        assert config.default_depth >= 1


class TestEnvironmentOverrides:
    """Environment variables beat the TOML file."""

    def test_seed_env_override(self, tmp_path, monkeypatch):
        config_file = tmp_path / "frieze.toml"
        config_file.write_text("[verify]\nseed = 7\n")
        monkeypatch.setenv("FRIEZE_SEED", "99")

        assert load_config(config_file).default_seed == 99

    def test_bad_seed_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("FRIEZE_SEED", "abc")
        with pytest.raises(ValueError):
            load_config(tmp_path / "missing.toml")

    def test_log_level_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("FRIEZE_LOG_LEVEL", "debug")
        assert load_config(tmp_path / "missing.toml").log_level == "DEBUG"


class TestResolveSeed:
    def test_cli_beats_config(self):
        assert resolve_seed(5, FriezeConfig(default_seed=3)) == 5

    def test_config_used_without_cli(self):
        assert resolve_seed(None, FriezeConfig(default_seed=3)) == 3

    def test_env_beats_cli(self, monkeypatch):
        monkeypatch.setenv("FRIEZE_SEED", "11")
        assert resolve_seed(5, FriezeConfig(default_seed=3)) == 11


class TestLogging:
    def test_configure_logging_sets_level(self):
        configure_logging("DEBUG")
        logger = logging.getLogger("src")
        assert logger.level == logging.DEBUG
        assert logger.propagate is False
        assert len(logger.handlers) == 1

    def test_reconfigure_replaces_handler(self):
        configure_logging("INFO")
        configure_logging("WARNING")
        logger = logging.getLogger("src")
        assert len(logger.handlers) == 1
        assert logger.level == logging.WARNING
