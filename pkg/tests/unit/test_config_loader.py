"""
Unit tests for configuration loader.
"""
import pytest
import tempfile
from pathlib import Path

from src.hypercube_embedding.core.config_loader import ConfigLoader, load_config
from src.hypercube_embedding.core.exceptions import ConfigurationError


def write_config(text: str) -> str:
    with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
        f.write(text)
        return f.name


class TestConfigLoader:
    """Tests for ConfigLoader."""

    def test_load_valid_config(self):
        """Test loading a valid configuration."""
        config_path = write_config("""
settings:
  log_level: info
  parallel_execution: true
  max_workers: 2

construction:
  max_dimension: 8
  merge_check: false

search:
  exhaustive_budget: 1000
  random_budget: 50
  default_seed: 42
  progress_interval: 10
""")
        try:
            config = ConfigLoader(config_path).load()

            assert config.settings.log_level == 'INFO'
            assert config.settings.parallel_execution
            assert config.construction.max_dimension == 8
            assert not config.construction.merge_check
            assert config.search.default_seed == 42
        finally:
            Path(config_path).unlink()

    def test_load_nonexistent_file(self):
        """Test loading from non-existent file."""
        with pytest.raises(ConfigurationError) as exc_info:
            ConfigLoader('/nonexistent/config.yaml')

        assert 'not found' in str(exc_info.value).lower()

    def test_env_variable_substitution(self, monkeypatch):
        """Test environment variable substitution, with and without defaults."""
        monkeypatch.setenv('EMBED_LOG_LEVEL', 'DEBUG')
        monkeypatch.delenv('EMBED_MISSING', raising=False)

        config_path = write_config("""
settings:
  log_level: "${EMBED_LOG_LEVEL}"
search:
  random_budget: "${EMBED_MISSING:250}"
""")
        try:
            config = ConfigLoader(config_path).load()

            assert config.settings.log_level == 'DEBUG'
            assert config.search.random_budget == 250
        finally:
            Path(config_path).unlink()

    @pytest.mark.parametrize("text", [
        "",
        "- just\n- a list\n",
        "settings: [unclosed\n",
        "settings:\n  log_level: LOUD\n",
        "construction:\n  max_dimension: 1\n",
        "search:\n  exhaustive_budget: 0\n",
        "settings:\n  max_workers: 0\n",
    ])
    def test_invalid_configs(self, text):
        """Test that empty, malformed and out-of-range files are rejected."""
        config_path = write_config(text)
        try:
            loader = ConfigLoader(config_path)
            with pytest.raises(ConfigurationError):
                loader.load()
            assert loader.validate_only() is False
        finally:
            Path(config_path).unlink()

    def test_validation_error_names_the_field(self):
        config_path = write_config("construction:\n  max_dimension: 1\n")
        try:
            with pytest.raises(ConfigurationError) as exc_info:
                ConfigLoader(config_path).load()
            assert 'construction -> max_dimension' in str(exc_info.value)
        finally:
            Path(config_path).unlink()

    def test_defaults_without_file(self):
        """Test that no config path means the built-in defaults."""
        config = load_config(None)

        assert config.settings.log_level == 'WARNING'
        assert config.construction.max_dimension == 16
        assert config.construction.merge_check
        assert config.search.exhaustive_budget == 10_000_000

    def test_shipped_configs_are_valid(self):
        """Test the configuration files in the repository."""
        root = Path(__file__).resolve().parents[2] / 'config'
        paths = [root / 'embedding_config.yaml'] + sorted((root / 'examples').glob('*.yaml'))
        for path in paths:
            assert ConfigLoader(str(path)).validate_only(), path

    def test_from_dict(self):
        config = ConfigLoader.from_dict({'settings': {'log_level': 'INFO', 'max_workers': 8}})
        assert config.settings.max_workers == 8

        with pytest.raises(ConfigurationError):
            ConfigLoader.from_dict({'settings': {'log_level': 'LOUD'}})
