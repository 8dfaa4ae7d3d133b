# tests/unit/core/test_config.py
"""
Tests for configuration module.
"""
import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from core.config import CacheBackendType, EnvironmentType, LogFormat, Settings


def test_default_settings():
    """Test default settings values."""
    with patch.dict(os.environ, {}, clear=True):
        settings = Settings(_env_file=None)

        assert settings.environment == EnvironmentType.DEVELOPMENT
        assert settings.debug is False
        assert settings.log_level == "WARNING"
        assert settings.log_format == LogFormat.CONSOLE
        assert settings.cache_enabled is True
        assert settings.cache_backend == CacheBackendType.MEMORY
        assert settings.cache_dir == ".cache/wheelhouse"
        assert settings.parallelism == 1
        assert settings.character_table_max_n == 8
        assert settings.reports_dir == "reports"


def test_environment_variables_override():
    """Test that environment variables override defaults."""
    env_vars = {
        "ENVIRONMENT": "production",
        "DEBUG": "True",
        "LOG_LEVEL": "info",
        "LOG_FORMAT": "json",
        "CACHE_BACKEND": "file",
        "PARALLELISM": "4",
        "MODULAR_CROSSCHECK": "true",
    }

    with patch.dict(os.environ, env_vars, clear=True):
        settings = Settings(_env_file=None)

        assert settings.environment == EnvironmentType.PRODUCTION
        assert settings.debug is True
        assert settings.log_level == "INFO"
        assert settings.log_format == LogFormat.JSON
        assert settings.cache_backend == CacheBackendType.FILE
        assert settings.parallelism == 4
        assert settings.modular_crosscheck is True


def test_cache_dir_from_wheelhouse_cache():
    with patch.dict(os.environ, {"WHEELHOUSE_CACHE": "/tmp/wh-cache"}, clear=True):
        settings = Settings(_env_file=None)
        assert settings.cache_dir == "/tmp/wh-cache"


@pytest.mark.parametrize("field", ["parallelism", "cache_max_size", "character_table_max_n"])
def test_positive_fields_rejected(field):
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **{field: 0})


def test_unknown_log_level_rejected():
    with pytest.raises(ValidationError):
        Settings(_env_file=None, log_level="chatty")
