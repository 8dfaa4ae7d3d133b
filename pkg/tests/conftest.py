# wheelhouse/tests/conftest.py
"""
Test Fixtures Module

This module provides pytest fixtures for testing.
"""
import os
import tempfile

import pytest

# Set test environment variables before importing engine modules
os.environ["ENVIRONMENT"] = "testing"
os.environ["DEBUG"] = "False"
os.environ["CACHE_BACKEND"] = "memory"
os.environ["LOG_LEVEL"] = "WARNING"
os.environ.pop("WHEELHOUSE_CACHE", None)

from core.config import EnvironmentType, Settings
from core.logging import configure_logging
from operads.factory import builtin
from species.core import Truncation


def _test_settings() -> Settings:
    return Settings(
        environment=EnvironmentType.TESTING,
        debug=False,
        cache_backend="memory",
        parallelism=1,
        modular_crosscheck=True,
    )


@pytest.fixture(scope="session", autouse=True)
def test_logging():
    """Structured logging at the test log level for the whole session."""
    configure_logging(_test_settings())


@pytest.fixture
def settings() -> Settings:
    """Settings for tests: in-memory cache, one worker."""
    return _test_settings()


@pytest.fixture
def small() -> Truncation:
    """Truncation small enough for every complex to build in well under a second."""
    return Truncation(max_arity=3, max_weight=3, max_degree=3)


@pytest.fixture
def com(settings):
    return builtin("com", 5, settings=settings)


@pytest.fixture
def ass(settings):
    return builtin("ass", 5, settings=settings)


@pytest.fixture
def lie(settings):
    return builtin("lie", 5, settings=settings)


@pytest.fixture
def prelie(settings):
    return builtin("prelie", 4, settings=settings)


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    with tempfile.TemporaryDirectory() as tmpdirname:
        yield tmpdirname
