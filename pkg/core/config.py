# wheelhouse/core/config.py
"""
Configuration Management Module

This module provides settings management using Pydantic for validation
and dotenv for environment variable loading.
"""
from enum import Enum

from pydantic import AliasChoices, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class EnvironmentType(str, Enum):
    """Environment types for the application."""

    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"


class CacheBackendType(str, Enum):
    """Supported cache backend types."""

    MEMORY = "memory"  # in-process dict (default)
    FILE = "file"      # JSON files under cache_dir


class LogFormat(str, Enum):
    """Renderers for structured log lines."""

    CONSOLE = "console"
    JSON = "json"


class Settings(BaseSettings):
    """
    Engine settings with validation.

    Values come from the environment (or a .env file); the CLI overrides a
    few of them per run.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        populate_by_name=True,
        extra="ignore",
    )

    # Environment settings
    environment: EnvironmentType = Field(
        default=EnvironmentType.DEVELOPMENT, description="Run environment"
    )
    debug: bool = Field(default=False, description="Enable debug logging")
    log_level: str = Field(default="WARNING", description="Root log level")
    log_format: LogFormat = Field(
        default=LogFormat.CONSOLE, description="Log renderer: console | json"
    )

    # -------------------------------------------------
    # Cache settings
    # -------------------------------------------------
    cache_enabled: bool = Field(
        default=True, description="Enable/disable composition-tensor caching"
    )
    cache_backend: CacheBackendType = Field(
        default=CacheBackendType.MEMORY,
        description="Caching backend: memory | file",
    )
    cache_dir: str = Field(
        default=".cache/wheelhouse",
        validation_alias=AliasChoices("WHEELHOUSE_CACHE", "cache_dir"),
        description="Directory for the FILE backend (env WHEELHOUSE_CACHE)",
    )
    cache_max_size: int = Field(
        default=100_000, description="Max cached entries (memory backend)"
    )

    # Computation settings
    parallelism: int = Field(
        default=1, description="Worker count for block-level tasks"
    )
    max_canonical_vertices: int = Field(
        default=9, description="Vertex bound for exhaustive canonical forms"
    )
    dense_oracle_max_cols: int = Field(
        default=200, description="Run the dense rank oracle up to this width"
    )
    modular_crosscheck: bool = Field(
        default=False, description="Cross-check exact ranks modulo two primes"
    )
    character_table_max_n: int = Field(
        default=8, description="Largest symmetric group with a cached table"
    )
    reports_dir: str = Field(
        default="reports", description="Where compare runs drop JSON reports"
    )

    @field_validator(
        "cache_max_size",
        "parallelism",
        "max_canonical_vertices",
        "character_table_max_n",
    )
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Reject non-positive sizes."""
        if v <= 0:
            raise ValueError("must be a positive integer")
        return v

    @field_validator("dense_oracle_max_cols")
    @classmethod
    def validate_non_negative(cls, v: int) -> int:
        """Zero disables the dense oracle."""
        if v < 0:
            raise ValueError("must be non-negative")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalise the level name."""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return level


def get_settings() -> Settings:
    """
    Create and return Settings instance from environment variables.

    Returns:
        Settings object with configuration values
    """
    return Settings()
