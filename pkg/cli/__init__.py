# cli/__init__.py
"""Command-line front end: argument parsing, run configuration and output."""
from .config import CyclicSource, RunConfig, Subcommand
from .main import build_parser, run

__all__ = ["CyclicSource", "RunConfig", "Subcommand", "build_parser", "run"]
