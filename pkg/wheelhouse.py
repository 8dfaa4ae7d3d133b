#!/usr/bin/env python
# wheelhouse.py
"""Entry point: python wheelhouse.py <subcommand> [flags]."""
import sys

from dotenv import load_dotenv

from cli import run

if __name__ == "__main__":
    load_dotenv()
    sys.exit(run(sys.argv[1:]))
