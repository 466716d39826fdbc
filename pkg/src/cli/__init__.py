"""Command-line interface for the 2-SCSS toolkit.

This package provides the `scss` command group, the rich output formatters, and the
DOT and certificate exporters. Commands only parse arguments, call the library, and
format results.
"""

from src.cli.main import cli

__all__ = ["cli"]
