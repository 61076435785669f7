"""The parorbit click command group."""

from src.cli.main import cli, run

__all__ = ["cli", "run"]
