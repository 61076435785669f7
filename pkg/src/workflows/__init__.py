"""Command implementations and their rich reports."""

from src.workflows.commands import run_command
from src.workflows.reporting import render_result

__all__ = ["run_command", "render_result"]
