"""Result containers shared across the package."""

from src.core.types import STATUS_ERROR, STATUS_OK, Certificate, CheckResult, CommandResult

__all__ = ["STATUS_ERROR", "STATUS_OK", "Certificate", "CheckResult", "CommandResult"]
