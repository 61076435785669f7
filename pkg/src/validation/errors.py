"""
Domain Errors

Every failure a parorbit operation can signal. All errors derive from
ValueError so callers that only guard against bad input keep working; the
CLI maps ParorbitError to exit code 1 and prints ``str(err)`` verbatim.
"""

from typing import Any, Dict, Optional


class ParorbitError(ValueError):
    """Base class for domain errors, with an optional structured detail."""

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def __str__(self):
        return f"{type(self).__name__}: {self.message}"


# exact_algebra
class SizeMismatch(ParorbitError):
    pass


class NotNilpotent(ParorbitError):
    pass


class DimensionTooLarge(ParorbitError):
    pass


# quiver_rep
class NotInCone(ParorbitError):
    pass


class NotInjectiveArrows(ParorbitError):
    pass


class PresetMismatch(ParorbitError):
    pass


class FieldNotSupported(ParorbitError):
    pass


class RelationViolation(ParorbitError):
    pass


class NotDeltaFiltered(ParorbitError):
    pass


class IndexOutOfGrid(ParorbitError):
    pass


# young_normalizer
class NotStable(ParorbitError):
    pass


class MovePreconditionViolated(ParorbitError):
    """Raised with ``detail["clause"]`` naming the failed precondition."""


class MuTooLarge(ParorbitError):
    pass


class NotReducedBase(ParorbitError):
    pass


# orbit_oracle
class BudgetExceeded(ParorbitError):
    pass


# families
class ParamOutOfRange(ParorbitError):
    pass


class NotInParabolic(ParorbitError):
    pass


class MethodsDisagree(ParorbitError):
    """Two independent distinguishedness routes returned different verdicts."""


class InfiniteType(ParorbitError):
    pass
