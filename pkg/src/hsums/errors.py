"""Exception hierarchy. Each class maps to a stable CLI exit code."""


class HsumsError(Exception):
    """Base class for all package errors."""

    exit_code = 1
    status = "error"


class UsageError(HsumsError):
    """Input outside an operation's contract (bad bounds, malformed index, ...)."""

    exit_code = 2
    status = "usage-error"


class CapabilityError(HsumsError):
    """The request is well-formed but not supported at this build level."""

    exit_code = 3
    status = "capability-error"


class ResourceBudgetError(HsumsError):
    """The work budget would be exceeded; no partial/wrong value is returned.

    ``best_estimate`` may carry the best value obtained before giving up
    (used by the quadrature oracle).
    """

    exit_code = 4
    status = "resource-error"

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate


class PoleError(HsumsError):
    """Evaluation was requested exactly at a pole; carries the pole location."""

    exit_code = 5
    status = "pole-error"

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class AccuracyWarning(UserWarning):
    """A value was returned but its accuracy is degraded (e.g. near a pole)."""
