class EnriquesError(Exception):
    """Base class for errors raised by this package."""


class PreconditionError(EnriquesError, ValueError):
    """Input outside the domain of an operation."""


class InvariantViolation(EnriquesError, RuntimeError):
    """A theorem-backed check failed; indicates a bug, not bad input."""
