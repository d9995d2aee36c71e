"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed or axiom-violating input data."""


class CutoffOverflowError(ValueError):
    """A computation needs objects larger than the active size cutoff."""


class GuardExceededError(RuntimeError):
    """A resource guard (point count, search-space size) was breached."""


class TheoremViolation(AssertionError):
    """Falsifying evidence: a verified precondition held but a proved
    consequence failed.  Carries the witness; never silently repaired."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
