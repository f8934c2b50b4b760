"""Shared exception types."""


class InputError(ValueError):
    """Caller-supplied data violates a precondition."""


class ResourceBudgetError(RuntimeError):
    """An exact search would exceed its configured budget."""


class ConstructionDefectError(RuntimeError):
    """A certified construction failed its own verification.

    Carries the failing witness so callers can report exactly what broke
    instead of silently emitting a wrong certificate.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
