"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested operation."""


class CapacityError(DomainError):
    """A brute-force enumeration was asked to run past its configured cap."""

    def __init__(self, message, flag=None):
        super().__init__(message)
        self.flag = flag


class InvariantViolation(RuntimeError):
    """An internal guarantee failed. Always indicates a bug."""
