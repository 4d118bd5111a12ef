class DomainError(ValueError):
    """Input outside the domain where an operation is defined."""


class NumericalError(RuntimeError):
    """A numerical kernel failed (non-convergence, overflow)."""
