"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ShapeError(ValueError):
    """Matrix dimensions are incompatible."""


class ConsistencyError(AssertionError):
    """An internal invariant failed. This indicates a bug, never bad input."""
