"""Exception types shared across the package."""


class LmconvexError(Exception):
    """Base class for all library errors."""


class LatticeError(LmconvexError, ValueError):
    """An element is not in the lattice, or order data is not a lattice."""


class PreconditionError(LmconvexError, ValueError):
    """A documented hypothesis of an operation does not hold."""


class BudgetError(LmconvexError, RuntimeError):
    """An enumeration or table would exceed the configured size budget."""

    def __init__(self, message: str, *, requested: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.requested = requested
        self.budget = budget


class FormatError(LmconvexError, ValueError):
    """An input file is malformed; the message carries a position diagnostic."""
