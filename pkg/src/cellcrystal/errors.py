"""Exception types shared by every module."""


class CellCrystalError(Exception):
    """Base class for library errors."""


class InvalidInput(CellCrystalError, ValueError):
    """Precondition violated by the caller."""


class UnsupportedMinor(CellCrystalError):
    """A fundamental minor that the matrix models cannot realize (spin weights)."""


class BudgetExceeded(CellCrystalError):
    """A search or symbolic computation hit its configured cap."""


class NotDivisible(CellCrystalError, ArithmeticError):
    """Exact division failed; carries the remainder witness."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class CheckFailed(CellCrystalError):
    """A verification that is expected to hold did not."""
