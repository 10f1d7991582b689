"""Shared exception types."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (two routes to the same value disagree)."""


class BudgetError(RuntimeError):
    """An enumeration would exceed the configured size budget."""


class LatticeError(ValueError):
    """The input poset is not a lattice; carries the offending pair."""

    def __init__(self, message: str, pair: tuple[str, str] | None = None):
        super().__init__(message)
        self.pair = pair
