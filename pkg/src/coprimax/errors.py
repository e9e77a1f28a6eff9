"""Exception types shared across modules."""


class InternalConsistencyError(RuntimeError):
    """A construction the package generated itself failed its own
    verification; this signals an arithmetic bug, never bad user input."""


class TableValidationError(ValueError):
    """A case table violated a structural invariant; carries a location."""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class BudgetExceeded(RuntimeError):
    """Internal signal that a search ran out of nodes or time."""
