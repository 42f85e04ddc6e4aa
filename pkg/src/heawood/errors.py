"""Exception types shared across the toolkit."""


class HeawoodError(ValueError):
    """A domain error: the input violates an operation's precondition."""


class SolverCapError(HeawoodError):
    """Raised when an instance exceeds the exact colouring solver's size cap."""
