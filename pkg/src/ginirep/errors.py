class InvalidInputError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed its documented size bound."""


class ConsistencyError(RuntimeError):
    """Raised when two independent computations of the same quantity disagree."""
