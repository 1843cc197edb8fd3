"""Shared exception types."""


class InputError(ValueError):
    """Malformed input or a violated operation precondition."""


class ResourceError(RuntimeError):
    """A configured search budget was exceeded."""

    def __init__(self, message, partial_size=None):
        super().__init__(message)
        self.partial_size = partial_size


class ConsistencyError(RuntimeError):
    """Two independent computations of the same fact disagreed.

    Raised only by internal cross-checks; it always signals a bug in this
    package, never bad input.  The command line maps it to its own exit code
    so it cannot be mistaken for a false verdict.
    """
