"""Exception hierarchy shared by the solvers, codecs and the CLI."""


class DiscMatchError(Exception):
    """Base class for all errors raised by this package."""


class InputError(DiscMatchError, ValueError):
    """Malformed or out-of-range input (bad vertex ids, invalid decompositions, ...)."""


class ParseError(InputError):
    """A text file could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(DiscMatchError):
    """An operation was called with arguments violating its documented precondition."""

    def __init__(self, message: str, reason: str | None = None):
        self.reason = reason
        super().__init__(message)


class ResourceLimitError(DiscMatchError):
    """A configurable size guard (brute-force size, separator count) was exceeded."""
