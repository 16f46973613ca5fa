"""Exception types shared by every module."""


class ElamiteError(Exception):
    """Base class for all library errors."""


class DomainError(ElamiteError, ValueError):
    """An argument violates a mathematical precondition."""


class ParseError(ElamiteError, ValueError):
    """Malformed textual input.  ``position`` is a 0-based column, if known."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        self.message = message
        if position is not None:
            message = f"{message} (at column {position + 1})"
        super().__init__(message)
