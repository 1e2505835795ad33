"""Exception types shared across the package."""


class FreeprodError(Exception):
    """Base class for package errors."""


class BoundExhausted(FreeprodError):
    """A query needed words longer than the active length bound."""


class SizeLimitExceeded(FreeprodError):
    """An enumeration would exceed a configured size guard."""


class ParseError(FreeprodError):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
