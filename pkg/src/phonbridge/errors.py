"""Shared exception types."""


class PhonbridgeError(Exception):
    """Base class for all errors raised by this package."""


class DataError(PhonbridgeError):
    """Invalid or inconsistent input data (bad files, bad values, bad references)."""


class ParseError(DataError):
    """Malformed input text; carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownSymbolError(DataError):
    """Segment lookup failed; records every symbol tried along the fallback chain."""

    def __init__(self, symbol, attempts=()):
        self.symbol = symbol
        self.attempts = tuple(attempts)
        message = f"unknown segment {symbol!r}"
        if len(self.attempts) > 1:
            tried = ", ".join(repr(a) for a in self.attempts)
            message += f" (fallback chain tried: {tried})"
        super().__init__(message)
