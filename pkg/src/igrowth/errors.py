"""Exception types shared across the package."""


class IGrowthError(Exception):
    """Base class for all errors raised by :mod:`igrowth`."""


class ParseError(IGrowthError, ValueError):
    """Malformed group, sequence or function input.

    ``line`` is the 1-based line number of the offending input line, when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CapacityError(IGrowthError):
    """The requested computation exceeds a configured capacity bound.

    Distinct from an empty result: an empty answer is always trustworthy,
    a capacity error means no answer was computed.
    """


class InsufficientPrefixError(CapacityError):
    """A finite sequence prefix is too short to evaluate a closed form."""
