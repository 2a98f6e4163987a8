"""Shared exception types."""


class GuardExceeded(RuntimeError):
    """A size guard on a brute-force or exact-arithmetic routine was exceeded."""


class FormatError(ValueError):
    """A text file does not conform to one of the supported formats."""
