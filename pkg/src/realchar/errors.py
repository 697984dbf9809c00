"""Exception types shared across the package."""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(ToolkitError):
    """Malformed or inconsistent input (degree mismatch, bad matching, ...)."""


class CapacityError(ToolkitError):
    """A configured size cap was exceeded; the message names the cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


class ParseError(ToolkitError):
    """Unreadable group file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InternalError(ToolkitError):
    """An invariant the theory guarantees was violated; signals a bug."""
