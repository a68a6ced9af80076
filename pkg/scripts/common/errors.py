"""Domain exceptions shared by every sub-package."""


class LabError(Exception):
    """Base class for all domain errors."""


class InvalidArgumentError(LabError, ValueError):
    """Input violates an operation's precondition."""


class UnsupportedError(InvalidArgumentError):
    """Input is well formed but outside what the implementation constructs."""


class ResourceLimitError(LabError, RuntimeError):
    """A configured scale or enumeration budget would be exceeded."""
