"""
Toolkit exceptions.

Kernels in this package raise these instead of printing; Managers and the CLI
decide how a failure is reported.
"""


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit kernels."""


class InvalidArgumentError(ToolkitError, ValueError):
    """An argument is malformed or outside its documented range."""


class DomainError(ToolkitError, ValueError):
    """The input is well-formed but the operation is undefined on it."""


class ResourceLimitError(ToolkitError):
    """The input exceeds an enumeration cap."""
