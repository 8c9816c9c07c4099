"""Shared exception base class.

Every error deliberately raised by this package derives from
:class:`ToolkitError`, so callers (the command line driver in
particular) can distinguish domain failures from genuine bugs.
"""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""
