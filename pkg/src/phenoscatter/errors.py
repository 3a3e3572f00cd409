"""Shared exception types.

The CLI maps these onto exit codes: bad parameters are exit 1, bad input
files or data are exit 2, numerical failures are exit 3.
"""


class PhenoscatterError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PhenoscatterError):
    """Unreadable, malformed, or inconsistent input data."""


class NumericalError(PhenoscatterError):
    """Optimization produced non-finite values or violated an invariant."""
