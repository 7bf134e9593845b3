"""Exception hierarchy shared by the whole package.

Every class carries ``exit_code``, the process status the command-line
front end maps it to.
"""


class FocklatError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class UsageError(FocklatError):
    """Bad command-line or configuration input."""

    exit_code = 2


class DimensionError(FocklatError):
    """Truncated-space dimension is invalid or operands disagree."""

    exit_code = 3


class RangeError(FocklatError):
    """Argument lies outside the supported parameter range."""

    exit_code = 3


class SingularParameterError(FocklatError):
    """A reordering map hit a vanishing denominator."""

    exit_code = 3


class BranchError(FocklatError):
    """Logarithm branch undefined (zero argument)."""

    exit_code = 3


class UnsupportedOracleError(FocklatError):
    """No closed-form reference exists for the requested configuration."""

    exit_code = 3


class BesselRootError(FocklatError):
    """Coupling parameter sits too close to half a Bessel root."""

    exit_code = 4

    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class TruncationOverflowError(FocklatError):
    """Field amplitude reached the truncation edge; enlarge the space."""

    exit_code = 5


class NumericError(FocklatError):
    """Non-finite values encountered during a computation."""

    exit_code = 6
