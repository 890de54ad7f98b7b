"""Exception hierarchy for the interpolation library."""


class InterpolationError(Exception):
    """Base class for every error raised by gbinterp."""


class DimensionError(InterpolationError, ValueError):
    """Operands live in rings (or spaces) with different variable counts."""


class ZeroPolynomialError(InterpolationError, ValueError):
    """The zero polynomial has no leading term."""


class NonCofiniteError(InterpolationError, ValueError):
    """The ideal has an infinite staircase (no pure power for some variable)."""


class InvalidDirectionError(InterpolationError, ValueError):
    """A direction vector is zero or a direction set is linearly dependent."""


class ModeError(InterpolationError, ValueError):
    """A condition set does not fit the requested interpolation mode."""


class DuplicateNodeError(InterpolationError, ValueError):
    """Two interpolation nodes share the same point."""


class InconsistentSystemError(InterpolationError):
    """The linear system has no solution.

    ``row`` is the index (in the caller's row order) of the equation whose
    reduced form reads ``0 = c`` with ``c != 0``.
    """

    def __init__(self, message, row):
        super().__init__(message)
        self.row = row


class InternalInvariantError(InterpolationError, RuntimeError):
    """A condition guaranteed by theory failed; indicates a bug."""


class ProblemFileError(InterpolationError, ValueError):
    """A problem or solution file is malformed."""
