"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end.
"""

__all__ = [
    "FrameError",
    "InvalidArgument",
    "NonFiniteInput",
    "DimensionMismatch",
    "NodeMismatch",
    "ParseError",
    "NotUnitary",
    "NotOrthonormal",
    "GridMismatch",
    "GridTooCoarse",
    "NotOrthonormalFamily",
    "ColumnNotUnit",
    "EmptyColumn",
    "NotAFrame",
    "NotConnected",
    "NotEquivalent",
    "NotParseval",
    "NumericalFailure",
    "ConvergenceFailure",
    "NotHermitian",
    "NotPositive",
    "NotInvertible",
    "DegenerateCanonicalForm",
]


class FrameError(Exception):
    """Base class for all errors raised by frameorbit."""

    exit_code = 5


# -- bad input (exit 2) -----------------------------------------------------


class InvalidArgument(FrameError, ValueError):
    exit_code = 2


class NonFiniteInput(InvalidArgument):
    pass


class DimensionMismatch(InvalidArgument):
    pass


class NodeMismatch(InvalidArgument):
    """Two frames do not share the same nodes and weights."""


class ParseError(InvalidArgument):
    pass


class NotUnitary(InvalidArgument):
    pass


class NotOrthonormal(InvalidArgument):
    pass


class GridMismatch(InvalidArgument):
    pass


class GridTooCoarse(InvalidArgument):
    pass


class NotOrthonormalFamily(InvalidArgument):
    pass


class ColumnNotUnit(InvalidArgument):
    pass


class EmptyColumn(InvalidArgument):
    pass


# -- frame condition (exit 3) ----------------------------------------------


class NotAFrame(FrameError, ValueError):
    """The lower frame bound is not bounded away from zero."""

    exit_code = 3


# -- orbit relations (exit 4) ----------------------------------------------


class NotConnected(FrameError):
    """No invertible operator maps one frame onto the other."""

    exit_code = 4


class NotEquivalent(NotConnected):
    """Two Parseval frames are not unitarily equivalent."""


class NotParseval(FrameError, ValueError):
    exit_code = 4


# -- numerical failures (exit 5) -------------------------------------------


class NumericalFailure(FrameError, ArithmeticError):
    exit_code = 5


class ConvergenceFailure(NumericalFailure):
    pass


class NotHermitian(NumericalFailure):
    pass


class NotPositive(NumericalFailure):
    pass


class NotInvertible(NumericalFailure):
    pass


class DegenerateCanonicalForm(NumericalFailure):
    """The canonical-form convention cannot break a near tie stably."""
