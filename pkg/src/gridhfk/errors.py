"""Exception hierarchy for gridhfk.

Every error raised on purpose by the library derives from GridError, so
callers (and the CLI) can distinguish validation problems from bugs.
"""


class GridError(Exception):
    """Base class for all gridhfk errors."""


class SizeMismatch(GridError):
    """Marker row count does not match the declared grid size."""


class NotPermutation(GridError):
    """A marker set repeats or skips a row index."""


class MarkerCollision(GridError):
    """An X and an O occupy the same cell."""


class MultiComponent(GridError):
    """The grid encodes a link with more than one component."""


class IllegalCommutation(GridError):
    """The two marker spans interleave, so the rows/columns cannot commute."""


class NoSuchPattern(GridError):
    """The requested (de)stabilization pattern is not present at the target cell."""


class OutOfRange(GridError):
    """A row/column index falls outside 1..n."""


class CornerConditionUnmet(GridError):
    """Connected sum requires an X in the upper-right / O in the lower-left corner."""


class DimensionMismatch(GridError):
    """Linear algebra operands have incompatible shapes."""


class BudgetExceeded(GridError):
    """Estimated slice size exceeds the configured generator budget."""


class DivisionInexact(GridError):
    """An exact polynomial division left a remainder; signals a grading bug."""


class AsymmetricResult(GridError):
    """The Alexander polynomial came out asymmetric; signals a grading bug."""


class NotACycle(GridError):
    """class_vanishes was handed a chain whose differential is nonzero."""


class SlMismatch(GridError):
    """The two pipeline inputs have different self-linking numbers."""
