"""Exception hierarchy shared by every module."""


class WronskyError(Exception):
    """Base class for all library errors."""


class DimensionError(WronskyError, ValueError):
    """Index lists, shapes or sizes do not fit the operation."""


class ShapeError(DimensionError):
    pass


class ArityError(DimensionError):
    pass


class DegreeBoundError(WronskyError, ValueError):
    pass


class TruncationError(WronskyError, ValueError):
    """Requested number of times t_1..t_K is too small for an exact result."""


class CompletenessError(WronskyError, KeyError):
    pass


class SingularMatrixError(WronskyError, ArithmeticError):
    pass


class ClassificationError(WronskyError):
    pass


class NormalizationError(WronskyError, ValueError):
    pass


class NoSolutionError(WronskyError, ArithmeticError):
    pass


class VerificationError(WronskyError, AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class FormatError(WronskyError, ValueError):
    """Malformed JSON input (matrix files, coordinate lists, rationals)."""
