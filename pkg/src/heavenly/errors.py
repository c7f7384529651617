"""Exception hierarchy shared by every module of the package."""


class HeavenlyError(Exception):
    """Base class for all errors raised by :mod:`heavenly`."""


class DeclarationError(HeavenlyError, ValueError):
    """A symbol, coordinate or function is not declared where it is used."""


class EvaluationError(HeavenlyError, ArithmeticError):
    """Exact evaluation failed (unassigned symbol or division by zero)."""


class ProlongationError(HeavenlyError, ValueError):
    """A field cannot be prolonged or applied at the requested order."""


class SingularMatrixError(HeavenlyError, ArithmeticError):
    """The linear system is singular (rank deficient but consistent)."""


class InconsistentSystemError(HeavenlyError, ArithmeticError):
    """The linear system has no solution."""


class ParseError(HeavenlyError, ValueError):
    """Syntax or resolution error in the expression language."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at offset {position}"
        super().__init__(message)
        self.position = position


class UnknownSuiteError(HeavenlyError, KeyError):
    """Requested verification suite is not registered."""
