"""Exception and warning types raised by symtensor."""


class SymTensorError(Exception):
    """Base class for all library errors."""


class ShapeError(SymTensorError, ValueError):
    """Matrix orders, partition weights or index maps do not fit together."""


class SizeLimitError(SymTensorError, ValueError):
    """Input exceeds the desk-scale limits of a factorial-time routine."""


class MethodDisagreementError(SymTensorError, ArithmeticError):
    """Two independent evaluation routes returned different values."""


class SingularGramError(SymTensorError, ArithmeticError):
    """The Gram block of the chosen basis index set is not positive definite."""


class DegenerateOrderWarning(UserWarning):
    """The derivative order exceeds the polynomial degree; the result is an exact zero."""
