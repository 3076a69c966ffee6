"""Exceptions raised by qlaguerre.

Every error derives from :py:class:`QLaguerreError` and from the builtin
exception a caller would otherwise expect for the same situation, so both
``except QLaguerreError`` and ``except ValueError`` style handlers work.
"""


class QLaguerreError(Exception):
    """Base class for all domain errors."""


class NotDivisible(QLaguerreError, ArithmeticError):
    """An exact division has no polynomial quotient."""


class DivisionByZero(QLaguerreError, ZeroDivisionError):
    pass


class PoleAtZero(QLaguerreError, ZeroDivisionError):
    """q = 0 was substituted into a term with a negative q-exponent."""


class NegativeIndex(QLaguerreError, ValueError):
    pass


class NonUnitReciprocal(QLaguerreError, ArithmeticError):
    """The constant term of a truncated series is not invertible."""


class SizeMismatch(QLaguerreError, ValueError):
    pass


class CapExceeded(QLaguerreError, ValueError):
    """An exhaustive enumeration was requested beyond the configured cap."""


class NotInDomain(QLaguerreError, ValueError):
    pass


class PoleAtSample(QLaguerreError, ZeroDivisionError):
    """A formula has a vanishing denominator at the chosen rational point."""


class NotPolynomial(QLaguerreError, ArithmeticError):
    """A closed form left negative q-powers or a non-trivial denominator."""


class TableTooShort(QLaguerreError, IndexError):
    pass


class UnknownMethod(QLaguerreError, TypeError):
    pass
