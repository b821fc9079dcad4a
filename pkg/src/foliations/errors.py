"""Exception types shared across the package."""

from __future__ import annotations


class FoliationsError(Exception):
    """Base class for all package-specific errors."""


class AmbientMismatch(FoliationsError):
    """Operands live in polynomial rings with different variable counts."""


class ExponentOverflow(FoliationsError):
    """A monomial exceeded the packed-exponent degree limit."""


class NotDivisible(FoliationsError):
    """Exact polynomial division failed.

    Carries the slot index (for 1-form division; None for plain
    polynomials) and the nonzero remainder that witnesses the failure.
    """

    def __init__(self, message: str, slot=None, remainder=None):
        super().__init__(message)
        self.slot = slot
        self.remainder = remainder


class BudgetExceeded(FoliationsError):
    """A Groebner computation ran out of its configured resource budget.

    This signals "inconclusive", never a wrong answer.
    """


class LogDataError(FoliationsError):
    """Logarithmic form data violates a degree or exponent constraint."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(FoliationsError):
    """Syntax error with source position and the expected token set."""

    def __init__(self, message: str, line: int, col: int, expected=()):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(expected)
