"""Exception taxonomy shared by all charvar modules."""

from __future__ import annotations


class CharvarError(Exception):
    """Base class for all charvar errors."""


class ContextError(CharvarError):
    """Operands live in different variable contexts."""


class NotDivisible(CharvarError):
    """Exact polynomial division has no polynomial quotient."""


class NotPolynomial(CharvarError):
    """A factored fraction failed to reduce to a polynomial.

    Either a polynomiality conjecture is falsified or there is an
    implementation bug; the offending denominator factor (or leftover
    Laurent monomial) travels with the exception.
    """

    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class NegativeExponentAtZero(CharvarError):
    """Specializing a variable to 0 where a negative exponent occurs."""


class ConstantTermNotOne(CharvarError):
    """Formal logarithm applied to a series whose constant term is not 1."""


class NonIntegerCoefficient(CharvarError):
    """A computed invariant came out with a non-integer coefficient."""


class KindMismatch(CharvarError):
    """A specialization or check was requested for the wrong invariant kind."""


class UnsupportedGenus(CharvarError):
    """A closed form was requested outside its genus range."""


class CentralElementUnavailable(CharvarError):
    """No central element of the requested order exists in the group."""


class GroupTooLarge(CharvarError):
    """Requested matrix group exceeds the configured element bound."""


class LiftFailure(CharvarError):
    """No consistent cyclotomic lift of a modular character value."""


class NonIntegralCount(CharvarError):
    """A Frobenius-type character sum failed to be a non-negative integer."""
