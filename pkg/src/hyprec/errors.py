"""Exception types shared across the package."""


class HyprecError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HyprecError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class NonConvergence(HyprecError, ArithmeticError):
    """An iterative computation exhausted its budget before reaching tolerance."""
