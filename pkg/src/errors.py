"""Exception hierarchy for poisson2.

DomainError subclasses are mathematical outcomes (exit code 1 at the CLI);
InputError subclasses are malformed input (exit code 2).
"""

from typing import Optional


class Poisson2Error(Exception):
    """Base class of every error raised on purpose by the library."""


class DomainError(Poisson2Error):
    """A well-formed request that has no answer in this setting."""


class InputError(Poisson2Error, ValueError):
    """A malformed request."""


class InfiniteCodimensionError(DomainError):
    """The Milnor algebra of f is infinite-dimensional."""


class ResonanceError(DomainError):
    """A homological equation hits its resonant degree."""

    def __init__(self, degree: int, message: Optional[str] = None):
        self.degree = degree
        super().__init__(message or f"resonant component at quasidegree {degree} is nonzero")


class NotACocycleError(DomainError):
    """The input of a cocycle reduction is not closed."""

    def __init__(self, degree: int, message: Optional[str] = None):
        self.degree = degree
        super().__init__(message or f"not a cocycle: first failing degree {degree}")


class NonUnitError(DomainError):
    """Division by, or extraction of, a series with zero constant term."""


class SingularLinearPartError(DomainError):
    """A jet of diffeomorphism whose linear part is not invertible."""


class PolySyntaxError(InputError):
    """Polynomial text that does not follow the grammar."""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"syntax error at position {position}: {message}")


class NegativeExponentError(PolySyntaxError):
    """An exponent with a minus sign."""

    def __init__(self, position: int):
        super().__init__(position, "negative exponents are not allowed")


class WeightsError(InputError):
    """Weights that are not a pair of positive integers."""


class ZeroPolynomialError(InputError):
    """An operation that needs a nonzero polynomial received zero."""


class GermError(InputError):
    """A (f, h, weights) triple that violates the germ invariants."""


class InvalidLabelError(InputError):
    """A catalog label outside the simple-germ list."""


class ConstantTermError(DomainError):
    """A series that must vanish at the origin does not."""


class JetError(InputError):
    """A jet that does not fix the origin or breaks the quasidegree filtration."""
