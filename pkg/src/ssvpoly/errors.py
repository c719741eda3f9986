"""Exception hierarchy."""


class SSVError(Exception):
    """Base class for all library errors."""


class MalformedScalarError(SSVError, ZeroDivisionError):
    """A scalar with a zero denominator was requested."""


class DivergentLimitError(SSVError):
    """A q-limit does not exist."""


class SpecializationPoleError(SSVError, ZeroDivisionError):
    """A substitution sends a denominator to zero."""


class RankMismatchError(SSVError, ValueError):
    """Operands of different rank were combined."""


class NotDivisibleError(SSVError, ArithmeticError):
    """An exact division left a remainder."""


class MalformedMetaplecticError(SSVError, ValueError):
    """A lattice element is not in the rescaled lattice it was used with."""


class DomainError(SSVError, ValueError):
    """An argument is outside the domain of an operation."""


class InternalInconsistencyError(SSVError, AssertionError):
    """An identity that must hold was violated."""
