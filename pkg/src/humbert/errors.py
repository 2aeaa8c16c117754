class HumbertError(Exception):
    """Base class for all evaluation errors."""


class DomainError(HumbertError, ValueError):
    """Arguments lie outside the domain of the requested representation."""


class PoleError(DomainError):
    """A parameter sits on a pole of a gamma factor or Pochhammer denominator."""


class NonFiniteError(HumbertError, ArithmeticError):
    """The computed value overflowed or is otherwise not finite."""
