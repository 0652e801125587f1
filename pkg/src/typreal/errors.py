"""Exception types raised by the library."""


class DomainError(ValueError):
    """Argument outside the region where a formula is defined."""


class DegreeError(ValueError):
    """Invalid polynomial degree or matrix size."""


class ParityError(ValueError):
    """Operation only defined for one parity of the degree."""


class NumericalError(RuntimeError):
    """A numerical procedure failed a guaranteed internal condition."""


class BracketError(NumericalError):
    """Root bracket endpoints have the same sign, or bisection did not converge."""
