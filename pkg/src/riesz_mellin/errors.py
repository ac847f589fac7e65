"""Exception hierarchy shared by all modules."""


class RieszMellinError(ArithmeticError):
    """Base class for numerical failures raised by this package."""


class PoleError(RieszMellinError):
    """Argument lies on (or within the guard radius of) a pole."""


class DomainError(RieszMellinError, ValueError):
    """Argument outside the region where a function is defined here."""


class StripError(DomainError):
    """Mellin variable outside the admissible convergence strip."""


class ConvergenceError(RieszMellinError):
    """A series or quadrature failed to reach its tolerance."""
