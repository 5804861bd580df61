"""Exception types shared across the package."""


class XeopError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(XeopError, ValueError):
    """A model or polynomial parameter set violates its constraints."""


class DomainError(XeopError, ValueError):
    """An evaluation point lies outside the valid domain."""


class AdmissibilityError(ParameterError):
    """Jacobi (alpha, beta, m) fail the weight-positivity conditions."""


class PoleError(XeopError, ArithmeticError):
    """A polynomial denominator vanished where it must not."""


class IndexRangeError(XeopError, ValueError):
    """A quantum number is outside the bound-state range."""


class NonFiniteSampleError(XeopError, ArithmeticError):
    """An integrand or potential returned NaN/inf at a sample point."""


class NoConvergenceError(XeopError, RuntimeError):
    """An iterative procedure failed to converge within its budget."""


class InvalidPartnerError(ParameterError):
    """The shifted parameter set of a SUSY partner is not a valid model."""
