"""Exception hierarchy shared by the library and the CLI."""


class SineBasisError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SineBasisError, ValueError):
    """Arguments outside the domain an operation is defined on."""


class UnsupportedCaseError(SineBasisError):
    """A well-formed request the library deliberately does not handle."""


class ConstraintViolation(SineBasisError, ValueError):
    """Parameters fall off the manifold on which a closed form holds."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


class IntegrationError(SineBasisError, ArithmeticError):
    """Quadrature hit a non-finite integrand value."""

    def __init__(self, message, abscissa=None):
        super().__init__(message)
        self.abscissa = abscissa


class SolverError(SineBasisError, ArithmeticError):
    """The eigensolver failed to converge or to meet its residual contract."""

    def __init__(self, message, iterations=None):
        super().__init__(message)
        self.iterations = iterations
