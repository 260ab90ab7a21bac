"""Exception hierarchy shared by all quadvort modules."""


class QuadvortError(Exception):
    """Base class for all library errors."""


class GammaPoleError(QuadvortError):
    """Gamma function requested at a non-positive integer."""


class HyperParameterError(QuadvortError):
    """No valid evaluation path for the given hypergeometric parameters."""


class HyperDivergenceError(QuadvortError):
    """Hypergeometric series diverges at the requested argument (x = 1)."""


class LogSingularityError(QuadvortError):
    """Evaluation refused inside the logarithmic boundary layer at x = 1."""


class SeriesConvergenceError(QuadvortError):
    """Truncated series failed to reach the requested tolerance."""


class QuadratureError(QuadvortError):
    """Adaptive quadrature failed to converge."""


class MapDomainError(QuadvortError):
    """Division by zero in the omega <-> x reparametrization."""


class RegimeUnsupportedError(QuadvortError):
    """Profile lies in a parameter regime the analysis does not cover."""


class BracketingError(QuadvortError):
    """Root bracketing failed; carries scan diagnostics."""

    def __init__(self, message, scan_x=None, scan_values=None):
        super().__init__(message)
        self.scan_x = scan_x
        self.scan_values = scan_values


class EigenvalueGateError(QuadvortError):
    """Spectral construction requested at a point that is not an eigenvalue."""


class SingularSetError(QuadvortError):
    """Spectral variable collides with the singular set."""


class DegenerateFieldError(QuadvortError):
    """Angular velocity field loses its sign on the disc."""


class NonReturnError(QuadvortError):
    """Trajectory failed to return to its Poincare ray within the period bound."""
