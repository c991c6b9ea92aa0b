"""
Exceptions

Every failure the library raises derives from PDMError. Value-domain failures
also derive from ValueError so generic callers can catch them.
"""

from typing import Any, Optional, Sequence


class PDMError(Exception):
    """Base class for all library errors."""


class DomainError(PDMError, ValueError):
    """An argument lies outside the domain of the operation."""


class SingularityError(DomainError):
    """Evaluation at a singular point, e.g. the mass profile at x = -1/gamma."""


class GridBoundaryError(DomainError):
    """A finite-difference stencil would reach past the end of the grid."""


class PoleError(DomainError):
    """A Gamma-type function was evaluated at one of its poles.

    Attributes:
        argument: The offending argument (a non-positive integer)
        where: Label of the factor that hit the pole
    """

    def __init__(self, argument: float, where: str = "Gamma"):
        self.argument = argument
        self.where = where
        super().__init__(f"{where}: pole at argument {argument:g}")


class ConvergenceError(PDMError):
    """A series or iteration did not converge, or no evaluation branch applies."""


class IntegrationError(ConvergenceError):
    """Quadrature did not reach the requested tolerance.

    Attributes:
        estimate: Best value obtained
        error: Reported absolute error of that value
    """

    def __init__(self, estimate: float, error: float, tol: float):
        self.estimate = estimate
        self.error = error
        self.tol = tol
        super().__init__(
            f"quadrature error {error:.3e} exceeds tolerance {tol:.3e} "
            f"(best estimate {estimate:.12g})"
        )


class ImaginaryExponentError(DomainError):
    """p would be imaginary: E exceeds gamma*(A*gamma + B)."""


class ScatteringRegimeError(DomainError):
    """A bound-state operation received E >= 0."""


class BranchError(PDMError):
    """No sign/root combination satisfies the quantization condition.

    Attributes:
        candidates: Every (p_sign, q_root, imag_sign, a) combination tried
    """

    def __init__(self, message: str, candidates: Optional[Sequence[Any]] = None):
        self.candidates = list(candidates or [])
        if self.candidates:
            dump = "; ".join(str(c) for c in self.candidates)
            message = f"{message} [candidates: {dump}]"
        super().__init__(message)


class UnresolvedBranchError(PDMError):
    """A wavefunction was requested for an entry without resolved branches."""


class NonNormalizableError(PDMError):
    """The wavefunction does not decay fast enough to be normalized."""


class ConfigError(PDMError, ValueError):
    """Invalid run configuration."""


class VerificationError(PDMError):
    """Asserted analytic-versus-numeric agreement failed."""
