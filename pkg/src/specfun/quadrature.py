"""
Adaptive Quadrature

Thin layer over scipy.integrate.quad that turns a missed tolerance into an
IntegrationError carrying the best estimate. Infinite upper limits use quad's
own tail transformation; algebraic endpoint singularities t^alpha (1-t)^beta
can be handed to quad's 'alg' weight.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from scipy import integrate as sp_integrate

from src.errors import IntegrationError


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float


def integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    endpoint_powers: Optional[Tuple[float, float]] = None,
    limit: int = 200,
) -> QuadResult:
    """Adaptive estimate of the integral of f over [lo, hi].

    Args:
        f: Integrand, finite on the open interval
        lo: Lower limit
        hi: Upper limit, may be numpy.inf
        tol: Absolute tolerance the reported error must meet
        endpoint_powers: (alpha, beta) to integrate f(t) (t-lo)^alpha (hi-t)^beta
            with quad's algebraic weight; both limits must then be finite
        limit: Maximum number of subintervals

    Returns:
        QuadResult with the value and quad's error estimate

    Raises:
        IntegrationError: the error estimate exceeds tol
    """
    kwargs = dict(epsabs=tol, epsrel=0.0, limit=limit)
    if endpoint_powers is not None:
        kwargs.update(weight="alg", wvar=endpoint_powers)
    value, error = sp_integrate.quad(f, lo, hi, **kwargs)
    if not error <= tol:
        raise IntegrationError(value, error, tol)
    return QuadResult(value=float(value), error=float(error))
