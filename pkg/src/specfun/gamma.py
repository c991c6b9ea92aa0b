"""
Gamma-Type Functions

log|Gamma|, Gamma, Beta and the Pochhammer symbol. Poles are never silently
mapped to infinities: evaluating Gamma at a non-positive integer raises
PoleError carrying the argument.
"""

import math

import numpy as np
from scipy import special

from src.errors import DomainError, PoleError

_POLE_TOL = 1e-9


def is_pole(x: float) -> bool:
    """True when x is (numerically) a non-positive integer."""
    return x <= _POLE_TOL and abs(x - round(x)) < _POLE_TOL


def log_gamma(x: float) -> float:
    """log|Gamma(x)|; negative non-integer arguments go through reflection.

    Raises:
        PoleError: x is a non-positive integer
    """
    if is_pole(x):
        raise PoleError(x, "Gamma")
    return float(special.gammaln(x))


def gamma_sign(x: float) -> float:
    if is_pole(x):
        raise PoleError(x, "Gamma")
    return float(special.gammasgn(x))


def gamma(x: float) -> float:
    """Gamma(x), possibly +-inf for large arguments."""
    log_value = log_gamma(x)
    sign = gamma_sign(x)
    if log_value > 709.0:
        return sign * math.inf
    return sign * math.exp(log_value)


def beta(r: float, r2: float) -> float:
    """B(r, r2) = Gamma(r) Gamma(r2) / Gamma(r + r2).

    A pole in the denominator alone makes B vanish; a pole in either
    numerator factor raises PoleError.
    """
    if is_pole(r):
        raise PoleError(r, "Beta")
    if is_pole(r2):
        raise PoleError(r2, "Beta")
    if is_pole(r + r2):
        return 0.0
    log_value = log_gamma(r) + log_gamma(r2) - log_gamma(r + r2)
    sign = gamma_sign(r) * gamma_sign(r2) * gamma_sign(r + r2)
    if log_value > 709.0:
        return sign * math.inf
    return sign * math.exp(log_value)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1."""
    if k < 0 or int(k) != k:
        raise DomainError(f"k must be a non-negative integer, got {k}")
    return float(np.prod(a + np.arange(int(k), dtype=float)))
