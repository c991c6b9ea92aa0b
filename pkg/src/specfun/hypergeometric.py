"""
Gauss Hypergeometric Function

2F1(a, b; c; z) on the real axis with an explicit, reported evaluation branch:

- POLYNOMIAL: a or b is a non-positive integer; finite sum, any z
- SERIES: |z| < 1, direct power series
- PFAFF: -2 <= z < -1/2 (or z < -2 with integer a - b), series in z/(z-1)
- GAUSS_SUM: z = 1 with c - a - b > 0
- CONTINUATION: z < -2 with a - b non-integer, 1/z connection formula

Everything else (non-terminating z > 1) raises ConvergenceError. So does
z < -2 with integer a - b once the Pfaff series in z/(z-1) needs more than
SERIES_MAX_TERMS terms; that ratio tends to 1 as z -> -infinity, and the
integer-gap connection formula (with digamma terms) is not implemented.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

import numpy as np

from src.errors import ConvergenceError, DomainError, PoleError
from src.specfun.gamma import gamma_sign, is_pole, log_gamma

SERIES_TOL = 1e-16
SERIES_MAX_TERMS = 10_000

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class HypParams:
    """Parameters a, b, c of 2F1."""
    a: float
    b: float
    c: float

    def terminating_degree(self) -> Optional[int]:
        """n when a or b equals -n (the smaller such n), else None."""
        degrees = [int(round(-x)) for x in (self.a, self.b) if is_pole(x)]
        return min(degrees) if degrees else None


class Branch(str, Enum):
    POLYNOMIAL = "polynomial"
    SERIES = "series"
    PFAFF = "pfaff"
    GAUSS_SUM = "gauss-sum"
    CONTINUATION = "continuation"


@dataclass(frozen=True)
class HypergeometricValue:
    value: ArrayLike
    branch: Branch


@dataclass(frozen=True)
class AsymptoticSplit:
    """Leading |z| -> infinity terms: coeff1 (-z)^exponent1 + coeff2 (-z)^exponent2."""
    coeff1: float
    exponent1: float
    coeff2: float
    exponent2: float


def _gamma_ratio(numerator: Iterable[float], denominator: Iterable[float], strict: bool) -> float:
    """prod Gamma(numerator) / prod Gamma(denominator).

    A denominator pole gives 0 unless strict, in which case it raises like
    a numerator pole does.
    """
    log_value, sign = 0.0, 1.0
    for x in numerator:
        log_value += log_gamma(x)
        sign *= gamma_sign(x)
    for x in denominator:
        if is_pole(x):
            if strict:
                raise PoleError(x, "Gamma")
            return 0.0
        log_value -= log_gamma(x)
        sign *= gamma_sign(x)
    return sign * math.exp(log_value) if log_value < 709.0 else sign * math.inf


def _polynomial(p: HypParams, z: np.ndarray, degree: int) -> np.ndarray:
    total = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(degree):
        # (c)_k only vanishes when c + k hits zero before the sum terminates.
        if abs(p.c + k) < 1e-12:
            raise PoleError(p.c, "2F1 lower parameter")
        term = term * ((p.a + k) * (p.b + k) / ((p.c + k) * (k + 1))) * z
        total = total + term
    return total


def _series(p: HypParams, z: np.ndarray) -> np.ndarray:
    if np.any(np.abs(z) >= 1):
        raise DomainError("power series needs |z| < 1")
    total = np.ones_like(z)
    term = np.ones_like(z)
    for k in range(SERIES_MAX_TERMS):
        term = term * ((p.a + k) * (p.b + k) / ((p.c + k) * (k + 1))) * z
        total = total + term
        if np.all(np.abs(term) <= SERIES_TOL * np.abs(total)):
            return total
    raise ConvergenceError(f"2F1 series did not converge in {SERIES_MAX_TERMS} terms for {p}")


def _pfaff(p: HypParams, z: float) -> float:
    w = z / (z - 1.0)
    inner = _series(HypParams(p.a, p.c - p.b, p.c), np.asarray(w, dtype=float))
    return float((1.0 - z) ** (-p.a) * inner)


def _connection(p: HypParams, strict: bool) -> AsymptoticSplit:
    coeff1 = _gamma_ratio([p.b - p.a, p.c], [p.b, p.c - p.a], strict)
    coeff2 = _gamma_ratio([p.a - p.b, p.c], [p.a, p.c - p.b], strict)
    return AsymptoticSplit(coeff1=coeff1, exponent1=-p.a, coeff2=coeff2, exponent2=-p.b)


def hyp2f1_asymptotic_split(p: HypParams) -> AsymptoticSplit:
    """Coefficients of the (-z)^-a and (-z)^-b terms for |z| -> infinity.

    Depends on a, b, c only; z enters through recombine_split(split, p, z).

    coeff1 = Gamma(b-a) Gamma(c) / (Gamma(b) Gamma(c-a))
    coeff2 = Gamma(a-b) Gamma(c) / (Gamma(a) Gamma(c-b))

    Raises:
        PoleError: any of the seven Gamma arguments is a non-positive integer.
            This always happens for a terminating a = -n, and for integer a - b.
    """
    for label, x in (("b-a", p.b - p.a), ("a-b", p.a - p.b), ("c", p.c), ("a", p.a),
                     ("b", p.b), ("c-a", p.c - p.a), ("c-b", p.c - p.b)):
        if is_pole(x):
            raise PoleError(x, f"Gamma({label})")
    return _connection(p, strict=True)


def recombine_split(split: AsymptoticSplit, p: HypParams, z: float) -> float:
    """Full 1/z connection formula built on the asymptotic coefficients.

    2F1(a,b;c;z) = coeff1 (-z)^-a 2F1(a, a-c+1; a-b+1; 1/z)
                 + coeff2 (-z)^-b 2F1(b, b-c+1; b-a+1; 1/z),  z < -1
    """
    if not z < -1:
        raise DomainError("the 1/z connection formula is used for z < -1")
    u = np.asarray(1.0 / z)
    first = _series(HypParams(p.a, p.a - p.c + 1.0, p.a - p.b + 1.0), u)
    second = _series(HypParams(p.b, p.b - p.c + 1.0, p.b - p.a + 1.0), u)
    return float(
        split.coeff1 * (-z) ** split.exponent1 * first
        + split.coeff2 * (-z) ** split.exponent2 * second
    )


def hyp2f1(p: HypParams, z: ArrayLike) -> HypergeometricValue:
    """Evaluate 2F1(a, b; c; z) and report which branch produced the value.

    Args:
        p: Parameters a, b, c
        z: Real argument. Arrays are accepted on the polynomial branch and,
            when every |z| < 1, on the series branch.

    Returns:
        HypergeometricValue with the value and the branch used

    Raises:
        PoleError: c hits a pole before the series terminates
        ConvergenceError: no branch applies

    Example:
        >>> round(hyp2f1(HypParams(1, 1, 2), 0.5).value, 12)  # 2 ln 2
        1.38629436112
    """
    zs = np.asarray(z, dtype=float)
    scalar = zs.ndim == 0

    def wrap(value, branch):
        value = np.asarray(value, dtype=float)
        return HypergeometricValue(value=float(value) if scalar else value, branch=branch)

    degree = p.terminating_degree()
    if degree is not None:
        return wrap(_polynomial(p, zs, degree), Branch.POLYNOMIAL)
    if is_pole(p.c):
        raise PoleError(p.c, "2F1 lower parameter")
    if np.all(np.abs(zs) < 1) and (not scalar or zs >= -0.5):
        return wrap(_series(p, zs), Branch.SERIES)
    if not scalar:
        raise DomainError("array arguments need the polynomial branch or |z| < 1")

    x = float(zs)
    if x == 1.0:
        if p.c - p.a - p.b > 0:
            return wrap(_gamma_ratio([p.c, p.c - p.a - p.b], [p.c - p.a, p.c - p.b], strict=False),
                        Branch.GAUSS_SUM)
        raise ConvergenceError("2F1 diverges at z = 1 when c - a - b <= 0")
    if x > 1.0:
        raise ConvergenceError(f"no evaluation branch for non-terminating 2F1 at z = {x:g} > 1")
    integer_gap = abs((p.a - p.b) - round(p.a - p.b)) < 1e-9
    if x < -2.0 and not integer_gap:
        return wrap(recombine_split(_connection(p, strict=False), p, x), Branch.CONTINUATION)
    return wrap(_pfaff(p, x), Branch.PFAFF)
