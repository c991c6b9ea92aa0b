"""
Coefficient Mapping

With z = 1 + gamma x the stationary equation becomes

    phi'' + phi'/z + [a1/z^2 + a2/(z(1-z)) + a3/(1-z)^2] phi = 0

and phi = z^p (1-z)^q psi reduces it to the hypergeometric equation when
p^2 = M[gamma(A gamma + B) - E] and q^2 - q = A M gamma^2.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from src.errors import DomainError, ImaginaryExponentError, ScatteringRegimeError
from src.model import Deformation, PotentialParams, UnitSystem
from src.specfun import HypParams


class QRoot(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class DerivedCoefficients:
    """M = 2m/(gamma^2 hbar^2) and the dimensionless a1, a2, a3."""
    M: float
    a1: float
    a2: float
    a3: float


@dataclass(frozen=True)
class PQParameters:
    """Exponents of the z^p (1-z)^q factorization.

    Attributes:
        p_abs: sqrt(M[gamma(A gamma + B) - E])
        q_upper, q_lower: the two roots (1 +- sqrt(1 + 4 A M gamma^2)) / 2
        p, q: the values under the requested branch
    """
    p_abs: float
    q_upper: float
    q_lower: float
    p: float
    q: float


def _mass_factor(units: UnitSystem, d: Deformation) -> float:
    if d.gamma == 0:
        raise DomainError("M = 2m/(gamma^2 hbar^2) is undefined at gamma = 0; use the limit formulas")
    return 2.0 * units.mass / (d.gamma ** 2 * units.hbar ** 2)


def ode_coefficients(units: UnitSystem, d: Deformation, params: PotentialParams, E: float) -> DerivedCoefficients:
    """a1 = M[E - gamma(A gamma + B)], a2 = -gamma M (2A gamma + B), a3 = -A M gamma^2."""
    M = _mass_factor(units, d)
    g, A, B = d.gamma, params.A, params.B
    return DerivedCoefficients(
        M=M,
        a1=M * (E - g * (A * g + B)),
        a2=-g * M * (2.0 * A * g + B),
        a3=-A * M * g ** 2,
    )


def pq_parameters(
    units: UnitSystem,
    d: Deformation,
    params: PotentialParams,
    E: float,
    p_sign: int = -1,
    q_root: QRoot = QRoot.UPPER,
) -> PQParameters:
    """Magnitude of p, both q roots, and the pair selected by (p_sign, q_root).

    Raises:
        ImaginaryExponentError: E > gamma(A gamma + B)
    """
    M = _mass_factor(units, d)
    g, A, B = d.gamma, params.A, params.B
    p_squared = M * (g * (A * g + B) - E)
    if p_squared < 0:
        raise ImaginaryExponentError(f"p is imaginary: E = {E:g} exceeds gamma(A gamma + B) = {g * (A * g + B):g}")
    radical = math.sqrt(1.0 + 4.0 * A * M * g ** 2)
    p_abs = math.sqrt(p_squared)
    q_upper, q_lower = 0.5 * (1.0 + radical), 0.5 * (1.0 - radical)
    return PQParameters(
        p_abs=p_abs,
        q_upper=q_upper,
        q_lower=q_lower,
        p=math.copysign(p_abs, p_sign),
        q=q_upper if q_root is QRoot.UPPER else q_lower,
    )


def imaginary_term(M: float, E: float) -> float:
    """sqrt(-M E), the real value of i sqrt(M E) up to sign, for E < 0."""
    if not E < 0:
        raise ScatteringRegimeError(f"bound-state parameters need E < 0, got {E:g}")
    return math.sqrt(-M * E)


def hypergeometric_parameters(p: float, q: float, M: float, E: float, imag_sign: int = 1) -> HypParams:
    """a = p + q + s sqrt(-ME), b = p + q - s sqrt(-ME), c = 1 + 2|p|.

    c takes the positive radical, which keeps c > 1.
    """
    root = imaginary_term(M, E)
    return HypParams(
        a=p + q + imag_sign * root,
        b=p + q - imag_sign * root,
        c=1.0 + 2.0 * abs(p),
    )


def equation_identities(p: float, q: float, coeffs: DerivedCoefficients) -> Tuple[float, float]:
    """(a + b, a b) required by the reduced equation: (2p + 2q, 2pq + q - a2)."""
    return 2.0 * p + 2.0 * q, 2.0 * p * q + q - coeffs.a2


def stretch_root(A: float, units: UnitSystem) -> float:
    """sqrt(1 + 8 A m / hbar^2)."""
    return math.sqrt(1.0 + 8.0 * A * units.mass / units.hbar ** 2)
