"""
Energy Formulas

The closed-form spectrum and its limits. With d = n + 1/2 + (1/2) sqrt(1 + 8Am/hbar^2):

    E = -(1/4) [ gamma hbar/sqrt(2m) d - sqrt(2m)/hbar (A gamma + B)/d ]^2

The bracket is affine in gamma, so E is exactly quadratic in gamma.
"""

import math
from dataclasses import dataclass

from src.errors import DomainError
from src.model import Deformation, PotentialParams, UnitSystem
from src.spectrum.coefficients import stretch_root


@dataclass(frozen=True)
class EnergyBreakdown:
    """Inputs of one closed-form energy, kept for traceability.

    Attributes:
        d: Denominator n + 1/2 + sqrt(1 + 8Am/hbar^2)/2
        kinetic_term: gamma hbar/sqrt(2m) * d
        potential_term: sqrt(2m)/hbar * (A gamma + B)/d
        bracket: kinetic_term - potential_term
        E: -bracket^2 / 4
    """
    d: float
    kinetic_term: float
    potential_term: float
    bracket: float
    E: float


@dataclass(frozen=True)
class CoulombPDMVariants:
    """The A = 0, gamma > 0 limit under both n' conventions.

    Attributes:
        printed: n' = 2N - 1
        consistent: n' = 2N, which is what expanding the general formula gives
    """
    printed: float
    consistent: float


def _check_level(n: int, lowest: int) -> None:
    if int(n) != n or n < lowest:
        raise DomainError(f"level index must be an integer >= {lowest}, got {n}")


def denominator(n: int, units: UnitSystem, params: PotentialParams) -> float:
    return n + 0.5 + 0.5 * stretch_root(params.A, units)


def energy_breakdown(n: int, units: UnitSystem, d: Deformation, params: PotentialParams) -> EnergyBreakdown:
    _check_level(n, 0)
    params.require_bound()
    dn = denominator(n, units, params)
    root_k = math.sqrt(units.kinetic_scale)
    kinetic = d.gamma * root_k * dn
    potential = (params.A * d.gamma + params.B) / (root_k * dn)
    bracket = kinetic - potential
    return EnergyBreakdown(d=dn, kinetic_term=kinetic, potential_term=potential,
                           bracket=bracket, E=-0.25 * bracket ** 2)


def energy_principal(N: int, units: UnitSystem, d: Deformation, params: PotentialParams) -> float:
    """The same spectrum written with the principal quantum number N = n + 1."""
    _check_level(N, 1)
    params.require_bound()
    s = stretch_root(params.A, units)
    two_m = 2.0 * units.mass
    first = d.gamma * units.hbar / (2.0 * math.sqrt(two_m)) * (2 * N - 1 + s)
    second = 2.0 * math.sqrt(two_m) / units.hbar * (params.A * d.gamma + params.B) / (2 * N - 1 + s)
    return -0.25 * (first - second) ** 2


def energy_limit_constant_mass(N: int, params: PotentialParams, units: UnitSystem) -> float:
    """gamma = 0: E = -(1/4) [2 sqrt(2m) B / hbar / (2N - 1 + sqrt(1 + 8Am/hbar^2))]^2."""
    _check_level(N, 1)
    s = stretch_root(params.A, units)
    inner = 2.0 * math.sqrt(2.0 * units.mass) * params.B / units.hbar / (2 * N - 1 + s)
    return -0.25 * inner ** 2


def energy_limit_coulomb(N: int, B: float, units: UnitSystem) -> float:
    """gamma = 0, A = 0: E = -(2m/hbar^2) B^2 / (4 N^2)."""
    _check_level(N, 1)
    if not B > 0:
        raise DomainError(f"B must be positive, got {B}")
    return -(2.0 * units.mass / units.hbar ** 2) * B ** 2 / (4.0 * N ** 2)


def energy_limit_coulomb_pdm(N: int, gamma: float, B: float, units: UnitSystem) -> CoulombPDMVariants:
    """A = 0: gamma B/2 - gamma^2 hbar^2 n'^2/(32m) - 2m B^2/(hbar^2 n'^2), both n' conventions."""
    _check_level(N, 1)
    if not gamma >= 0:
        raise DomainError(f"gamma must be >= 0, got {gamma}")

    def at(n_prime: int) -> float:
        return (
            0.5 * gamma * B
            - gamma ** 2 * units.hbar ** 2 * n_prime ** 2 / (32.0 * units.mass)
            - 2.0 * units.mass * B ** 2 / (units.hbar ** 2 * n_prime ** 2)
        )

    return CoulombPDMVariants(printed=at(2 * N - 1), consistent=at(2 * N))
