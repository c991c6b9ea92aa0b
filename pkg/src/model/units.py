"""
Unit Systems

Two unit conventions are supported:

- atomic: hbar = m = 1, lengths and energies dimensionless
- molecular: energies in eV, lengths in Angstrom, masses in amu

Molecular quantities are carried as hbar*c (eV*Angstrom) and m*c^2 (eV); every
formula in the package depends on hbar and m only through hbar^2/m, so the
factors of c cancel.
"""

from dataclasses import dataclass
from enum import Enum

from src.errors import DomainError


HBAR_C_EV_ANGSTROM = 1973.269804
"""hbar*c in eV*Angstrom."""

AMU_EV = 931.49410242e6
"""1 amu * c^2 in eV."""


class UnitMode(str, Enum):
    ATOMIC = "atomic"
    MOLECULAR = "molecular"


@dataclass(frozen=True)
class UnitSystem:
    """Values of hbar and the bare mass m in a given convention.

    Attributes:
        hbar: Reduced Planck constant (1 in atomic mode, eV*Angstrom in molecular mode)
        mass: Bare mass (1 in atomic mode, eV in molecular mode)
        mode: Which convention the numbers belong to
    """
    hbar: float
    mass: float
    mode: UnitMode = UnitMode.ATOMIC

    def __post_init__(self):
        if not self.hbar > 0:
            raise DomainError(f"hbar must be positive, got {self.hbar}")
        if not self.mass > 0:
            raise DomainError(f"mass must be positive, got {self.mass}")

    @classmethod
    def atomic(cls, mass: float = 1.0) -> "UnitSystem":
        return cls(hbar=1.0, mass=mass, mode=UnitMode.ATOMIC)

    @classmethod
    def molecular(cls, mu_amu: float) -> "UnitSystem":
        """Molecular units for a reduced mass given in amu."""
        if not mu_amu > 0:
            raise DomainError(f"reduced mass must be positive, got {mu_amu}")
        return cls(hbar=HBAR_C_EV_ANGSTROM, mass=mu_amu * AMU_EV, mode=UnitMode.MOLECULAR)

    @property
    def kinetic_scale(self) -> float:
        """hbar^2 / (2m), the coefficient of the kinetic operator."""
        return self.hbar ** 2 / (2.0 * self.mass)

    @property
    def energy_unit(self) -> str:
        return "eV" if self.mode is UnitMode.MOLECULAR else "a.u."

    @property
    def length_unit(self) -> str:
        return "Angstrom" if self.mode is UnitMode.MOLECULAR else "a.u."
