"""
Presets

Named parameter sets: a diatomic molecule given by spectroscopic constants,
and the atomic-unit Coulomb problem used for the B = 5 table.

The molecule mapping is A = D_e r_e^2, B = 2 D_e r_e, which puts the well
minimum at r_e with depth D_e.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from src.errors import ConfigError, DomainError
from src.model.potential import PotentialParams
from src.model.units import AMU_EV, HBAR_C_EV_ANGSTROM, UnitSystem


@dataclass(frozen=True)
class MoleculePreset:
    """Spectroscopic constants of a diatomic molecule.

    Attributes:
        name: Label
        D_e: Dissociation energy (eV)
        r_e: Equilibrium distance (Angstrom)
        mu: Reduced mass (amu)
    """
    name: str
    D_e: float
    r_e: float
    mu: float

    def __post_init__(self):
        for field_name in ("D_e", "r_e", "mu"):
            if not getattr(self, field_name) > 0:
                raise DomainError(f"{field_name} must be positive")

    def to_params(self) -> PotentialParams:
        return PotentialParams(A=self.D_e * self.r_e ** 2, B=2.0 * self.D_e * self.r_e)

    @classmethod
    def from_params(cls, name: str, params: PotentialParams, mu: float) -> "MoleculePreset":
        """Recover D_e = B^2/(4A) and r_e = 2A/B."""
        if params.A == 0:
            raise DomainError("a molecule needs A > 0")
        params.require_bound()
        return cls(name=name, D_e=params.B ** 2 / (4.0 * params.A), r_e=2.0 * params.A / params.B, mu=mu)

    def units(self) -> UnitSystem:
        return UnitSystem.molecular(self.mu)

    def e0(self, units: Optional[UnitSystem] = None) -> float:
        """Derived energy scale hbar^2/(mu r_e^2)."""
        units = units or self.units()
        return units.hbar ** 2 / (units.mass * self.r_e ** 2)


@dataclass(frozen=True)
class PresetEntry:
    """A registered parameter set."""
    name: str
    params: PotentialParams
    units: UnitSystem
    description: str
    molecule: Optional[MoleculePreset] = None


# Standard CO constants; D_e = 11.2256 eV, r_e = 1.1282 Angstrom reproduce
# the gamma = 0 column of the CO table to ~5e-5 eV.
CO = MoleculePreset(name="CO", D_e=11.2256, r_e=1.1282, mu=6.8606719)

COULOMB_B5 = PotentialParams(A=0.0, B=5.0)

PRESETS: Dict[str, PresetEntry] = {
    "CO": PresetEntry(
        name="CO",
        params=CO.to_params(),
        units=CO.units(),
        description="carbon monoxide, inverse square plus Coulomb (eV, Angstrom, amu)",
        molecule=CO,
    ),
    "coulomb-B5": PresetEntry(
        name="coulomb-B5",
        params=COULOMB_B5,
        units=UnitSystem.atomic(),
        description="Coulomb-like potential A = 0, B = 5 in atomic units",
    ),
}


def get_preset(name: str) -> PresetEntry:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ConfigError(f"unknown preset {name!r} (known: {known})") from None


def list_presets() -> Tuple[str, ...]:
    return tuple(PRESETS)


def units_reference() -> str:
    """Markdown reference of the pinned constants and registered presets."""
    lines = [
        "# Units Reference",
        "",
        "Generated by `units_reference.py`; do not edit by hand.",
        "",
        "## Unit systems",
        "",
        "| mode | hbar | mass | energy | length |",
        "|------|------|------|--------|--------|",
        "| atomic | 1 | 1 | a.u. | a.u. |",
        f"| molecular | hbar*c = {HBAR_C_EV_ANGSTROM!r} eV*Angstrom | mu * {AMU_EV!r} eV | eV | Angstrom |",
        "",
        "## Presets",
        "",
        "| name | A | B | units | description |",
        "|------|---|---|-------|-------------|",
    ]
    for entry in PRESETS.values():
        lines.append(
            f"| {entry.name} | {entry.params.A:.10g} | {entry.params.B:.10g} "
            f"| {entry.units.mode.value} | {entry.description} |"
        )
    lines += ["", "## Molecular constants", ""]
    for entry in PRESETS.values():
        mol = entry.molecule
        if mol is None:
            continue
        lines.append(
            f"- {mol.name}: D_e = {mol.D_e!r} eV, r_e = {mol.r_e!r} Angstrom, "
            f"mu = {mol.mu!r} amu, E0 = hbar^2/(mu r_e^2) = {mol.e0():.4e} eV"
        )
    return "\n".join(lines) + "\n"
