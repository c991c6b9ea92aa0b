"""
Model Module

Physical parameters, unit systems, the potential, the mass profile and the
deformed derivative.
"""

from src.model.units import AMU_EV, HBAR_C_EV_ANGSTROM, UnitMode, UnitSystem
from src.model.potential import PotentialParams, potential_minimum, potential_value
from src.model.deformation import (
    Deformation,
    deformed_derivative,
    deformed_derivative_samples,
    kinetic_operator,
    mass_profile,
)
from src.model.presets import (
    CO,
    PRESETS,
    MoleculePreset,
    PresetEntry,
    get_preset,
    list_presets,
    units_reference,
)

__all__ = [
    "AMU_EV",
    "HBAR_C_EV_ANGSTROM",
    "UnitMode",
    "UnitSystem",
    "PotentialParams",
    "potential_minimum",
    "potential_value",
    "Deformation",
    "deformed_derivative",
    "deformed_derivative_samples",
    "kinetic_operator",
    "mass_profile",
    "CO",
    "PRESETS",
    "MoleculePreset",
    "PresetEntry",
    "get_preset",
    "list_presets",
    "units_reference",
]
