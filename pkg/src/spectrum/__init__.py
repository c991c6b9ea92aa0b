"""
Spectrum Module

Coefficient mapping, exponents, hypergeometric parameters, branch selection,
the closed-form energies with their limits, and the physicality rule.
"""

from src.spectrum.coefficients import (
    DerivedCoefficients,
    PQParameters,
    QRoot,
    equation_identities,
    hypergeometric_parameters,
    ode_coefficients,
    pq_parameters,
)
from src.spectrum.formulas import (
    CoulombPDMVariants,
    EnergyBreakdown,
    energy_breakdown,
    energy_limit_constant_mass,
    energy_limit_coulomb,
    energy_limit_coulomb_pdm,
    energy_principal,
)
from src.spectrum.validity import ValidityRule, classify_physical, validity_rule
from src.spectrum.branches import BranchRecord, select_branches
from src.spectrum.levels import SpectrumEntry, energy_analytic, spectrum_levels, wavefunction_parameters

__all__ = [
    "DerivedCoefficients",
    "PQParameters",
    "QRoot",
    "equation_identities",
    "hypergeometric_parameters",
    "ode_coefficients",
    "pq_parameters",
    "CoulombPDMVariants",
    "EnergyBreakdown",
    "energy_breakdown",
    "energy_limit_constant_mass",
    "energy_limit_coulomb",
    "energy_limit_coulomb_pdm",
    "energy_principal",
    "ValidityRule",
    "classify_physical",
    "validity_rule",
    "BranchRecord",
    "select_branches",
    "SpectrumEntry",
    "energy_analytic",
    "spectrum_levels",
    "wavefunction_parameters",
]
