"""
Displaced-Mass Spectra

Bound states of the inverse-square plus Coulomb-like potential V = A/x^2 - B/x
for a particle whose mass is generated by a displacement operator,
m(x) = m (1 + gamma x)^-2: closed-form spectrum, wavefunctions and their
normalization, and an independent finite-difference oracle, orchestrated with
LangGraph and Prefect.
"""

__version__ = "1.0.0"

from src.model import Deformation, PotentialParams, UnitSystem, get_preset
from src.spectrum import SpectrumEntry, energy_analytic, spectrum_levels
from src.wavefunction import build_wavefunction, evaluate_phi
from src.verifier import crosscheck_analytic, solve_numerical_spectrum
from src.workflows import load_config, run, table_coulomb, table_molecule

__all__ = [
    "Deformation",
    "PotentialParams",
    "UnitSystem",
    "get_preset",
    "SpectrumEntry",
    "energy_analytic",
    "spectrum_levels",
    "build_wavefunction",
    "evaluate_phi",
    "crosscheck_analytic",
    "solve_numerical_spectrum",
    "load_config",
    "run",
    "table_coulomb",
    "table_molecule",
]
