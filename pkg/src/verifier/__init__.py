"""
Verifier Module

Independent finite-difference oracle for the stationary equation: grids,
symmetric tridiagonal Hamiltonians, Sturm counting, refinement with
extrapolation, and the cross-check against the closed form.
"""

from src.verifier.grid import DEFAULT_POINTS, DEFAULT_REFINEMENTS, DEFAULT_X_MIN, X_MIN_FRACTION, GridSpec, default_grid
from src.verifier.hamiltonian import DiscreteHamiltonian, DiscretizationMethod, build_discrete_hamiltonian
from src.verifier.sturm import eigenvector, lowest_eigenvalues, sturm_count
from src.verifier.solver import NumericalLevel, NumericalSpectrum, boundary_sensitivity, solve_numerical_spectrum
from src.verifier.crosscheck import CrosscheckReport, CrosscheckRow, Verdict, crosscheck_analytic

__all__ = [
    "DEFAULT_POINTS",
    "DEFAULT_REFINEMENTS",
    "DEFAULT_X_MIN",
    "X_MIN_FRACTION",
    "GridSpec",
    "default_grid",
    "DiscreteHamiltonian",
    "DiscretizationMethod",
    "build_discrete_hamiltonian",
    "eigenvector",
    "lowest_eigenvalues",
    "sturm_count",
    "NumericalLevel",
    "NumericalSpectrum",
    "boundary_sensitivity",
    "solve_numerical_spectrum",
    "CrosscheckReport",
    "CrosscheckRow",
    "Verdict",
    "crosscheck_analytic",
]
