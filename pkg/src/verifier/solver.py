"""
Numerical Spectrum

Lowest bound levels of the discrete Hamiltonian on successive grid
refinements, Richardson-extrapolated across the last two (second-order
stencil: E_ext = E_h/2 + (E_h/2 - E_h)/3).
"""

from dataclasses import dataclass
from typing import List, Tuple

from prefect.logging import get_logger

from src.model import Deformation, PotentialParams, UnitSystem
from src.verifier.grid import GridSpec
from src.verifier.hamiltonian import DiscretizationMethod, build_discrete_hamiltonian
from src.verifier.sturm import BISECTION_TOL, lowest_eigenvalues

logger = get_logger(__name__)


@dataclass(frozen=True)
class NumericalLevel:
    """One extrapolated level.

    Attributes:
        index: 0-based level index
        E: Extrapolated energy
        convergence: |E(h) - E(h/2)| on the two finest grids
        raw: Unextrapolated energies, coarsest grid first
    """
    index: int
    E: float
    convergence: float
    raw: Tuple[float, ...]


@dataclass(frozen=True)
class NumericalSpectrum:
    levels: Tuple[NumericalLevel, ...]
    grid: GridSpec
    method: DiscretizationMethod
    requested: int

    @property
    def energies(self) -> List[float]:
        return [level.E for level in self.levels]

    @property
    def complete(self) -> bool:
        return len(self.levels) == self.requested


def solve_numerical_spectrum(
    units: UnitSystem,
    d: Deformation,
    params: PotentialParams,
    grid: GridSpec,
    k: int,
    method: DiscretizationMethod = DiscretizationMethod.LOG_COORDINATE,
    tol: float = BISECTION_TOL,
) -> NumericalSpectrum:
    """Up to k lowest levels with E < 0.

    When fewer than k bound states exist on every grid, the ones found are
    returned and a warning is logged.
    """
    per_grid = []
    for level in range(grid.refinements):
        H = build_discrete_hamiltonian(units, d, params, grid, level=level, method=method)
        per_grid.append(lowest_eigenvalues(H, k, tol=tol))

    found = min(len(values) for values in per_grid)
    levels = []
    for i in range(found):
        coarse, fine = per_grid[-2][i], per_grid[-1][i]
        extrapolated = fine + (fine - coarse) / 3.0
        if not extrapolated < 0:
            break
        levels.append(NumericalLevel(
            index=i,
            E=float(extrapolated),
            convergence=float(abs(fine - coarse)),
            raw=tuple(float(values[i]) for values in per_grid),
        ))
    if len(levels) < k:
        logger.warning("found %d of %d requested bound states (gamma=%g, A=%g, B=%g)",
                       len(levels), k, d.gamma, params.A, params.B)
    return NumericalSpectrum(levels=tuple(levels), grid=grid, method=method, requested=k)


def boundary_sensitivity(
    units: UnitSystem,
    d: Deformation,
    params: PotentialParams,
    grid: GridSpec,
    k: int,
    factor: float = 10.0,
    method: DiscretizationMethod = DiscretizationMethod.LOG_COORDINATE,
) -> List[float]:
    """|E(x_min) - E(factor * x_min)| per level, the cut-off effect of the inner boundary."""
    base = solve_numerical_spectrum(units, d, params, grid, k, method)
    moved = solve_numerical_spectrum(units, d, params, grid.with_x_min(grid.x_min * factor), k, method)
    return [abs(a.E - b.E) for a, b in zip(base.levels, moved.levels)]
