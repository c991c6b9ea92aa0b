"""
Discrete Hamiltonian

Two symmetric tridiagonal discretizations of

    H = -(hbar^2/2m) (1 + gamma x) [(1 + gamma x) d^2/dx^2 + gamma d/dx] + V(x)

with Dirichlet boundaries at x_min and x_max.

log-coordinate (default): in u = ln(1 + gamma x)/gamma the kinetic term is
    -(hbar^2/2m) d^2/du^2, so a uniform u-grid gives the standard three-point
    stencil with V sampled at x(u). Symmetric as built.
similarity: the raw non-symmetric stencil on a uniform x-grid, made symmetric
    by the diagonal similarity transform (off-diagonal -sqrt(upper_i lower_i+1)).

At gamma = 0 both reduce to the constant-mass stencil on the x-grid.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from src.errors import DomainError, SingularityError
from src.model import Deformation, PotentialParams, UnitSystem, potential_value
from src.verifier.grid import GridSpec


class DiscretizationMethod(str, Enum):
    LOG_COORDINATE = "log-coordinate"
    SIMILARITY = "similarity"


@dataclass(frozen=True)
class DiscreteHamiltonian:
    """Symmetric tridiagonal operator on the interior nodes.

    Attributes:
        diagonal: Main diagonal, length n
        off_diagonal: Sub- and super-diagonal, length n - 1
        nodes: Interior x positions
        method: Discretization used
        step: Uniform step in the discretization coordinate
    """
    diagonal: np.ndarray
    off_diagonal: np.ndarray
    nodes: np.ndarray
    method: DiscretizationMethod
    step: float

    @property
    def size(self) -> int:
        return self.diagonal.size

    def matrix(self) -> np.ndarray:
        """Dense form, for inspection and small test problems."""
        return np.diag(self.diagonal) + np.diag(self.off_diagonal, 1) + np.diag(self.off_diagonal, -1)

    def gershgorin_bounds(self) -> Tuple[float, float]:
        radius = np.zeros_like(self.diagonal)
        radius[:-1] += np.abs(self.off_diagonal)
        radius[1:] += np.abs(self.off_diagonal)
        return float(np.min(self.diagonal - radius)), float(np.max(self.diagonal + radius))


def _log_coordinate(units: UnitSystem, d: Deformation, params: PotentialParams, points: int,
                    grid: GridSpec) -> DiscreteHamiltonian:
    g = d.gamma
    if g > 0:
        u = np.linspace(np.log1p(g * grid.x_min) / g, np.log1p(g * grid.x_max) / g, points)
        x = np.expm1(g * u) / g
    else:
        u = x = np.linspace(grid.x_min, grid.x_max, points)
    h = u[1] - u[0]
    inner = x[1:-1]
    kinetic = units.kinetic_scale / h ** 2
    return DiscreteHamiltonian(
        diagonal=2.0 * kinetic + potential_value(params, inner),
        off_diagonal=np.full(inner.size - 1, -kinetic),
        nodes=inner,
        method=DiscretizationMethod.LOG_COORDINATE,
        step=float(h),
    )


def _similarity(units: UnitSystem, d: Deformation, params: PotentialParams, points: int,
                grid: GridSpec) -> DiscreteHamiltonian:
    x = np.linspace(grid.x_min, grid.x_max, points)
    h = x[1] - x[0]
    inner = x[1:-1]
    stretch = d.stretch(inner)
    c2 = units.kinetic_scale * stretch ** 2
    c1 = units.kinetic_scale * d.gamma * stretch
    lower = -c2 / h ** 2 + c1 / (2.0 * h)
    upper = -c2 / h ** 2 - c1 / (2.0 * h)
    coupling = upper[:-1] * lower[1:]
    if np.any(coupling <= 0):
        raise DomainError("grid too coarse: the stencil's off-diagonals change sign")
    return DiscreteHamiltonian(
        diagonal=2.0 * c2 / h ** 2 + potential_value(params, inner),
        off_diagonal=-np.sqrt(coupling),
        nodes=inner,
        method=DiscretizationMethod.SIMILARITY,
        step=float(h),
    )


def build_discrete_hamiltonian(
    units: UnitSystem,
    d: Deformation,
    params: PotentialParams,
    grid: GridSpec,
    level: int = 0,
    method: DiscretizationMethod = DiscretizationMethod.LOG_COORDINATE,
) -> DiscreteHamiltonian:
    """Symmetric tridiagonal H on refinement `level` of the grid.

    Raises:
        SingularityError: the grid reaches x = -1/gamma
    """
    if np.any(d.stretch([grid.x_min, grid.x_max]) <= 0):
        raise SingularityError(f"grid [{grid.x_min:g}, {grid.x_max:g}] straddles x = -1/gamma")
    build = _log_coordinate if method is DiscretizationMethod.LOG_COORDINATE else _similarity
    return build(units, d, params, grid.points(level), grid)
