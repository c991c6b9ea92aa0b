"""
Deformation and Position-Dependent Mass

The displacement operator with mixing parameter gamma generates the deformed
derivative D = (1 + gamma x) d/dx and the mass profile m(x) = m (1 + gamma x)^-2.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.errors import DomainError, GridBoundaryError, SingularityError
from src.model.units import UnitSystem


@dataclass(frozen=True)
class Deformation:
    """Mixing parameter of the displacement operator.

    Attributes:
        gamma: Inverse length; 0 recovers the constant-mass problem
    """
    gamma: float = 0.0

    def __post_init__(self):
        if not self.gamma >= 0:
            raise DomainError(f"gamma must be >= 0, got {self.gamma}")

    @property
    def is_constant_mass(self) -> bool:
        return self.gamma == 0

    def stretch(self, x):
        """1 + gamma x."""
        return 1.0 + self.gamma * np.asarray(x, dtype=float)


def mass_profile(units: UnitSystem, d: Deformation, x):
    """m(x) = m (1 + gamma x)^-2.

    Raises:
        SingularityError: at x = -1/gamma
    """
    stretch = d.stretch(x)
    if np.any(stretch == 0):
        raise SingularityError(f"mass profile is singular at x = {-1.0 / d.gamma:g}")
    value = units.mass / stretch ** 2
    return float(value) if value.ndim == 0 else value


def _check_grid(f: np.ndarray, grid: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    f = np.asarray(f, dtype=float)
    grid = np.asarray(grid, dtype=float)
    if f.shape != grid.shape or grid.ndim != 1:
        raise DomainError("samples and grid must be 1-D arrays of equal length")
    if grid.size < 3:
        raise GridBoundaryError("a central difference needs at least three grid points")
    if np.any(np.diff(grid) <= 0):
        raise DomainError("grid must be strictly increasing")
    return f, grid


def deformed_derivative(d: Deformation, f, grid, x: float) -> float:
    """Central-difference estimate of (1 + gamma x) f'(x) at a grid node.

    Args:
        d: Deformation
        f: Samples of the function on the grid
        grid: Strictly increasing sample positions
        x: Interior grid node at which to differentiate

    Returns:
        The deformed derivative at x, accurate to O(h^2)

    Example:
        >>> grid = np.linspace(0, 2, 2001)
        >>> round(deformed_derivative(Deformation(1.0), grid, grid, 1.0), 6)
        2.0
    """
    f, grid = _check_grid(f, grid)
    i = int(np.argmin(np.abs(grid - x)))
    spacing = grid[min(i + 1, grid.size - 1)] - grid[max(i - 1, 0)]
    if abs(grid[i] - x) > 1e-9 * spacing:
        raise DomainError(f"x = {x:g} is not a grid node")
    if i == 0 or i == grid.size - 1:
        raise GridBoundaryError(f"x = {x:g} is on the grid boundary")
    slope = (f[i + 1] - f[i - 1]) / (grid[i + 1] - grid[i - 1])
    return float((1.0 + d.gamma * grid[i]) * slope)


def deformed_derivative_samples(d: Deformation, f, grid) -> np.ndarray:
    """(1 + gamma x) f'(x) at every interior grid node.

    Same stencil as deformed_derivative, node by node.
    """
    f, grid = _check_grid(f, grid)
    slope = (f[2:] - f[:-2]) / (grid[2:] - grid[:-2])
    return d.stretch(grid[1:-1]) * slope


def kinetic_operator(units: UnitSystem, d: Deformation, f, grid) -> Tuple[np.ndarray, np.ndarray]:
    """-(hbar^2/2m) D(D f), two applications of the deformed derivative.

    Returns:
        (nodes, values) on grid[2:-2]
    """
    f, grid = _check_grid(f, grid)
    first = deformed_derivative_samples(d, f, grid)
    second = deformed_derivative_samples(d, first, grid[1:-1])
    return grid[2:-2], -units.kinetic_scale * second
