"""
Grids for the Finite-Difference Oracle
"""

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from src.errors import DomainError
from src.model import Deformation, PotentialParams, UnitSystem
from src.spectrum.formulas import denominator, energy_breakdown
from src.spectrum.validity import validity_rule

DEFAULT_X_MIN = 1e-4
# inner wall of default grids, in Bohr-like lengths; the wall shifts Coulomb levels by about x_min B
X_MIN_FRACTION = 1e-7
DEFAULT_POINTS = 4001
DEFAULT_REFINEMENTS = 2
MIN_POINTS = 200
U_DECAY = 30.0
U_EXTENT_CAP = 8.0


@dataclass(frozen=True)
class GridSpec:
    """Extent and resolution of the solver grid.

    Attributes:
        x_min: Inner Dirichlet boundary (> 0, the A/x^2 core is singular at 0)
        x_max: Outer Dirichlet boundary
        num_points: Points on the coarsest grid, boundaries included
        refinements: Number of grids, each halving the step of the previous one
    """
    x_min: float = DEFAULT_X_MIN
    x_max: float = 100.0
    num_points: int = DEFAULT_POINTS
    refinements: int = DEFAULT_REFINEMENTS

    def __post_init__(self):
        if not 0 < self.x_min < self.x_max:
            raise DomainError(f"need 0 < x_min < x_max, got ({self.x_min}, {self.x_max})")
        if self.num_points < MIN_POINTS:
            raise DomainError(f"num_points must be >= {MIN_POINTS}, got {self.num_points}")
        if self.refinements < 2:
            raise DomainError(f"at least two refinement levels are needed, got {self.refinements}")

    def points(self, level: int = 0) -> int:
        return (self.num_points - 1) * 2 ** level + 1

    def nodes(self, level: int = 0) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.points(level))

    def with_x_min(self, x_min: float) -> "GridSpec":
        return replace(self, x_min=x_min)


def default_grid(
    units: UnitSystem,
    params: PotentialParams,
    levels: int,
    deformation: Optional[Deformation] = None,
    x_min: Optional[float] = None,
    num_points: int = DEFAULT_POINTS,
    refinements: int = DEFAULT_REFINEMENTS,
) -> GridSpec:
    """Grid wide enough for the first `levels` states.

    The outer boundary is 12 d^2 Bohr-like lengths (2 hbar^2/(2m B)) for the
    highest requested level, and at least four potential-minimum distances.
    Unless given, the inner boundary is X_MIN_FRACTION Bohr-like lengths
    (DEFAULT_X_MIN without attraction).
    With a deformation the extent is taken in u = ln(1 + gamma x)/gamma, long
    enough for the highest physical level to decay by e^-U_DECAY, and mapped
    back to x (at most U_EXTENT_CAP times the constant-mass extent). Such
    grids suit the log-coordinate discretization only.
    """
    if params.B > 0:
        a0 = 2.0 * units.kinetic_scale / params.B
        d_max = denominator(max(levels, 1) - 1, units, params)
        x_max = 12.0 * d_max ** 2 * a0
        if params.A > 0:
            x_max = max(x_max, 4.0 * 2.0 * params.A / params.B)
        if x_min is None:
            x_min = X_MIN_FRACTION * a0
    else:
        x_max = 100.0
    if x_min is None:
        x_min = DEFAULT_X_MIN
    if deformation is not None and deformation.gamma > 0 and params.B > 0:
        g = deformation.gamma
        bound = [
            energy_breakdown(n, units, deformation, params).E
            for n in range(max(levels, 1))
            if validity_rule(n, units, deformation, params).physical
        ]
        u_extent = x_max
        if bound and bound[-1] < 0:
            decay = U_DECAY / math.sqrt(-bound[-1] / units.kinetic_scale)
            u_extent = min(max(u_extent, decay), U_EXTENT_CAP * x_max)
        x_max = math.expm1(min(g * u_extent, 700.0)) / g
    return GridSpec(x_min=x_min, x_max=x_max, num_points=num_points, refinements=refinements)
