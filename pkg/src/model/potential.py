"""
Inverse-Square plus Coulomb Potential

V(x) = A/x^2 - B/x on the half-line x > 0.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.errors import DomainError


@dataclass(frozen=True)
class PotentialParams:
    """Strengths of the two potential terms.

    Attributes:
        A: Inverse-square strength (energy * length^2), A >= 0
        B: Coulomb strength (energy * length); bound-state operations need B > 0
    """
    A: float
    B: float

    def __post_init__(self):
        if not self.A >= 0:
            raise DomainError(f"A must be non-negative, got {self.A}")

    @property
    def is_coulomb(self) -> bool:
        return self.A == 0

    def require_bound(self) -> None:
        """Raise unless the tail is attractive."""
        if not self.B > 0:
            raise DomainError(f"bound states require B > 0, got {self.B}")


def potential_value(params: PotentialParams, x):
    """Evaluate V(x) = A/x^2 - B/x.

    Args:
        params: Potential strengths
        x: Position (scalar or array), must be > 0

    Returns:
        V at x, with the same shape as x

    Example:
        >>> potential_value(PotentialParams(A=1, B=2), 1.0)
        -1.0
    """
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0):
        raise DomainError("potential is defined for x > 0 only")
    value = params.A / xs ** 2 - params.B / xs
    return float(value) if value.ndim == 0 else value


def potential_minimum(params: PotentialParams) -> Tuple[float, float]:
    """Location and depth of the well: x_min = 2A/B, V_min = -B^2/(4A)."""
    if params.A == 0:
        raise DomainError("no interior minimum: A = 0 (pure Coulomb)")
    params.require_bound()
    return 2.0 * params.A / params.B, -params.B ** 2 / (4.0 * params.A)
