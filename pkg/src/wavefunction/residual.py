"""
Stationary-Equation Residual

Inserts phi into -(hbar^2/2m) D(D phi) + V phi = E phi. In u = ln(1 + gamma x)/gamma
the deformed derivative is d/du, so on a uniform u-grid the kinetic term is a
plain second difference (five-point stencil here).
"""

import math

import numpy as np

from src.model import potential_value
from src.wavefunction.normalization import envelope_peak
from src.wavefunction.phi import WavefunctionSpec, evaluate_phi


def _to_x(u: np.ndarray, gamma: float) -> np.ndarray:
    return np.expm1(gamma * u) / gamma if gamma > 0 else u


def stationary_residual(spec: WavefunctionSpec, num_points: int = 4001) -> float:
    """||H phi - E phi|| / (|E| ||phi||) over the bulk of the wavefunction.

    Args:
        spec: Wavefunction; its x_max (or a multiple of the envelope peak)
            bounds the grid
        num_points: Uniform u-grid size

    Returns:
        Relative discrete residual
    """
    gamma = spec.deformation.gamma
    x_hi = spec.x_max if spec.x_max is not None else 1e3 * envelope_peak(spec.entry, gamma)
    u_hi = math.log1p(gamma * x_hi) / gamma
    u = np.linspace(0.0, u_hi, num_points + 1)[1:]
    h = u[1] - u[0]
    x = _to_x(u, gamma)
    phi = np.asarray(evaluate_phi(spec, x))

    second = (-phi[4:] + 16.0 * phi[3:-1] - 30.0 * phi[2:-2] + 16.0 * phi[1:-3] - phi[:-4]) / (12.0 * h * h)
    inner = phi[2:-2]
    E = spec.entry.E
    residual = -spec.units.kinetic_scale * second + potential_value(spec.params, x[2:-2]) * inner - E * inner
    return float(np.linalg.norm(residual) / (abs(E) * np.linalg.norm(inner)))
