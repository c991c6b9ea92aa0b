"""
Wavefunction Evaluation

phi(x) = N z^p (z-1)^q 2F1(-n, b; 1+2p; z) with z = 1 + gamma x.

(1-z)^q is realized as (z-1)^q for z > 1; the constant phase (-1)^q is
absorbed into N. Values are assembled in log space because the exponents
reach several hundred for molecular parameters.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from src.errors import ConvergenceError, DomainError
from src.model import Deformation, PotentialParams, UnitSystem
from src.specfun import Branch, hyp2f1
from src.spectrum import SpectrumEntry, wavefunction_parameters


class Measure(str, Enum):
    """Integration measure of the normalization."""
    DX = "dx"
    DZ = "dz"
    WEIGHTED = "weighted"  # dx / (1 + gamma x)


@dataclass(frozen=True)
class WavefunctionSpec:
    """A level's wavefunction together with everything needed to evaluate it.

    Attributes:
        entry: Spectrum entry with resolved branches
        units, deformation, params: The problem the entry was computed for
        measure: Measure the normalization refers to
        log_norm: ln N; 0 until normalized
        x_max: Truncation length used by the last normalization
    """
    entry: SpectrumEntry
    units: UnitSystem
    deformation: Deformation
    params: PotentialParams
    measure: Measure = Measure.DX
    log_norm: float = 0.0
    x_max: Optional[float] = None

    @property
    def norm_constant(self) -> float:
        return math.exp(self.log_norm) if self.log_norm < 709.0 else math.inf

    @property
    def domain(self) -> Tuple[float, float]:
        """z-interval covered by x in (0, x_max)."""
        upper = math.inf if self.x_max is None else 1.0 + self.deformation.gamma * self.x_max
        return 1.0, upper

    def with_log_norm(self, log_norm: float, x_max: Optional[float] = None) -> "WavefunctionSpec":
        return replace(self, log_norm=log_norm, x_max=self.x_max if x_max is None else x_max)


def log_phi(spec: WavefunctionSpec, x) -> Tuple[np.ndarray, np.ndarray]:
    """(ln |phi|, sign phi) at x; ln|phi| is -inf at nodes.

    Raises:
        DomainError: any x <= 0
        UnresolvedBranchError: the entry has no resolved branch
    """
    xs = np.asarray(x, dtype=float)
    if np.any(xs <= 0):
        raise DomainError("the wavefunction is defined for x > 0")
    hyp = wavefunction_parameters(spec.entry)
    z = spec.deformation.stretch(xs)
    poly = hyp2f1(hyp, z)
    if poly.branch is not Branch.POLYNOMIAL:
        raise ConvergenceError(f"2F1 left its terminating branch ({poly.branch.value}) for level n={spec.entry.n}")
    values = np.asarray(poly.value, dtype=float)
    with np.errstate(divide="ignore"):
        log_abs = (
            spec.log_norm
            + spec.entry.p * np.log(z)
            + spec.entry.q * np.log(spec.deformation.gamma * xs)
            + np.log(np.abs(values))
        )
    return log_abs, np.sign(values)


def evaluate_phi(spec: WavefunctionSpec, x):
    """phi(x) for scalar or array x."""
    log_abs, sign = log_phi(spec, x)
    value = sign * np.exp(log_abs)
    return float(value) if value.ndim == 0 else value


def count_nodes(values) -> int:
    """Sign changes across the samples, exact zeros skipped."""
    signs = np.sign(np.asarray(values, dtype=float))
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def sample_wavefunction(spec: WavefunctionSpec, x_grid) -> List[Tuple[float, float, float, float]]:
    """Rows (x, z, phi, |phi|^2) for CSV export."""
    xs = np.asarray(x_grid, dtype=float)
    phi = np.atleast_1d(evaluate_phi(spec, xs))
    z = spec.deformation.stretch(xs)
    return [(float(a), float(b), float(c), float(c * c)) for a, b, c in zip(xs, z, phi)]
