"""
Sturm-Sequence Eigenvalues

Eigenvalue counting via the LDL^T pivots of H - lambda, bisection for the
lowest eigenvalues (LAPACK stebz through scipy), and inverse iteration for
eigenvectors.
"""

import sys
from typing import Union

import numpy as np
from scipy import linalg

from src.errors import ConvergenceError, DomainError
from src.verifier.hamiltonian import DiscreteHamiltonian

BISECTION_TOL = 1e-10
INVERSE_ITERATIONS = 4


def sturm_count(H: DiscreteHamiltonian, lam) -> Union[int, np.ndarray]:
    """Number of eigenvalues of H strictly below lam (scalar or array).

    The count is non-decreasing in lam.
    """
    lams = np.atleast_1d(np.asarray(lam, dtype=float))
    e2 = H.off_diagonal ** 2
    pivmin = sys.float_info.min * max(1.0, float(e2.max(initial=0.0)))
    pivot = H.diagonal[0] - lams
    count = (pivot < 0).astype(int)
    for i in range(1, H.size):
        pivot = np.where(np.abs(pivot) < pivmin, -pivmin, pivot)
        pivot = H.diagonal[i] - lams - e2[i - 1] / pivot
        count += pivot < 0
    return int(count[0]) if np.ndim(lam) == 0 else count


def lowest_eigenvalues(H: DiscreteHamiltonian, k: int, upper: float = 0.0, tol: float = BISECTION_TOL) -> np.ndarray:
    """Up to k lowest eigenvalues below `upper`, ascending.

    Fewer than k are returned when fewer lie below `upper`.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    available = min(k, sturm_count(H, upper))
    if available == 0:
        return np.empty(0)
    return linalg.eigvalsh_tridiagonal(
        H.diagonal,
        H.off_diagonal,
        select="i",
        select_range=(0, available - 1),
        lapack_driver="stebz",
        tol=tol,
    )


def eigenvector(H: DiscreteHamiltonian, E: float) -> np.ndarray:
    """Unit eigenvector for the eigenvalue closest to E, by inverse iteration."""
    shift = E - 1e-9 * max(1.0, abs(E))
    banded = np.zeros((3, H.size))
    banded[0, 1:] = H.off_diagonal
    banded[1] = H.diagonal - shift
    banded[2, :-1] = H.off_diagonal
    vector = np.ones(H.size) / np.sqrt(H.size)
    for _ in range(INVERSE_ITERATIONS):
        vector = linalg.solve_banded((1, 1), banded, vector)
        norm = np.linalg.norm(vector)
        if not np.isfinite(norm) or norm == 0:
            raise ConvergenceError(f"inverse iteration broke down near E = {E:g}")
        vector = vector / norm
    # Fix the overall sign: positive just inside the inner boundary.
    first = vector[np.argmax(np.abs(vector) > 1e-8 * np.abs(vector).max())]
    return vector if first >= 0 else -vector
