"""
Branch Selection

The reduction leaves three sign choices open: the sign of p, the root of q,
and the sign s in a = p + q + s sqrt(-ME). The quantization condition a = -n
picks one of the eight combinations; the search is exhaustive and its result
cached per parameter set.
"""

import sys
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import List

from prefect.logging import get_logger

from src.errors import BranchError
from src.model import Deformation, PotentialParams, UnitSystem
from src.spectrum.coefficients import QRoot, imaginary_term, ode_coefficients, pq_parameters
from src.spectrum.formulas import energy_breakdown

logger = get_logger(__name__)

QUANTIZATION_TOL = 1e-9

# Candidate order: the combination that holds below the bracket sign flip first.
_P_SIGNS = (-1, 1)
_Q_ROOTS = (QRoot.UPPER, QRoot.LOWER)
_IMAG_SIGNS = (1, -1)


@dataclass(frozen=True)
class BranchRecord:
    """The sign/root triple under which a = -n.

    Attributes:
        p_sign: -1 or +1
        q_root: Which root of q
        imag_sign: s in a = p + q + s sqrt(-ME)
        residual: |a + n| under this choice
    """
    p_sign: int
    q_root: QRoot
    imag_sign: int
    residual: float

    def describe(self) -> str:
        return f"p{'-' if self.p_sign < 0 else '+'}/q-{self.q_root.value}/s{'+' if self.imag_sign > 0 else '-'}"


@lru_cache(maxsize=4096)
def select_branches(n: int, units: UnitSystem, d: Deformation, params: PotentialParams) -> BranchRecord:
    """Find the (p sign, q root, imaginary sign) with |a + n| below tolerance.

    Raises:
        BranchError: gamma = 0, or none of the eight candidates quantizes
    """
    if d.gamma == 0:
        raise BranchError("branch machinery undefined at gamma = 0 (M diverges)")
    E = energy_breakdown(n, units, d, params).E
    coeffs = ode_coefficients(units, d, params, E)
    pq = pq_parameters(units, d, params, E)
    root = imaginary_term(coeffs.M, E)
    # Cancellation between |p| and sqrt(-ME) costs digits proportional to their size.
    tol = max(QUANTIZATION_TOL, 64 * sys.float_info.epsilon * (pq.p_abs + root + abs(pq.q_upper)))

    tried: List[BranchRecord] = []
    for p_sign, q_root, imag_sign in product(_P_SIGNS, _Q_ROOTS, _IMAG_SIGNS):
        q = pq.q_upper if q_root is QRoot.UPPER else pq.q_lower
        a = p_sign * pq.p_abs + q + imag_sign * root
        record = BranchRecord(p_sign=p_sign, q_root=q_root, imag_sign=imag_sign, residual=abs(a + n))
        if record.residual < tol:
            logger.debug("level n=%d gamma=%g resolved on branch %s", n, d.gamma, record.describe())
            return record
        tried.append(record)
    raise BranchError(f"no branch quantizes level n={n} at gamma={d.gamma:g}", tried)
