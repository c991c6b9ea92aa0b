"""
Spectrum Entries

One SpectrumEntry per bound level: the closed-form energy, the derived
exponents and hypergeometric parameters under the resolved branch, and the
physicality flag.
"""

from dataclasses import dataclass, replace
from typing import Iterable, List, Optional

from src.errors import UnresolvedBranchError
from src.model import Deformation, PotentialParams, UnitSystem, potential_minimum
from src.specfun import HypParams
from src.spectrum.branches import BranchRecord, select_branches
from src.spectrum.coefficients import hypergeometric_parameters, ode_coefficients, pq_parameters
from src.spectrum.formulas import energy_breakdown
from src.spectrum.validity import validity_rule


@dataclass(frozen=True)
class SpectrumEntry:
    """One bound level.

    Attributes:
        n: Radial index
        N: Principal quantum number n + 1
        gamma: Mixing parameter the level was computed at
        E: Closed-form energy (always <= 0)
        E_shifted: E - V_min, None when the well has no interior minimum (A = 0)
        d: Denominator of the energy formula
        p, q: Exponents under the resolved branch (None at gamma = 0)
        a, b, c: Hypergeometric parameters, c from the positive radical
        physical: False past the bracket sign flip
        branch_record: Resolved branch (None at gamma = 0 and at E = 0)
    """
    n: int
    N: int
    gamma: float
    E: float
    E_shifted: Optional[float]
    d: float
    p: Optional[float]
    q: Optional[float]
    a: Optional[float]
    b: Optional[float]
    c: Optional[float]
    physical: bool
    branch_record: Optional[BranchRecord]

    @property
    def quantization_residual(self) -> Optional[float]:
        return None if self.a is None else abs(self.a + self.n)


def energy_analytic(n: int, units: UnitSystem, d: Deformation, params: PotentialParams) -> SpectrumEntry:
    """Closed-form level n with its derived parameters.

    Example:
        >>> round(energy_analytic(0, UnitSystem.atomic(), Deformation(0.1), PotentialParams(0, 5)).E, 5)
        -12.25125
    """
    breakdown = energy_breakdown(n, units, d, params)
    E = breakdown.E
    E_shifted = E - potential_minimum(params)[1] if params.A > 0 else None
    entry = SpectrumEntry(
        n=n, N=n + 1, gamma=d.gamma, E=E, E_shifted=E_shifted, d=breakdown.d,
        p=None, q=None, a=None, b=None, c=None,
        physical=validity_rule(n, units, d, params).physical,
        branch_record=None,
    )
    # At the exact threshold E = 0 the level has no bound-state parameters.
    if d.gamma == 0 or E == 0:
        return entry

    record = select_branches(n, units, d, params)
    coeffs = ode_coefficients(units, d, params, E)
    pq = pq_parameters(units, d, params, E, p_sign=record.p_sign, q_root=record.q_root)
    hyp = hypergeometric_parameters(pq.p, pq.q, coeffs.M, E, imag_sign=record.imag_sign)
    return replace(entry, p=pq.p, q=pq.q, a=hyp.a, b=hyp.b, c=hyp.c, branch_record=record)


def spectrum_levels(ns: Iterable[int], units: UnitSystem, d: Deformation, params: PotentialParams) -> List[SpectrumEntry]:
    return [energy_analytic(n, units, d, params) for n in ns]


def wavefunction_parameters(entry: SpectrumEntry) -> HypParams:
    """(-n, b, 1 + 2p) with the signed p.

    With these parameters z^p (z-1)^q 2F1 solves the reduced equation; the
    positive-radical c stored on the entry does not for n >= 1.
    """
    if entry.branch_record is None or entry.p is None:
        raise UnresolvedBranchError(f"level n={entry.n} has no resolved branch (gamma = {entry.gamma:g})")
    return HypParams(a=float(-entry.n), b=entry.b, c=1.0 + 2.0 * entry.p)
