"""
Physicality Rule

For gamma > 0 the bracket of the energy formula changes sign once d passes
d_crit = sqrt(2m(A gamma + B)/gamma)/hbar. Past that point the formula still
returns a (non-positive) number, but the corresponding wavefunction no longer
decays, so the level is flagged rather than suppressed.
"""

import math
from dataclasses import dataclass
from typing import Optional

from src.model import Deformation, PotentialParams, UnitSystem
from src.spectrum.formulas import denominator

# Relative slack on d <= d_crit so the exact-threshold level stays physical.
_THRESHOLD_SLACK = 1e-12


@dataclass(frozen=True)
class ValidityRule:
    d: float
    d_crit: Optional[float]

    @property
    def physical(self) -> bool:
        return self.d_crit is None or self.d <= self.d_crit * (1.0 + _THRESHOLD_SLACK)


def validity_rule(n: int, units: UnitSystem, d: Deformation, params: PotentialParams) -> ValidityRule:
    dn = denominator(n, units, params)
    if d.gamma == 0:
        return ValidityRule(d=dn, d_crit=None)
    d_crit = math.sqrt(2.0 * units.mass * (params.A * d.gamma + params.B) / d.gamma) / units.hbar
    return ValidityRule(d=dn, d_crit=d_crit)


def classify_physical(entry, d: Deformation, params: PotentialParams, units: UnitSystem) -> bool:
    """Physical iff gamma = 0 or d <= d_crit for the entry's level."""
    return validity_rule(entry.n, units, d, params).physical
