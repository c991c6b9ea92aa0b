"""
Tables and Sweeps

Grids of closed-form energies laid out as in the published tables: one row
per level n, one column per gamma. Coulomb-like problems (A = 0) report -E,
molecules report the height above the well bottom E - V_min.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from prefect.logging import get_logger

from src.model import CO, Deformation, MoleculePreset, PotentialParams, UnitSystem, get_preset
from src.spectrum import SpectrumEntry, energy_analytic, energy_breakdown

logger = get_logger(__name__)

TABLE_GAMMAS = (0.0, 0.1, 0.5, 1.0)
TABLE_LEVELS = tuple(range(6))
UNPHYSICAL_MARK = "*"


@dataclass(frozen=True)
class TableCell:
    n: int
    gamma: float
    value: float
    physical: bool
    entry: SpectrumEntry


@dataclass(frozen=True)
class EnergyTable:
    """Cells in row-major (n, gamma) order.

    Attributes:
        title: Table caption
        quantity: Reported quantity, "-E" or "E - V_min"
        gammas, ns: Column and row labels
        cells: One row per n
        formatter: Fixed-precision rendering of a value
    """
    title: str
    quantity: str
    gammas: Tuple[float, ...]
    ns: Tuple[int, ...]
    cells: Tuple[Tuple[TableCell, ...], ...]
    formatter: Callable[[float], str]

    def cell(self, n: int, gamma: float) -> TableCell:
        return self.cells[self.ns.index(n)][self.gammas.index(gamma)]

    def rows(self) -> List[List[str]]:
        """Rendered rows; unphysical cells carry UNPHYSICAL_MARK."""
        rendered = []
        for n, row in zip(self.ns, self.cells):
            rendered.append([str(n)] + [
                self.formatter(c.value) + ("" if c.physical else UNPHYSICAL_MARK) for c in row
            ])
        return rendered

    def header(self) -> List[str]:
        return ["n"] + [f"gamma={g:g}" for g in self.gammas]


@dataclass(frozen=True)
class SweepResult:
    n: int
    quantity: str
    gammas: Tuple[float, ...]
    values: Tuple[float, ...]

    def rows(self) -> List[List[str]]:
        return [[repr(g), f"{v:.12g}"] for g, v in zip(self.gammas, self.values)]


def reported_value(entry: SpectrumEntry, params: PotentialParams) -> float:
    """-E without an inverse-square core, E - V_min with one."""
    return -entry.E if params.A == 0 else entry.E_shifted


def coulomb_format(value: float) -> str:
    """Six significant figures: four decimals from 10 up, five below."""
    return f"{value:.4f}" if abs(value) >= 10 else f"{value:.5f}"


def molecule_format(value: float) -> str:
    return f"{value:.6f}"


def _log_cell(entry: SpectrumEntry, units: UnitSystem, params: PotentialParams) -> None:
    b = energy_breakdown(entry.n, units, Deformation(entry.gamma), params)
    logger.info("n=%d gamma=%g: d=%.10g kinetic=%.10g potential=%.10g bracket=%.10g E=%.10g",
                entry.n, entry.gamma, b.d, b.kinetic_term, b.potential_term, b.bracket, b.E)


def build_table(
    title: str,
    units: UnitSystem,
    params: PotentialParams,
    formatter: Callable[[float], str],
    ns: Sequence[int] = TABLE_LEVELS,
    gammas: Sequence[float] = TABLE_GAMMAS,
    verbose: bool = False,
) -> EnergyTable:
    rows = []
    for n in ns:
        row = []
        for gamma in gammas:
            entry = energy_analytic(n, units, Deformation(gamma), params)
            if verbose:
                _log_cell(entry, units, params)
            row.append(TableCell(n=n, gamma=gamma, value=reported_value(entry, params),
                                 physical=entry.physical, entry=entry))
        rows.append(tuple(row))
    return EnergyTable(
        title=title,
        quantity="-E" if params.A == 0 else "E - V_min",
        gammas=tuple(gammas),
        ns=tuple(ns),
        cells=tuple(rows),
        formatter=formatter,
    )


def table_coulomb(
    units: Optional[UnitSystem] = None,
    params: Optional[PotentialParams] = None,
    verbose: bool = False,
) -> EnergyTable:
    """-E per level and gamma; defaults to A = 0, B = 5, m = hbar = 1."""
    preset = get_preset("coulomb-B5")
    units = units or preset.units
    params = params or preset.params
    return build_table(f"Coulomb-like potential (B = {params.B:g}), -E in {units.energy_unit}",
                       units, params, coulomb_format, verbose=verbose)


def table_molecule(preset: MoleculePreset = CO, verbose: bool = False) -> EnergyTable:
    """E - V_min = E + D_e in eV, gamma in 1/Angstrom."""
    return build_table(f"{preset.name}: inverse square plus Coulomb-like potential, E - V_min in eV",
                       preset.units(), preset.to_params(), molecule_format, verbose=verbose)


def sweep_gamma(
    units: UnitSystem,
    params: PotentialParams,
    n: int = 0,
    gamma_min: float = 0.0,
    gamma_max: float = 2.0,
    steps: int = 41,
) -> SweepResult:
    """Level n across an evenly spaced gamma range, in the table convention."""
    gammas = tuple(float(g) for g in np.linspace(gamma_min, gamma_max, steps))
    values = tuple(reported_value(energy_analytic(n, units, Deformation(g), params), params) for g in gammas)
    return SweepResult(n=n, quantity="-E" if params.A == 0 else "E - V_min", gammas=gammas, values=values)


def quadratic_fit_residual(sweep: SweepResult) -> float:
    """Largest deviation of the sweep from its least-squares quadratic in gamma."""
    g = np.asarray(sweep.gammas)
    v = np.asarray(sweep.values)
    coeffs = np.polyfit(g, v, 2)
    return float(np.max(np.abs(np.polyval(coeffs, g) - v)))
