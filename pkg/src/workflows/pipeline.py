"""
Run Pipeline

A LangGraph state machine for one run: validate the configuration, route by
mode to the matching compute node, and finalize the artifact payload.
"""

import operator
from typing import Annotated, Dict, List, Literal, TypedDict

import numpy as np
from prefect.logging import get_logger
from langgraph.graph import StateGraph, END

from src.model import Deformation, get_preset
from src.spectrum import energy_analytic, energy_breakdown
from src.verifier import crosscheck_analytic, default_grid
from src.wavefunction import (
    build_wavefunction,
    closed_form_normalization,
    count_nodes,
    envelope_peak,
    sample_wavefunction,
)
from src.workflows.config import RunConfig, RunMode
from src.workflows.tables import quadratic_fit_residual, sweep_gamma, table_coulomb, table_molecule

logger = get_logger(__name__)


# ============================================================================
# RUN STATE
# ============================================================================

class RunState(TypedDict, total=False):
    """State of one run.

    Attributes:
        config: Validated run configuration
        route: Mode chosen by the validate node
        metadata: '#' header lines of the artifact (insertion order kept)
        header: CSV column names
        rows: CSV body
        notes: Diagnostics collected along the way (accumulated)
        verification_failed: An asserted cross-check did not pass
        exit_code: 0 success, 2 verification failure
    """
    config: RunConfig
    route: str
    metadata: Dict[str, str]
    header: List[str]
    rows: List[List[str]]
    notes: Annotated[list, operator.add]
    verification_failed: bool
    exit_code: int


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


# ============================================================================
# NODES
# ============================================================================

def validate_node(state: RunState) -> RunState:
    config = state["config"]
    units, params = config.resolve()
    logger.debug("run %s on A=%g B=%g (%s units)", config.mode.value, params.A, params.B, units.mode.value)
    return {"route": config.mode.value, "metadata": config.metadata()}


def route_by_mode(state: RunState) -> Literal["spectrum", "wavefunction", "verify", "table", "sweep"]:
    return state["route"]


def spectrum_node(state: RunState) -> RunState:
    config = state["config"]
    units, params = config.resolve()
    rows = []
    for gamma in config.gammas:
        d = Deformation(gamma)
        for n in config.ns:
            entry = energy_analytic(n, units, d, params)
            if config.verbose:
                b = energy_breakdown(n, units, d, params)
                logger.info("n=%d gamma=%g: d=%.10g bracket=%.10g - %.10g = %.10g",
                            n, gamma, b.d, b.kinetic_term, b.potential_term, b.bracket)
            branch = entry.branch_record.describe() if entry.branch_record else ""
            rows.append([_fmt(v) for v in (gamma, entry.n, entry.N, entry.E, entry.E_shifted, entry.d,
                                           entry.p, entry.q, entry.a, entry.b, entry.c, entry.physical)]
                        + [branch])
    header = ["gamma", "n", "N", "E", "E_shifted", "d", "p", "q", "a", "b", "c", "physical", "branch"]
    return {"header": header, "rows": rows}


def wavefunction_node(state: RunState) -> RunState:
    config = state["config"]
    units, params = config.resolve()
    points = config.settings.wavefunction_points
    rows, notes = [], []
    metadata = dict(state["metadata"], measure=config.measure.value)
    for gamma in config.gammas:
        d = Deformation(gamma)
        for n in config.ns:
            entry = energy_analytic(n, units, d, params)
            spec = build_wavefunction(entry, units, d, params, config.measure)
            x = np.geomspace(1e-3 * envelope_peak(entry, gamma), spec.x_max, points)
            samples = sample_wavefunction(spec, x)
            closed_form = closed_form_normalization(entry)
            metadata[f"n={n} gamma={gamma!r}"] = (
                f"lnN={spec.log_norm:.12g} nodes={count_nodes([s[2] for s in samples])} "
                f"closed_form_poles={len(closed_form.pole_flags)}"
            )
            notes.extend(f"n={n} gamma={gamma:g}: {flag}" for flag in closed_form.pole_flags)
            rows.extend([_fmt(gamma), str(n)] + [_fmt(v) for v in sample] for sample in samples)
    return {"header": ["gamma", "n", "x", "z", "phi", "phi_sq"], "rows": rows, "metadata": metadata, "notes": notes}


def verify_node(state: RunState) -> RunState:
    config = state["config"]
    units, params = config.resolve()
    settings = config.settings
    n_max = max(config.ns)
    rows, failed = [], False
    metadata = dict(state["metadata"], tol=repr(config.tol))
    for gamma in config.gammas:
        d = Deformation(gamma)
        grid = default_grid(units, params, n_max + 1, deformation=d, x_min=settings.x_min,
                            num_points=settings.grid_points, refinements=settings.refinements)
        report = crosscheck_analytic(units, d, params, n_max, tol=config.tol, grid=grid)
        metadata[f"grid gamma={gamma!r}"] = (
            f"method={report.method.value} x_min={grid.x_min!r} x_max={grid.x_max:.12g} "
            f"points={grid.num_points} refinements={grid.refinements} "
            f"boundary_shift={max(report.boundary_shifts, default=0.0):.3e}"
        )
        failed = failed or (report.asserted and not report.passed)
        for row in report.rows:
            rows.append([_fmt(v) for v in (gamma, row.n, row.E_analytic, row.E_numeric, row.abs_gap,
                                           row.rel_gap, row.convergence, row.physical)]
                        + [row.verdict.value, _fmt(report.asserted)])
    header = ["gamma", "n", "E_analytic", "E_numeric", "abs_gap", "rel_gap", "convergence",
              "physical", "verdict", "asserted"]
    return {"header": header, "rows": rows, "metadata": metadata, "verification_failed": failed}


def table_node(state: RunState) -> RunState:
    config = state["config"]
    entry = get_preset(config.preset)
    if entry.molecule is not None:
        table = table_molecule(entry.molecule, verbose=config.verbose)
    else:
        table = table_coulomb(entry.units, entry.params, verbose=config.verbose)
    metadata = {
        "mode": config.mode.value,
        "preset": entry.name,
        "title": table.title,
        "quantity": table.quantity,
        "unphysical": "cells marked * lie past the sign flip of the energy bracket",
    }
    if entry.molecule is not None:
        mol = entry.molecule
        metadata["constants"] = f"D_e={mol.D_e!r} eV r_e={mol.r_e!r} Angstrom mu={mol.mu!r} amu"
    return {"header": table.header(), "rows": table.rows(), "metadata": metadata}


def sweep_node(state: RunState) -> RunState:
    config = state["config"]
    units, params = config.resolve()
    n = config.ns[0]
    sweep = sweep_gamma(units, params, n=n, gamma_max=config.gamma_max, steps=config.steps)
    metadata = {
        "mode": config.mode.value,
        "units": units.mode.value,
        "A": repr(params.A),
        "B": repr(params.B),
        "n": str(n),
        "quantity": sweep.quantity,
        "quadratic_fit_residual": f"{quadratic_fit_residual(sweep):.3e}",
    }
    if config.preset:
        metadata["preset"] = config.preset
    return {"header": ["gamma", sweep.quantity], "rows": sweep.rows(), "metadata": metadata}


def finalize_node(state: RunState) -> RunState:
    exit_code = 2 if state.get("verification_failed") else 0
    if exit_code:
        logger.error("asserted gamma = 0 cross-check failed")
    return {"exit_code": exit_code}


# ============================================================================
# GRAPH BUILDER
# ============================================================================

def create_run_graph():
    """Build the run pipeline.

    validate -> (spectrum | wavefunction | verify | table | sweep) -> finalize -> END

    Example:
        >>> graph = create_run_graph()
        >>> result = graph.invoke({"config": config, "notes": []})
    """
    workflow = StateGraph(RunState)

    workflow.add_node("validate", validate_node)
    workflow.add_node("spectrum", spectrum_node)
    workflow.add_node("wavefunction", wavefunction_node)
    workflow.add_node("verify", verify_node)
    workflow.add_node("table", table_node)
    workflow.add_node("sweep", sweep_node)
    workflow.add_node("finalize", finalize_node)

    workflow.set_entry_point("validate")

    workflow.add_conditional_edges(
        "validate",
        route_by_mode,
        {mode.value: mode.value for mode in RunMode},
    )

    for mode in RunMode:
        workflow.add_edge(mode.value, "finalize")

    workflow.add_edge("finalize", END)

    return workflow.compile()
