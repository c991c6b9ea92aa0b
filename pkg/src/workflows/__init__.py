"""
Workflows Module

Run configuration, table and sweep builders, CSV artifacts, the LangGraph run
pipeline and the Prefect flow that drives it.
"""

from src.workflows.config import RunConfig, RunMode, Settings, load_config
from src.workflows.tables import (
    EnergyTable,
    SweepResult,
    TableCell,
    build_table,
    quadratic_fit_residual,
    sweep_gamma,
    table_coulomb,
    table_molecule,
)
from src.workflows.artifacts import render_csv, write_csv
from src.workflows.pipeline import RunState, create_run_graph
from src.workflows.flows import execute_run_task, reproduce_tables, run, write_artifact_task

__all__ = [
    "RunConfig",
    "RunMode",
    "Settings",
    "load_config",
    "EnergyTable",
    "SweepResult",
    "TableCell",
    "build_table",
    "quadratic_fit_residual",
    "sweep_gamma",
    "table_coulomb",
    "table_molecule",
    "render_csv",
    "write_csv",
    "RunState",
    "create_run_graph",
    "execute_run_task",
    "reproduce_tables",
    "run",
    "write_artifact_task",
]
