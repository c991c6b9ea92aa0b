"""
Run Workflow - Prefect Orchestration

Prefect flow and tasks around the run pipeline:
- execute the LangGraph pipeline for a validated RunConfig
- write the CSV artifact (retried, it is the only I/O)
- report the exit status
- batch the published tables, sweeps and the gamma = 0 cross-check
"""

from datetime import datetime
from pathlib import Path
from typing import Dict

from prefect import flow, task
from prefect.logging import get_run_logger

from src.workflows.artifacts import write_csv
from src.workflows.config import RunConfig, load_config
from src.workflows.pipeline import create_run_graph


# ============================================================================
# PREFECT TASKS
# ============================================================================

@task(name="Execute Run Pipeline")
def execute_run_task(config: RunConfig) -> dict:
    """Build the pipeline graph and push the config through it.

    Returns:
        Final pipeline state (metadata, header, rows, notes, exit_code)
    """
    logger = get_run_logger()
    logger.info(f"🔧 Running mode '{config.mode.value}'")

    graph = create_run_graph()
    start_time = datetime.now()
    result = graph.invoke({"config": config, "notes": []})
    duration = (datetime.now() - start_time).total_seconds()

    logger.info(f"✅ Pipeline finished in {duration:.2f}s with {len(result.get('rows', []))} rows")
    for note in result.get("notes", []):
        logger.info(f"📝 {note}")
    return result


@task(name="Write Artifact", retries=2)
def write_artifact_task(result: dict, out) -> str:
    """Write the CSV; stdout when out is None."""
    logger = get_run_logger()
    text = write_csv(out, result["metadata"], result["header"], result["rows"])
    if out is not None:
        logger.info(f"💾 Wrote {out}")
    return text


# ============================================================================
# PREFECT FLOWS
# ============================================================================

@flow(name="Displaced Mass Spectra Run", validate_parameters=False)
def run(config: RunConfig) -> int:
    """Dispatch one configured run and emit its artifact.

    Args:
        config: Validated run configuration

    Returns:
        0 on success, 2 when an asserted gamma = 0 cross-check fails

    Example:
        >>> run(load_config(overrides={"mode": "table", "preset": "coulomb-B5"}))
        0
    """
    logger = get_run_logger()
    result = execute_run_task(config)
    write_artifact_task(result, config.out)

    exit_code = result.get("exit_code", 0)
    if exit_code:
        logger.warning(f"⚠️ Verification failed, exit code {exit_code}")
    return exit_code


@flow(name="Reproduce Tables", validate_parameters=False)
def reproduce_tables(out_dir: str = "results") -> Dict[str, int]:
    """Both energy tables, their gamma sweeps and the gamma = 0 cross-check.

    Args:
        out_dir: Directory the CSV artifacts are written to

    Returns:
        Exit code per artifact name
    """
    logger = get_run_logger()
    runs = {
        "table_coulomb": dict(mode="table", preset="coulomb-B5"),
        "table_co": dict(mode="table", preset="CO"),
        "sweep_coulomb": dict(mode="sweep", preset="coulomb-B5"),
        "sweep_co": dict(mode="sweep", preset="CO"),
        "verify_coulomb": dict(mode="verify", preset="coulomb-B5", gammas="0", levels=6),
    }
    logger.info(f"🔄 Producing {len(runs)} artifacts in {out_dir}/")

    codes = {}
    for name, overrides in runs.items():
        config = load_config(overrides=dict(overrides, out=str(Path(out_dir) / f"{name}.csv")))
        codes[name] = run(config)

    failed = [name for name, code in codes.items() if code]
    if failed:
        logger.warning(f"⚠️ Non-zero exit for: {', '.join(failed)}")
    else:
        logger.info(f"✅ All {len(codes)} artifacts written")
    return codes
