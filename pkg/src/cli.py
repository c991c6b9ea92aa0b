"""
pdm-spectra CLI
===============

Command-line interface for the displaced-mass spectra toolkit.

Usage:
    pdm-spectra spectrum --gamma 0 --gamma 0.1 --A 0 --B 5 --levels 6
    pdm-spectra wavefunction --gamma 0.1 --B 5 --n 1 --out phi.csv
    pdm-spectra verify --gamma 0 --A 1 --B 5 --levels 3
    pdm-spectra table --preset coulomb-B5
    pdm-spectra sweep --preset CO --gamma-max 2 --steps 41

Exit codes: 0 success, 1 usage or configuration error, 2 verification failure.
"""

import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import click
import typer

from src.errors import PDMError
from src.workflows import load_config, run

app = typer.Typer(
    name="pdm-spectra",
    help="Bound states of A/x^2 - B/x with a displacement-operator position-dependent mass.",
    add_completion=False,
)


# =============================================================================
# shared options
# =============================================================================

def _gamma_option():
    return typer.Option(None, "--gamma", help="Mixing parameter (repeatable)")


def _config_option():
    return typer.Option(None, "--config", help="key = value config file; flags override it")


def _execute(mode: str, config: Optional[Path], overrides: Dict[str, Any]) -> None:
    """Load, validate and run; map failures to exit codes."""
    values = {k: v for k, v in overrides.items() if v is not None and v != []}
    values["mode"] = mode
    try:
        run_config = load_config(config, values)
        exit_code = run(run_config)
    except PDMError as exc:
        message = " ".join(str(exc).split())
        typer.echo(f"error: {message}", err=True)
        raise typer.Exit(1)
    if exit_code:
        raise typer.Exit(exit_code)


# =============================================================================
# commands
# =============================================================================

@app.command()
def spectrum(
    gamma: Optional[List[float]] = _gamma_option(),
    A: Optional[float] = typer.Option(None, "--A", help="Inverse-square strength"),
    B: Optional[float] = typer.Option(None, "--B", help="Coulomb strength"),
    preset: Optional[str] = typer.Option(None, "--preset", help="Registered preset (CO, coulomb-B5)"),
    units: Optional[str] = typer.Option(None, "--units", help="atomic | molecular"),
    mu: Optional[float] = typer.Option(None, "--mu", help="Reduced mass in amu (molecular units)"),
    levels: Optional[int] = typer.Option(None, "--levels", help="Number of levels from n = 0"),
    n: Optional[int] = typer.Option(None, "--n", help="Single level index"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV (stdout if omitted)"),
    verbose: bool = typer.Option(False, "--verbose", help="Log the energy-formula inputs per level"),
    config: Optional[Path] = _config_option(),
):
    """Closed-form levels with exponents, hypergeometric parameters and physicality."""
    _execute("spectrum", config, dict(gammas=gamma, A=A, B=B, preset=preset, units=units, mu=mu,
                                      levels=levels, n=n, out=_path(out), verbose=verbose or None))


@app.command()
def wavefunction(
    gamma: Optional[List[float]] = _gamma_option(),
    A: Optional[float] = typer.Option(None, "--A", help="Inverse-square strength"),
    B: Optional[float] = typer.Option(None, "--B", help="Coulomb strength"),
    preset: Optional[str] = typer.Option(None, "--preset", help="Registered preset"),
    units: Optional[str] = typer.Option(None, "--units", help="atomic | molecular"),
    mu: Optional[float] = typer.Option(None, "--mu", help="Reduced mass in amu"),
    levels: Optional[int] = typer.Option(None, "--levels", help="Number of levels from n = 0"),
    n: Optional[int] = typer.Option(None, "--n", help="Single level index"),
    measure: Optional[str] = typer.Option(None, "--measure", help="dx | dz | weighted"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV (stdout if omitted)"),
    config: Optional[Path] = _config_option(),
):
    """Normalized wavefunction samples (x, z, phi, |phi|^2)."""
    _execute("wavefunction", config, dict(gammas=gamma, A=A, B=B, preset=preset, units=units, mu=mu,
                                          levels=levels, n=n, measure=measure, out=_path(out)))


@app.command()
def verify(
    gamma: Optional[List[float]] = _gamma_option(),
    A: Optional[float] = typer.Option(None, "--A", help="Inverse-square strength"),
    B: Optional[float] = typer.Option(None, "--B", help="Coulomb strength"),
    preset: Optional[str] = typer.Option(None, "--preset", help="Registered preset"),
    units: Optional[str] = typer.Option(None, "--units", help="atomic | molecular"),
    mu: Optional[float] = typer.Option(None, "--mu", help="Reduced mass in amu"),
    levels: Optional[int] = typer.Option(None, "--levels", help="Levels n = 0 .. levels - 1"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Relative match tolerance"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV (stdout if omitted)"),
    config: Optional[Path] = _config_option(),
):
    """Cross-check closed-form energies against the finite-difference solver."""
    _execute("verify", config, dict(gammas=gamma, A=A, B=B, preset=preset, units=units, mu=mu,
                                    levels=levels, tol=tol, out=_path(out)))


@app.command()
def table(
    preset: Optional[str] = typer.Option(None, "--preset", help="coulomb-B5 or CO"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV (stdout if omitted)"),
    verbose: bool = typer.Option(False, "--verbose", help="Log the energy-formula inputs per cell"),
    config: Optional[Path] = _config_option(),
):
    """Energy table for n = 0..5 and gamma in {0, 0.1, 0.5, 1}."""
    _execute("table", config, dict(preset=preset, out=_path(out), verbose=verbose or None))


@app.command()
def sweep(
    A: Optional[float] = typer.Option(None, "--A", help="Inverse-square strength"),
    B: Optional[float] = typer.Option(None, "--B", help="Coulomb strength"),
    preset: Optional[str] = typer.Option(None, "--preset", help="Registered preset"),
    units: Optional[str] = typer.Option(None, "--units", help="atomic | molecular"),
    mu: Optional[float] = typer.Option(None, "--mu", help="Reduced mass in amu"),
    n: Optional[int] = typer.Option(None, "--n", help="Level index (default 0)"),
    gamma_max: Optional[float] = typer.Option(None, "--gamma-max", help="Upper end of the gamma range"),
    steps: Optional[int] = typer.Option(None, "--steps", help="Number of gamma values"),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV (stdout if omitted)"),
    config: Optional[Path] = _config_option(),
):
    """One level across a gamma range, plot-ready."""
    _execute("sweep", config, dict(A=A, B=B, preset=preset, units=units, mu=mu, n=n,
                                   gamma_max=gamma_max, steps=steps, out=_path(out)))


def _path(value: Optional[Path]) -> Optional[str]:
    return None if value is None else str(value)


def main() -> None:
    """Console entry point; usage errors exit with 1 like configuration errors."""
    try:
        code = app(standalone_mode=False)
    except click.UsageError as exc:
        typer.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(1)
    except click.Abort:
        sys.exit(1)
    sys.exit(code or 0)


if __name__ == "__main__":
    main()
