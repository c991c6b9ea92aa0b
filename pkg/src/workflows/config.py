"""
Run Configuration

RunConfig is what a single `run` executes: one mode, the problem it is
applied to, and the output options. It is built from a flat key = value file
(parsed with python-dotenv) overlaid with command-line values, and validated
on construction.

Process-wide numeric defaults come from the environment (PDM_* keys, see
.env.example).
"""

import os
from dataclasses import dataclass, field, fields
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Union

from dotenv import dotenv_values, load_dotenv

from src.errors import ConfigError, DomainError
from src.model import PotentialParams, UnitMode, UnitSystem, get_preset, list_presets
from src.verifier import DEFAULT_POINTS, DEFAULT_REFINEMENTS
from src.wavefunction import Measure

# Load environment variables
load_dotenv()


class RunMode(str, Enum):
    SPECTRUM = "spectrum"
    WAVEFUNCTION = "wavefunction"
    VERIFY = "verify"
    TABLE = "table"
    SWEEP = "sweep"


def _env(name: str, default: str, cast):
    raw = os.getenv(name, default)
    try:
        return cast(raw)
    except ValueError:
        raise ConfigError(f"{name}={raw!r} is not a valid {cast.__name__}") from None


def _optional_float(raw: str) -> Optional[float]:
    return float(raw) if raw.strip() else None


@dataclass(frozen=True)
class Settings:
    """Numeric defaults shared by every run.

    Attributes:
        x_min: Inner boundary of the solver grid (PDM_X_MIN); None scales it
            with the Bohr-like length of the problem
        grid_points: Coarsest solver grid size (PDM_GRID_POINTS)
        refinements: Number of solver grids (PDM_REFINEMENTS)
        tolerance: Relative cross-check tolerance (PDM_TOLERANCE)
        wavefunction_points: Samples per exported wavefunction (PDM_WAVEFUNCTION_POINTS)
    """
    x_min: Optional[float] = None
    grid_points: int = DEFAULT_POINTS
    refinements: int = DEFAULT_REFINEMENTS
    tolerance: float = 1e-3
    wavefunction_points: int = 2001

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            x_min=_env("PDM_X_MIN", "", _optional_float),
            grid_points=_env("PDM_GRID_POINTS", str(DEFAULT_POINTS), int),
            refinements=_env("PDM_REFINEMENTS", str(DEFAULT_REFINEMENTS), int),
            tolerance=_env("PDM_TOLERANCE", "1e-3", float),
            wavefunction_points=_env("PDM_WAVEFUNCTION_POINTS", "2001", int),
        )


@dataclass(frozen=True)
class RunConfig:
    """One validated run.

    Attributes:
        mode: What to compute
        units: Unit convention when no preset is given
        gammas: Mixing parameters (>= 0)
        A, B: Potential strengths when no preset is given
        preset: Registered preset name; overrides units, A, B
        mu: Reduced mass in amu for molecular units without a preset
        n_min, levels: Level range n_min .. n_min + levels - 1
        n: Single level for wavefunction and sweep runs
        out: Output CSV path, stdout when None
        tol: Relative tolerance of the verify cross-check
        verbose: Log the energy-formula inputs per cell
        gamma_max, steps: Sweep range [0, gamma_max] and number of points
        measure: Normalization measure for wavefunction runs
    """
    mode: RunMode
    units: UnitMode = UnitMode.ATOMIC
    gammas: Tuple[float, ...] = (0.0,)
    A: Optional[float] = None
    B: Optional[float] = None
    preset: Optional[str] = None
    mu: Optional[float] = None
    n_min: int = 0
    levels: int = 3
    n: Optional[int] = None
    out: Optional[str] = None
    tol: float = 1e-3
    verbose: bool = False
    gamma_max: float = 2.0
    steps: int = 41
    measure: Measure = Measure.DX
    settings: Settings = field(default_factory=Settings.from_env, compare=False)

    def __post_init__(self):
        if not self.gammas:
            raise ConfigError("at least one gamma is required")
        if any(not g >= 0 for g in self.gammas):
            raise ConfigError(f"gamma must be >= 0, got {', '.join(f'{g:g}' for g in self.gammas)}")
        if self.levels < 1:
            raise ConfigError(f"levels must be >= 1, got {self.levels}")
        if self.n_min < 0 or (self.n is not None and self.n < 0):
            raise ConfigError("level indices must be >= 0")
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if not self.gamma_max > 0 or self.steps < 2:
            raise ConfigError("a sweep needs gamma_max > 0 and at least two steps")
        if self.preset is not None:
            get_preset(self.preset)
        elif self.mode is RunMode.TABLE:
            raise ConfigError("table runs need a preset (" + ", ".join(list_presets()) + ")")
        else:
            if self.B is None:
                raise ConfigError("either a preset or B is required")
            if self.units is UnitMode.MOLECULAR and self.mu is None:
                raise ConfigError("molecular units need the reduced mass (mu) or a preset")
            try:
                PotentialParams(A=self.A or 0.0, B=self.B)
            except DomainError as exc:
                raise ConfigError(str(exc)) from None

    @property
    def ns(self) -> Tuple[int, ...]:
        if self.n is not None:
            return (self.n,)
        return tuple(range(self.n_min, self.n_min + self.levels))

    def resolve(self) -> Tuple[UnitSystem, PotentialParams]:
        """Unit system and potential the run applies to."""
        if self.preset is not None:
            entry = get_preset(self.preset)
            return entry.units, entry.params
        units = UnitSystem.molecular(self.mu) if self.units is UnitMode.MOLECULAR else UnitSystem.atomic()
        return units, PotentialParams(A=self.A or 0.0, B=self.B)

    def metadata(self) -> Dict[str, str]:
        """Run parameters for the CSV header, in a fixed order."""
        units, params = self.resolve()
        meta = {"mode": self.mode.value}
        if self.preset:
            meta["preset"] = self.preset
        meta["units"] = units.mode.value
        meta["A"] = repr(params.A)
        meta["B"] = repr(params.B)
        meta["gamma"] = ",".join(repr(g) for g in self.gammas)
        meta["levels"] = ",".join(str(n) for n in self.ns)
        return meta


def _to_bool(raw: str) -> bool:
    value = raw.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off", ""):
        return False
    raise ValueError(raw)


def _to_gammas(raw: Union[str, float, Tuple[float, ...], list]) -> Tuple[float, ...]:
    if isinstance(raw, (list, tuple)):
        return tuple(float(g) for g in raw)
    if isinstance(raw, (int, float)):
        return (float(raw),)
    return tuple(float(part) for part in raw.split(",") if part.strip())


_PARSERS = {
    "mode": RunMode,
    "units": UnitMode,
    "gammas": _to_gammas,
    "A": float,
    "B": float,
    "preset": str,
    "mu": float,
    "n_min": int,
    "levels": int,
    "n": int,
    "out": str,
    "tol": float,
    "verbose": lambda raw: raw if isinstance(raw, bool) else _to_bool(raw),
    "gamma_max": float,
    "steps": int,
    "measure": Measure,
}

_ALIASES = {"gamma": "gammas", "a": "A", "b": "B"}


def _canonical(key: str) -> str:
    key = key.strip().replace("-", "_")
    key = _ALIASES.get(key, key)
    if key not in _PARSERS:
        raise ConfigError(f"unknown configuration key {key!r}")
    return key


def load_config(path: Optional[Union[str, Path]] = None, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """Build a RunConfig from a key = value file and explicit overrides.

    Args:
        path: Config file; `#` comments and blank lines are ignored
        overrides: Values taking precedence over the file; None values are skipped

    Raises:
        ConfigError: unreadable file, unknown key, unparsable value, or invalid combination
    """
    raw: Dict[str, Any] = {}
    if path is not None:
        if not Path(path).is_file():
            raise ConfigError(f"config file not found: {path}")
        raw.update({_canonical(k): v for k, v in dotenv_values(path).items() if v is not None})
    for key, value in (overrides or {}).items():
        if value is not None:
            raw[_canonical(key)] = value

    if "mode" not in raw:
        raise ConfigError("mode is required")
    values = {}
    for key, value in raw.items():
        try:
            values[key] = _PARSERS[key](value)
        except ValueError:
            raise ConfigError(f"invalid value for {key}: {value!r}") from None
    known = {f.name for f in fields(RunConfig)}
    return RunConfig(**{k: v for k, v in values.items() if k in known})
