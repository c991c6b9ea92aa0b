"""
Numeric Normalization

Quadrature of |phi|^2 under the chosen measure over (0, infinity). The
integral is accumulated over doubling segments until a segment's share drops
below TAIL_FRACTION of the running total; whatever lies beyond is handed to
quad's infinite-interval transform in one piece.
"""

import math

import numpy as np
from prefect.logging import get_logger

from src.errors import NonNormalizableError, UnresolvedBranchError
from src.model import Deformation, PotentialParams, UnitSystem
from src.specfun import integrate
from src.spectrum import SpectrumEntry
from src.wavefunction.phi import Measure, WavefunctionSpec, log_phi

logger = get_logger(__name__)

TAIL_FRACTION = 1e-12
MAX_DOUBLINGS = 64
QUAD_TOL = 1e-10


def decay_exponent(entry: SpectrumEntry, measure: Measure = Measure.DX) -> float:
    """Power k with |phi|^2 w(x) ~ x^k as x -> infinity."""
    k = 2.0 * (entry.p + entry.q + entry.n)
    return k - 1.0 if measure is Measure.WEIGHTED else k


def check_normalizable(entry: SpectrumEntry, measure: Measure = Measure.DX) -> None:
    """Raise NonNormalizableError unless |phi|^2 is integrable at both ends."""
    if entry.p is None:
        raise UnresolvedBranchError(f"level n={entry.n} has no exponents at gamma = {entry.gamma:g}")
    k = decay_exponent(entry, measure)
    if not k < -1.0:
        raise NonNormalizableError(
            f"level n={entry.n} at gamma={entry.gamma:g}: |phi|^2 ~ x^{k:.4g} is not integrable at infinity"
        )
    if not 2.0 * entry.q > -1.0:
        raise NonNormalizableError(f"level n={entry.n}: |phi|^2 ~ x^{2 * entry.q:.4g} is not integrable at 0")


def _weight(measure: Measure, d: Deformation, x: float) -> float:
    if measure is Measure.DZ:
        return d.gamma
    if measure is Measure.WEIGHTED:
        return 1.0 / (1.0 + d.gamma * x)
    return 1.0


def envelope_peak(entry: SpectrumEntry, gamma: float) -> float:
    """Maximum of the z^p (z-1)^q envelope, or 1/(gamma |p|) if that is smaller."""
    p_abs, q = abs(entry.p), entry.q
    scale = 1.0 / (gamma * p_abs)
    if q > 0 and p_abs > q:
        scale = max(scale, q / (gamma * (p_abs - q)))
    return scale


def normalize_numeric(spec: WavefunctionSpec, tol: float = QUAD_TOL) -> WavefunctionSpec:
    """Return spec with ln N set so that the integral of |phi|^2 is 1.

    Renormalizing an already normalized spec leaves ln N unchanged up to
    quadrature error.

    Raises:
        NonNormalizableError: the decay test fails or the doubling cap is reached
        IntegrationError: a segment misses tol
    """
    entry, d = spec.entry, spec.deformation
    check_normalizable(entry, spec.measure)

    x0 = envelope_peak(entry, d.gamma)
    samples_x = x0 * np.geomspace(1e-3, 1e4, 400)
    log_abs, _ = log_phi(spec, samples_x)
    # Integrand is rescaled so its maximum is O(1).
    log_scale = float(np.max(2.0 * log_abs))

    def integrand(x: float) -> float:
        la, _ = log_phi(spec, x)
        return math.exp(2.0 * float(la) - log_scale) * _weight(spec.measure, d, x)

    total = integrate(integrand, 0.0, x0, tol=tol).value
    lo = x0
    for _ in range(MAX_DOUBLINGS):
        hi = 2.0 * lo
        segment = integrate(integrand, lo, hi, tol=tol).value
        total += segment
        lo = hi
        if segment < TAIL_FRACTION * total:
            break
    else:
        raise NonNormalizableError(f"level n={entry.n}: tail still significant after {MAX_DOUBLINGS} doublings")

    total += integrate(integrand, lo, np.inf, tol=tol).value
    if not total > 0:
        raise NonNormalizableError(f"level n={entry.n}: vanishing norm integral")
    logger.debug("level n=%d normalized on (0, %.4g) under %s", entry.n, lo, spec.measure.value)
    log_norm = spec.log_norm - 0.5 * (math.log(total) + log_scale)
    return spec.with_log_norm(log_norm, x_max=lo)


def norm_integral(spec: WavefunctionSpec, tol: float = QUAD_TOL) -> float:
    """Integral of |phi|^2 under the spec's measure; 1 for a normalized spec."""
    if spec.x_max is None:
        raise NonNormalizableError("spec has not been normalized yet")
    d = spec.deformation

    def integrand(x: float) -> float:
        la, _ = log_phi(spec, x)
        return math.exp(2.0 * float(la)) * _weight(spec.measure, d, x)

    x0 = envelope_peak(spec.entry, d.gamma)
    total, lo = integrate(integrand, 0.0, x0, tol=tol).value, x0
    while lo < spec.x_max:
        total += integrate(integrand, lo, 2.0 * lo, tol=tol).value
        lo *= 2.0
    return total + integrate(integrand, lo, np.inf, tol=tol).value


def build_wavefunction(
    entry: SpectrumEntry,
    units: UnitSystem,
    d: Deformation,
    params: PotentialParams,
    measure: Measure = Measure.DX,
) -> WavefunctionSpec:
    """Normalized wavefunction of a spectrum entry."""
    return normalize_numeric(WavefunctionSpec(entry=entry, units=units, deformation=d, params=params, measure=measure))
