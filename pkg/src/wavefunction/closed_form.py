"""
Closed-Form Normalization Chain

The analytic normalization built on the large-|z| split of 2F1:

    Gamma1 = (-1)^n G(2n+2p+2q) G(1+2p) / (G(n+2p+2q) G(1+n+2p))
    Gamma2 = (-1)^-(n+2p+2q) G(-2n-2p-2q) G(1+2p) / (G(-n) G(1-n-2q))
    I1 = Gamma1^2 B(1+2n+2p, -1-2n-2p-2q) 2F1(-2q, 1+2n+2p; -2q; 2)
    I2 = 2 Gamma1 Gamma2 B(1-2q, -1) 2F1(-2q, 1-2q; -2q; 2)
    I3 = Gamma2^2 B(1-2n-2p-4q, -1-2n-2p-2q) 2F1(-2q, 1-2n-2p-2q; -2q; 2)
    N = 1 / sqrt(2 (I1 + I2 + I3))

At physical parameters several factors sit on poles (G(-n) always, B(., -1)
always). Poles are recorded as flags and the affected terms left as None;
nothing is regularized.
"""

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.errors import DomainError, PDMError, PoleError, UnresolvedBranchError
from src.model import Deformation, PotentialParams, UnitSystem
from src.specfun import beta, gamma_sign, is_pole, log_gamma
from src.spectrum import SpectrumEntry
from src.wavefunction.normalization import build_wavefunction
from src.wavefunction.phi import Measure


@dataclass(frozen=True)
class NormalizationData:
    """Terms of the closed-form chain; None marks a term hit by a pole.

    Attributes:
        Gamma1, Gamma2: Coefficients of the large-|z| split
        I1, I2, I3: Beta-times-2F1 terms
        N: 1/sqrt(2 (I1 + I2 + I3)) when every term is finite and the sum positive
        pole_flags: One label per factor that hit a pole or left the reals
    """
    n: int
    p: float
    q: float
    Gamma1: Optional[float]
    Gamma2: Optional[float]
    I1: Optional[float]
    I2: Optional[float]
    I3: Optional[float]
    N: Optional[float]
    pole_flags: Tuple[str, ...]

    @property
    def regular(self) -> bool:
        return not self.pole_flags


@dataclass(frozen=True)
class NormalizationReport:
    """Numeric versus closed-form normalization of one level."""
    n: int
    gamma: float
    measure: Measure
    numeric_N: Optional[float]
    numeric_log_N: Optional[float]
    closed_form_N: Optional[float]
    pole_flags: Tuple[str, ...]
    ratio: Optional[float]
    error: Optional[str] = None


def normalization_constant_from_terms(I1: float, I2: float, I3: float) -> float:
    total = I1 + I2 + I3
    if not total > 0:
        raise DomainError(f"I1 + I2 + I3 must be positive, got {total:g}")
    return 1.0 / math.sqrt(2.0 * total)


def _integer(x: float) -> bool:
    return abs(x - round(x)) < 1e-9


def _sign_power(exponent: float, label: str, flags: List[str]) -> Optional[float]:
    """(-1)^exponent, real only for integer exponents."""
    if not _integer(exponent):
        flags.append(f"{label}: (-1)^{exponent:g} is complex")
        return None
    return -1.0 if int(round(exponent)) % 2 else 1.0


def _gamma_quotient(numerator: Sequence[Tuple[str, float]], denominator: Sequence[Tuple[str, float]],
                    flags: List[str]) -> Optional[float]:
    hit = [f"Gamma({label}) pole at {x:g}" for label, x in (*numerator, *denominator) if is_pole(x)]
    if hit:
        flags.extend(hit)
        return None
    log_value = sum(log_gamma(x) for _, x in numerator) - sum(log_gamma(x) for _, x in denominator)
    sign = math.prod(gamma_sign(x) for _, x in (*numerator, *denominator))
    return sign * math.exp(log_value) if log_value < 709.0 else sign * math.inf


def _beta_term(r: float, r2: float, label: str, flags: List[str]) -> Optional[float]:
    try:
        return beta(r, r2)
    except PoleError as exc:
        flags.append(f"{label}: {exc}")
        return None


def _shifted_power(b: float, label: str, flags: List[str]) -> Optional[float]:
    """2F1(c, b; c; 2) = (1 - 2)^-b."""
    return _sign_power(-b, label, flags)


def _product(*factors: Optional[float]) -> Optional[float]:
    if any(f is None for f in factors):
        return None
    return math.prod(factors)


def normalization_chain(n: int, p: float, q: float) -> NormalizationData:
    """Evaluate the chain for explicit (n, p, q); any real n is accepted."""
    flags: List[str] = []
    s1 = 2 * n + 2 * p + 2 * q

    phase1 = _sign_power(n, "Gamma1 phase", flags)
    g1 = _product(phase1, _gamma_quotient(
        [("2n+2p+2q", s1), ("1+2p", 1 + 2 * p)],
        [("n+2p+2q", n + 2 * p + 2 * q), ("1+n+2p", 1 + n + 2 * p)], flags))
    phase2 = _sign_power(-(n + 2 * p + 2 * q), "Gamma2 phase", flags)
    g2 = _product(phase2, _gamma_quotient(
        [("-2n-2p-2q", -s1), ("1+2p", 1 + 2 * p)],
        [("-n", -n), ("1-n-2q", 1 - n - 2 * q)], flags))

    i1 = _product(
        g1, g1,
        _beta_term(1 + 2 * n + 2 * p, -1 - s1, "I1 Beta", flags),
        _shifted_power(1 + 2 * n + 2 * p, "I1 2F1", flags),
    )
    i2 = _product(
        2.0, g1, g2,
        _beta_term(1 - 2 * q, -1.0, "I2 Beta", flags),
        _shifted_power(1 - 2 * q, "I2 2F1", flags),
    )
    i3 = _product(
        g2, g2,
        _beta_term(1 - 2 * n - 2 * p - 4 * q, -1 - s1, "I3 Beta", flags),
        _shifted_power(1 - s1, "I3 2F1", flags),
    )

    N = None
    if not flags and i1 + i2 + i3 > 0:
        N = normalization_constant_from_terms(i1, i2, i3)
    return NormalizationData(n=n, p=p, q=q, Gamma1=g1, Gamma2=g2, I1=i1, I2=i2, I3=i3, N=N,
                             pole_flags=tuple(flags))


def closed_form_normalization(entry: SpectrumEntry) -> NormalizationData:
    """The chain at a spectrum entry's exponents.

    Raises:
        UnresolvedBranchError: gamma = 0, where p and q are undefined
    """
    if entry.p is None or entry.q is None:
        raise UnresolvedBranchError(f"level n={entry.n} has no exponents at gamma = {entry.gamma:g}")
    return normalization_chain(entry.n, entry.p, entry.q)


def compare_normalizations(
    entry: SpectrumEntry,
    units: UnitSystem,
    d: Deformation,
    params: PotentialParams,
    measure: Measure = Measure.DX,
    closed_form: Optional[NormalizationData] = None,
) -> NormalizationReport:
    """Numeric N next to the closed-form N or its pole flags.

    Failures on either side end up in the report's error field.
    """
    numeric_N = numeric_log_N = None
    errors: List[str] = []
    try:
        spec = build_wavefunction(entry, units, d, params, measure)
        numeric_N, numeric_log_N = spec.norm_constant, spec.log_norm
    except PDMError as exc:
        errors.append(f"numeric: {exc}")
    if closed_form is None:
        try:
            closed_form = closed_form_normalization(entry)
        except PDMError as exc:
            errors.append(f"closed form: {exc}")

    closed_form_N = closed_form.N if closed_form is not None else None
    ratio = None
    if numeric_N is not None and closed_form_N is not None and math.isfinite(numeric_N):
        ratio = numeric_N / closed_form_N
    return NormalizationReport(
        n=entry.n,
        gamma=entry.gamma,
        measure=measure,
        numeric_N=numeric_N,
        numeric_log_N=numeric_log_N,
        closed_form_N=closed_form_N,
        pole_flags=closed_form.pole_flags if closed_form is not None else (),
        ratio=ratio,
        error="; ".join(errors) or None,
    )
