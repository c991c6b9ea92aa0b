"""Wavefunction evaluation, normalization, closed-form chain and residual."""

import math

import numpy as np
import pytest

from src.errors import DomainError, NonNormalizableError, UnresolvedBranchError
from src.model import Deformation, PotentialParams, UnitSystem
from src.spectrum import energy_analytic
from src.wavefunction import (
    Measure,
    NormalizationData,
    WavefunctionSpec,
    build_wavefunction,
    check_normalizable,
    closed_form_normalization,
    compare_normalizations,
    count_nodes,
    decay_exponent,
    envelope_peak,
    evaluate_phi,
    log_phi,
    norm_integral,
    normalization_chain,
    normalization_constant_from_terms,
    normalize_numeric,
    sample_wavefunction,
    stationary_residual,
)

ATOMIC = UnitSystem.atomic()
COULOMB = PotentialParams(A=0.0, B=5.0)
LEVELS = [(gamma, n) for gamma in (0.1, 0.5) for n in (0, 1, 2)]


def _wavefunction(gamma, n, measure=Measure.DX, params=COULOMB):
    d = Deformation(gamma)
    entry = energy_analytic(n, ATOMIC, d, params)
    return build_wavefunction(entry, ATOMIC, d, params, measure)


def _samples(spec, points=2001):
    x = np.geomspace(1e-3 * envelope_peak(spec.entry, spec.deformation.gamma), spec.x_max, points)
    return sample_wavefunction(spec, x)


@pytest.mark.parametrize("gamma, n", LEVELS)
def test_normalized_to_one(gamma, n):
    spec = _wavefunction(gamma, n)
    assert norm_integral(spec) == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("gamma, n", LEVELS)
def test_node_count_equals_level(gamma, n):
    samples = _samples(_wavefunction(gamma, n))
    assert count_nodes([s[2] for s in samples]) == n


@pytest.mark.parametrize("gamma, n", LEVELS)
def test_stationary_equation_residual(gamma, n):
    assert stationary_residual(_wavefunction(gamma, n)) < 1e-4


def test_inverse_square_core_wavefunction():
    params = PotentialParams(A=1.0, B=5.0)
    spec = _wavefunction(0.1, 1, params=params)
    assert spec.entry.q == pytest.approx(2.0)
    assert norm_integral(spec) == pytest.approx(1.0, abs=1e-6)
    assert stationary_residual(spec) < 1e-4


def test_first_excited_node_position():
    # 2F1(-1, -49; -51; z) vanishes at z = 51/49
    spec = _wavefunction(0.1, 1)
    x_node = (51.0 / 49.0 - 1.0) / 0.1
    assert evaluate_phi(spec, x_node) == pytest.approx(0.0, abs=1e-10)
    assert evaluate_phi(spec, 0.5 * x_node) * evaluate_phi(spec, 2.0 * x_node) < 0


def test_normalization_is_idempotent():
    spec = _wavefunction(0.1, 0)
    again = normalize_numeric(spec)
    assert again.log_norm == pytest.approx(spec.log_norm, abs=1e-8)


def test_scaled_wavefunction_renormalizes_to_same_constant():
    spec = _wavefunction(0.5, 1)
    doubled = spec.with_log_norm(spec.log_norm + math.log(2.0))
    assert norm_integral(doubled) == pytest.approx(4.0, rel=1e-6)
    assert normalize_numeric(doubled).norm_constant == pytest.approx(spec.norm_constant, rel=1e-7)


def test_measures():
    dx = _wavefunction(0.5, 0)
    dz = _wavefunction(0.5, 0, Measure.DZ)
    weighted = _wavefunction(0.5, 0, Measure.WEIGHTED)
    # dz = gamma dx
    assert dz.norm_constant == pytest.approx(dx.norm_constant / math.sqrt(0.5), rel=1e-7)
    assert norm_integral(weighted) == pytest.approx(1.0, abs=1e-6)
    assert weighted.norm_constant > dx.norm_constant
    assert decay_exponent(weighted.entry, Measure.WEIGHTED) == decay_exponent(dx.entry) - 1.0


def test_unphysical_level_is_not_normalizable():
    with pytest.raises(NonNormalizableError):
        _wavefunction(1.0, 3)


def test_decay_test_follows_physicality():
    d = Deformation(1.0)
    check_normalizable(energy_analytic(1, ATOMIC, d, COULOMB))
    with pytest.raises(NonNormalizableError, match="not integrable at infinity"):
        check_normalizable(energy_analytic(4, ATOMIC, d, COULOMB))
    with pytest.raises(UnresolvedBranchError):
        check_normalizable(energy_analytic(0, ATOMIC, Deformation(0.0), COULOMB))


def test_constant_mass_entry_has_no_wavefunction():
    with pytest.raises(UnresolvedBranchError):
        _wavefunction(0.0, 0)


def test_log_phi_domain():
    spec = _wavefunction(0.1, 0)
    with pytest.raises(DomainError):
        log_phi(spec, np.array([0.1, 0.0]))
    log_abs, sign = log_phi(spec, np.array([0.1, 1.0]))
    assert np.all(sign > 0)
    assert np.all(np.isfinite(log_abs))


def test_sample_rows():
    spec = _wavefunction(0.1, 0)
    rows = sample_wavefunction(spec, [0.1, 0.2])
    x, z, phi, phi_sq = rows[1]
    assert x == 0.2
    assert z == pytest.approx(1.02)
    assert phi_sq == pytest.approx(phi * phi)
    lower, upper = spec.domain
    assert lower == 1.0
    assert upper == pytest.approx(1.0 + 0.1 * spec.x_max)


def test_unnormalized_spec_has_no_norm_integral():
    entry = energy_analytic(0, ATOMIC, Deformation(0.1), COULOMB)
    spec = WavefunctionSpec(entry=entry, units=ATOMIC, deformation=Deformation(0.1), params=COULOMB)
    with pytest.raises(NonNormalizableError):
        norm_integral(spec)


def test_count_nodes_skips_exact_zeros():
    assert count_nodes([1.0, 0.0, -1.0, -2.0, 0.0, 3.0]) == 2
    assert count_nodes([0.0, 0.0]) == 0


# =============================================================================
# Closed-form chain
# =============================================================================

def test_normalization_constant_from_terms():
    assert normalization_constant_from_terms(0.1, 0.2, 0.2) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        normalization_constant_from_terms(0.1, -0.3, 0.1)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_chain_flags_poles_at_physical_parameters(n):
    entry = energy_analytic(n, ATOMIC, Deformation(0.1), COULOMB)
    data = closed_form_normalization(entry)
    assert not data.regular
    assert data.N is None
    assert any("Gamma(-n)" in flag for flag in data.pole_flags)
    assert any(flag.startswith("I2 Beta") for flag in data.pole_flags)
    assert data.Gamma2 is None and data.I2 is None


def test_chain_flags_complex_phase_for_fractional_index():
    data = normalization_chain(0.5, -3.3, 0.25)
    assert any("complex" in flag for flag in data.pole_flags)


def test_chain_needs_exponents():
    entry = energy_analytic(0, ATOMIC, Deformation(0.0), COULOMB)
    with pytest.raises(UnresolvedBranchError):
        closed_form_normalization(entry)


def test_comparison_reports_pole_flags():
    d = Deformation(0.1)
    entry = energy_analytic(0, ATOMIC, d, COULOMB)
    report = compare_normalizations(entry, ATOMIC, d, COULOMB)
    assert report.numeric_N is not None and report.numeric_N > 0
    assert report.closed_form_N is None
    assert report.ratio is None
    assert report.pole_flags
    assert report.error is None


def test_comparison_ratio_with_regular_closed_form():
    d = Deformation(0.1)
    entry = energy_analytic(0, ATOMIC, d, COULOMB)
    numeric = build_wavefunction(entry, ATOMIC, d, COULOMB).norm_constant
    regular = NormalizationData(n=0, p=entry.p, q=entry.q, Gamma1=1.0, Gamma2=1.0,
                                I1=0.1, I2=0.1, I3=0.1, N=numeric / 2.0, pole_flags=())
    report = compare_normalizations(entry, ATOMIC, d, COULOMB, closed_form=regular)
    assert report.ratio == pytest.approx(2.0, rel=1e-12)
    assert report.pole_flags == ()


def test_comparison_collects_errors():
    d = Deformation(0.0)
    entry = energy_analytic(0, ATOMIC, d, COULOMB)
    report = compare_normalizations(entry, ATOMIC, d, COULOMB)
    assert report.numeric_N is None and report.closed_form_N is None
    assert "numeric:" in report.error and "closed form:" in report.error
