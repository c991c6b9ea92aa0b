"""Closed-form spectrum, limits, branch selection and physicality."""

import math

import pytest
from hypothesis import given, strategies as st

from src.errors import BranchError, DomainError, ImaginaryExponentError, ScatteringRegimeError
from src.model import CO, Deformation, PotentialParams, UnitSystem
from src.spectrum import (
    QRoot,
    classify_physical,
    energy_analytic,
    energy_breakdown,
    energy_limit_constant_mass,
    energy_limit_coulomb,
    energy_limit_coulomb_pdm,
    energy_principal,
    equation_identities,
    hypergeometric_parameters,
    ode_coefficients,
    pq_parameters,
    select_branches,
    spectrum_levels,
    validity_rule,
    wavefunction_parameters,
)

ATOMIC = UnitSystem.atomic()
COULOMB = PotentialParams(A=0.0, B=5.0)


# -E for A = 0, B = 5 (atomic units), rows n = 0..5, columns gamma = 0, 0.1, 0.5, 1
COULOMB_TABLE = {
    0: (12.5, 12.25125, 11.28125, 10.125),
    1: (3.125, 2.88, 2.0, 1.125),
    2: (1.38889, 1.15014, 0.42014, 0.01389),
    3: (0.78125, 0.55125, 0.03125, 0.28125),
    4: (0.5, 0.28125, 0.03125, 1.125),
    5: (0.34722, 0.14222, 0.22222, 2.34722),
}
TABLE_GAMMAS = (0.0, 0.1, 0.5, 1.0)
UNPHYSICAL = {(4, 0.5), (5, 0.5), (3, 1.0), (4, 1.0), (5, 1.0)}


@pytest.mark.parametrize("n", sorted(COULOMB_TABLE))
@pytest.mark.parametrize("column", range(4))
def test_coulomb_table_cells(n, column):
    gamma = TABLE_GAMMAS[column]
    entry = energy_analytic(n, ATOMIC, Deformation(gamma), COULOMB)
    assert -entry.E == pytest.approx(COULOMB_TABLE[n][column], abs=6e-6)
    assert entry.physical == ((n, gamma) not in UNPHYSICAL)
    assert entry.E_shifted is None


@pytest.mark.parametrize(
    "gamma, n, expected, tol",
    [
        (0.0, 0, 0.051710, 5e-3),
        (0.0, 5, 0.549178, 5e-3),
        (0.5, 2, 0.399400, 1e-2),
        (1.0, 0, 0.111846, 1e-2),
        (1.0, 4, 0.958530, 1e-2),
    ],
)
def test_molecule_table_cells(gamma, n, expected, tol):
    entry = energy_analytic(n, CO.units(), Deformation(gamma), CO.to_params())
    assert entry.E_shifted == pytest.approx(expected, abs=tol)
    assert entry.physical


def test_molecule_levels_increase_with_n():
    entries = spectrum_levels(range(6), CO.units(), Deformation(0.1), CO.to_params())
    shifted = [e.E_shifted for e in entries]
    assert shifted == sorted(shifted)
    assert all(e.N == e.n + 1 for e in entries)


@given(
    n=st.integers(min_value=0, max_value=8),
    gamma=st.floats(min_value=0.0, max_value=2.0),
    A=st.floats(min_value=0.0, max_value=5.0),
    B=st.floats(min_value=0.1, max_value=10.0),
)
def test_radial_and_principal_forms_agree(n, gamma, A, B):
    params = PotentialParams(A=A, B=B)
    E = energy_breakdown(n, ATOMIC, Deformation(gamma), params).E
    assert energy_principal(n + 1, ATOMIC, Deformation(gamma), params) == pytest.approx(E, rel=1e-12, abs=1e-12)


@given(
    n=st.integers(min_value=0, max_value=8),
    gamma=st.floats(min_value=0.0, max_value=2.0),
    B=st.floats(min_value=0.1, max_value=10.0),
)
def test_energy_never_positive(n, gamma, B):
    assert energy_breakdown(n, ATOMIC, Deformation(gamma), PotentialParams(A=1.0, B=B)).E <= 0.0


def test_constant_mass_limits():
    params = PotentialParams(A=1.0, B=5.0)
    for N in range(1, 6):
        E = energy_analytic(N - 1, ATOMIC, Deformation(0.0), params).E
        assert energy_limit_constant_mass(N, params, ATOMIC) == pytest.approx(E, rel=1e-13)
        coulomb = energy_analytic(N - 1, ATOMIC, Deformation(0.0), COULOMB).E
        assert energy_limit_coulomb(N, 5.0, ATOMIC) == pytest.approx(coulomb, rel=1e-13)
        assert coulomb == pytest.approx(-12.5 / N ** 2, rel=1e-13)


@pytest.mark.parametrize("gamma", [0.1, 0.5, 1.0])
def test_coulomb_pdm_limit_conventions(gamma):
    for N in range(1, 5):
        E = energy_analytic(N - 1, ATOMIC, Deformation(gamma), COULOMB).E
        variants = energy_limit_coulomb_pdm(N, gamma, 5.0, ATOMIC)
        assert variants.consistent == pytest.approx(E, rel=1e-12, abs=1e-12)
        assert not math.isclose(variants.printed, E, rel_tol=1e-6)


def test_level_index_validation():
    with pytest.raises(DomainError):
        energy_breakdown(-1, ATOMIC, Deformation(0.1), COULOMB)
    with pytest.raises(DomainError):
        energy_breakdown(0, ATOMIC, Deformation(0.1), PotentialParams(A=0.0, B=0.0))
    with pytest.raises(DomainError):
        energy_principal(0, ATOMIC, Deformation(0.1), COULOMB)


# =============================================================================
# Coefficients and branches
# =============================================================================

def test_ode_coefficients_ground_state():
    E = energy_analytic(0, ATOMIC, Deformation(0.1), COULOMB).E
    coeffs = ode_coefficients(ATOMIC, Deformation(0.1), COULOMB, E)
    assert coeffs.M == pytest.approx(200.0)
    assert coeffs.a1 == pytest.approx(-2550.25, rel=1e-12)
    assert coeffs.a2 == pytest.approx(-100.0)
    assert coeffs.a3 == 0.0


def test_coefficients_undefined_without_deformation():
    with pytest.raises(DomainError):
        ode_coefficients(ATOMIC, Deformation(0.0), COULOMB, -1.0)


def test_first_excited_state_parameters():
    entry = energy_analytic(1, ATOMIC, Deformation(0.1), COULOMB)
    assert entry.p == pytest.approx(-26.0, rel=1e-12)
    assert entry.q == pytest.approx(1.0)
    assert entry.a == pytest.approx(-1.0, abs=1e-9)
    assert entry.b == pytest.approx(-49.0, rel=1e-12)
    assert entry.c == pytest.approx(53.0, rel=1e-12)
    assert entry.branch_record.describe() == "p-/q-upper/s+"
    hyp = wavefunction_parameters(entry)
    assert hyp.a == -1.0
    assert hyp.c == pytest.approx(-51.0, rel=1e-12)


def test_reduced_equation_identities_hold():
    for n in range(4):
        entry = energy_analytic(n, ATOMIC, Deformation(0.5), PotentialParams(A=0.3, B=5.0))
        coeffs = ode_coefficients(ATOMIC, Deformation(0.5), PotentialParams(A=0.3, B=5.0), entry.E)
        a_plus_b, a_times_b = equation_identities(entry.p, entry.q, coeffs)
        assert entry.a + entry.b == pytest.approx(a_plus_b, rel=1e-10)
        assert entry.a * entry.b == pytest.approx(a_times_b, rel=1e-9, abs=1e-9)


@pytest.mark.parametrize("gamma", [0.1, 0.5, 1.0])
def test_quantization_residual_coulomb(gamma):
    for entry in spectrum_levels(range(6), ATOMIC, Deformation(gamma), COULOMB):
        assert entry.quantization_residual < 1e-9


@pytest.mark.parametrize("gamma", [0.1, 0.5, 1.0])
def test_quantization_residual_molecule(gamma):
    for entry in spectrum_levels(range(6), CO.units(), Deformation(gamma), CO.to_params()):
        assert entry.quantization_residual < 1e-6


def test_unphysical_level_resolves_on_other_imaginary_sign():
    entry = energy_analytic(3, ATOMIC, Deformation(1.0), COULOMB)
    assert not entry.physical
    assert entry.branch_record.imag_sign == -1
    assert entry.quantization_residual < 1e-9


def test_branch_machinery_needs_deformation():
    entry = energy_analytic(0, ATOMIC, Deformation(0.0), COULOMB)
    assert entry.p is None and entry.branch_record is None
    assert entry.quantization_residual is None
    with pytest.raises(BranchError):
        select_branches(0, ATOMIC, Deformation(0.0), COULOMB)


def test_imaginary_exponent_and_scattering_regime():
    with pytest.raises(ImaginaryExponentError):
        pq_parameters(ATOMIC, Deformation(0.1), COULOMB, E=1.0)
    pq = pq_parameters(ATOMIC, Deformation(0.1), PotentialParams(A=1.0, B=5.0), E=-1.0, q_root=QRoot.LOWER)
    assert pq.q == pq.q_lower < 0 < pq.q_upper
    assert pq.q_upper + pq.q_lower == pytest.approx(1.0)
    with pytest.raises(ScatteringRegimeError):
        hypergeometric_parameters(-3.0, 1.0, 200.0, E=0.1)


def test_validity_threshold():
    # d_crit = sqrt(2m B/gamma)/hbar = sqrt(10) at gamma = 1
    rule = validity_rule(2, ATOMIC, Deformation(1.0), COULOMB)
    assert rule.d_crit == pytest.approx(math.sqrt(10.0))
    assert rule.physical
    assert not validity_rule(3, ATOMIC, Deformation(1.0), COULOMB).physical
    assert validity_rule(50, ATOMIC, Deformation(0.0), COULOMB).physical


@pytest.mark.parametrize("n, gamma", [(3, 0.5), (4, 0.5), (2, 1.0), (3, 1.0), (5, 0.0)])
def test_classify_physical_matches_table_marks(n, gamma):
    d = Deformation(gamma)
    entry = energy_analytic(n, ATOMIC, d, COULOMB)
    assert classify_physical(entry, d, COULOMB, ATOMIC) == ((n, gamma) not in UNPHYSICAL)


def test_threshold_level_has_no_branch():
    # gamma = 0.4, n = 4: d = d_crit = 5 and E = 0
    entry = energy_analytic(4, ATOMIC, Deformation(0.4), COULOMB)
    assert entry.E == pytest.approx(0.0, abs=1e-12)
    assert entry.physical
