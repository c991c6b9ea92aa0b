"""Finite-difference oracle: grids, Hamiltonians, Sturm counts, cross-check."""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.errors import DomainError, VerificationError
from src.model import Deformation, PotentialParams, UnitSystem
from src.verifier import (
    DEFAULT_X_MIN,
    X_MIN_FRACTION,
    CrosscheckReport,
    CrosscheckRow,
    DiscretizationMethod,
    GridSpec,
    Verdict,
    boundary_sensitivity,
    build_discrete_hamiltonian,
    crosscheck_analytic,
    default_grid,
    eigenvector,
    lowest_eigenvalues,
    solve_numerical_spectrum,
    sturm_count,
)
from src.wavefunction import count_nodes

ATOMIC = UnitSystem.atomic()
CORE = PotentialParams(A=1.0, B=5.0)
HYDROGEN = PotentialParams(A=0.0, B=1.0)
COULOMB = PotentialParams(A=0.0, B=5.0)
SMALL_GRID = GridSpec(x_min=1e-4, x_max=40.0, num_points=2001)


def _small_hamiltonian(gamma=0.5, method=DiscretizationMethod.LOG_COORDINATE):
    grid = GridSpec(x_min=1e-3, x_max=30.0, num_points=301)
    return build_discrete_hamiltonian(ATOMIC, Deformation(gamma), CORE, grid, method=method)


# =============================================================================
# Grids
# =============================================================================

def test_grid_validation():
    with pytest.raises(DomainError):
        GridSpec(x_min=2.0, x_max=1.0)
    with pytest.raises(DomainError):
        GridSpec(x_min=0.0)
    with pytest.raises(DomainError):
        GridSpec(num_points=50)
    with pytest.raises(DomainError):
        GridSpec(refinements=1)


def test_grid_refinement_halves_step():
    grid = GridSpec(x_min=1.0, x_max=2.0, num_points=201)
    assert grid.points(1) == 401
    coarse, fine = grid.nodes(0), grid.nodes(1)
    assert fine[1] - fine[0] == pytest.approx(0.5 * (coarse[1] - coarse[0]))
    np.testing.assert_allclose(fine[::2], coarse)


def test_default_grid_extent():
    grid = default_grid(ATOMIC, COULOMB, 3)
    # 12 d^2 a0 with d = 3 and a0 = 0.2
    assert grid.x_max == pytest.approx(21.6)
    assert grid.x_min == pytest.approx(X_MIN_FRACTION * 0.2)
    repulsive = default_grid(ATOMIC, PotentialParams(A=1.0, B=0.0), 3)
    assert repulsive.x_max == 100.0
    assert repulsive.x_min == DEFAULT_X_MIN
    assert default_grid(ATOMIC, COULOMB, 3, x_min=1e-3).x_min == 1e-3
    stretched = default_grid(ATOMIC, PotentialParams(A=0.0, B=5.0), 3, deformation=Deformation(1.0))
    assert stretched.x_max > grid.x_max


# =============================================================================
# Hamiltonians and Sturm counts
# =============================================================================

@pytest.mark.parametrize("method", list(DiscretizationMethod))
def test_hamiltonian_is_symmetric(method):
    H = _small_hamiltonian(method=method)
    dense = H.matrix()
    np.testing.assert_array_equal(dense, dense.T)
    assert H.off_diagonal.size == H.size - 1
    lo, hi = H.gershgorin_bounds()
    eigs = np.linalg.eigvalsh(dense)
    assert lo <= eigs[0] and eigs[-1] <= hi


def test_similarity_transform_keeps_raw_spectrum():
    gamma, K = 0.5, ATOMIC.kinetic_scale
    grid = GridSpec(x_min=1e-2, x_max=20.0, num_points=201)
    H = build_discrete_hamiltonian(ATOMIC, Deformation(gamma), CORE, grid,
                                   method=DiscretizationMethod.SIMILARITY)
    x, h = H.nodes, H.step
    stretch = 1.0 + gamma * x
    c2, c1 = K * stretch ** 2, K * gamma * stretch
    raw = (np.diag(2.0 * c2 / h ** 2 + CORE.A / x ** 2 - CORE.B / x)
           + np.diag((-c2 / h ** 2 - c1 / (2.0 * h))[:-1], 1)
           + np.diag((-c2 / h ** 2 + c1 / (2.0 * h))[1:], -1))
    raw_eigs = np.sort(np.linalg.eigvals(raw).real)
    np.testing.assert_allclose(np.linalg.eigvalsh(H.matrix())[:5], raw_eigs[:5], rtol=1e-8)


def test_methods_coincide_without_deformation():
    log_h = _small_hamiltonian(gamma=0.0)
    sim_h = _small_hamiltonian(gamma=0.0, method=DiscretizationMethod.SIMILARITY)
    np.testing.assert_allclose(log_h.diagonal, sim_h.diagonal, rtol=1e-12)
    np.testing.assert_allclose(log_h.off_diagonal, sim_h.off_diagonal, rtol=1e-12)


def test_bisection_matches_dense_solver():
    H = _small_hamiltonian()
    expected = np.linalg.eigvalsh(H.matrix())
    found = lowest_eigenvalues(H, 3, upper=np.inf)
    np.testing.assert_allclose(found, expected[:3], rtol=1e-8, atol=1e-9)


@given(lam=st.lists(st.floats(min_value=-20.0, max_value=50.0), min_size=2, max_size=20))
def test_sturm_count_is_monotone(lam):
    H = _small_hamiltonian()
    lams = np.sort(np.asarray(lam))
    counts = sturm_count(H, lams)
    assert np.all(np.diff(counts) >= 0)


def test_sturm_count_brackets_eigenvalues():
    H = _small_hamiltonian()
    eigs = np.linalg.eigvalsh(H.matrix())
    for k in range(4):
        assert sturm_count(H, eigs[k] - 1e-7) == k
        assert sturm_count(H, eigs[k] + 1e-7) == k + 1


@pytest.mark.parametrize("k", [0, 1, 2])
def test_eigenvector_node_count(k):
    H = _small_hamiltonian(gamma=0.0)
    E = lowest_eigenvalues(H, 3, upper=np.inf)[k]
    v = eigenvector(H, E)
    assert np.linalg.norm(v) == pytest.approx(1.0)
    residual = H.matrix() @ v - E * v
    assert np.linalg.norm(residual) < 1e-6
    significant = v[np.abs(v) > 1e-8 * np.abs(v).max()]
    assert count_nodes(significant) == k


def test_lowest_eigenvalues_needs_positive_k():
    with pytest.raises(DomainError):
        lowest_eigenvalues(_small_hamiltonian(), 0)


# =============================================================================
# Numerical spectrum
# =============================================================================

def test_particle_in_a_box():
    grid = GridSpec(x_min=1.0, x_max=1.0 + math.pi, num_points=2001)
    H = build_discrete_hamiltonian(ATOMIC, Deformation(0.0), PotentialParams(A=0.0, B=0.0), grid)
    found = lowest_eigenvalues(H, 3, upper=np.inf)
    np.testing.assert_allclose(found, [0.5, 2.0, 4.5], rtol=1e-5)


def test_hydrogen_levels():
    spectrum = solve_numerical_spectrum(ATOMIC, Deformation(0.0), HYDROGEN,
                                        default_grid(ATOMIC, HYDROGEN, 2), 2)
    assert spectrum.complete
    assert spectrum.energies == pytest.approx([-0.5, -0.125], rel=1e-3)
    assert all(level.convergence < 1e-2 for level in spectrum.levels)


def test_refinement_error_shrinks_quadratically():
    grid = default_grid(ATOMIC, HYDROGEN, 3, num_points=1001, refinements=3)
    spectrum = solve_numerical_spectrum(ATOMIC, Deformation(0.0), HYDROGEN, grid, 3)
    for level in spectrum.levels:
        coarse, middle, fine = level.raw
        assert abs(coarse - middle) / abs(middle - fine) >= 3.0


def test_ground_level_is_continuous_in_gamma():
    ground = []
    for gamma in (0.0, 0.01, 0.02):
        d = Deformation(gamma)
        grid = default_grid(ATOMIC, COULOMB, 1, deformation=d)
        ground.append(solve_numerical_spectrum(ATOMIC, d, COULOMB, grid, 1).energies[0])
    for previous, current in zip(ground, ground[1:]):
        assert abs(current - previous) < 0.05 * abs(previous)
    assert ground[0] == pytest.approx(-12.5, rel=1e-3)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_hydrogen_eigenfunction_node_count(k):
    H = build_discrete_hamiltonian(ATOMIC, Deformation(0.0), HYDROGEN, default_grid(ATOMIC, HYDROGEN, 3))
    E = lowest_eigenvalues(H, 3)[k]
    v = eigenvector(H, E)
    significant = v[np.abs(v) > 1e-8 * np.abs(v).max()]
    assert count_nodes(significant) == k


def test_inverse_square_core_ground_state():
    spectrum = solve_numerical_spectrum(ATOMIC, Deformation(0.0), CORE, SMALL_GRID, 1)
    assert spectrum.energies[0] == pytest.approx(-3.125, rel=1e-4)
    level = spectrum.levels[0]
    assert len(level.raw) == SMALL_GRID.refinements
    # extrapolation moves the estimate past the finest grid value
    assert abs(level.E - level.raw[-1]) < abs(level.E - level.raw[0])


def test_no_bound_states_without_attraction():
    params = PotentialParams(A=1.0, B=0.0)
    spectrum = solve_numerical_spectrum(ATOMIC, Deformation(0.0), params,
                                        GridSpec(x_min=1e-3, x_max=50.0, num_points=501), 3)
    assert spectrum.levels == ()
    assert not spectrum.complete


def test_inner_boundary_has_negligible_effect():
    shifts = boundary_sensitivity(ATOMIC, Deformation(0.0), CORE, SMALL_GRID, 2)
    assert len(shifts) == 2
    assert max(shifts) < 1e-5


# =============================================================================
# Cross-check
# =============================================================================

def test_crosscheck_constant_mass_is_asserted_and_passes():
    report = crosscheck_analytic(ATOMIC, Deformation(0.0), CORE, 2, grid=SMALL_GRID)
    assert report.asserted
    assert report.passed
    assert [row.n for row in report.rows] == [0, 1, 2]
    assert report.rows[0].E_analytic == pytest.approx(-3.125)
    report.require()


@pytest.mark.parametrize("params, n_max", [(HYDROGEN, 2), (COULOMB, 2), (COULOMB, 5)])
def test_crosscheck_constant_mass_coulomb_levels(params, n_max):
    report = crosscheck_analytic(ATOMIC, Deformation(0.0), params, n_max)
    assert [row.verdict for row in report.rows] == [Verdict.MATCH] * (n_max + 1)
    assert all(row.rel_gap < 1e-3 for row in report.rows)
    assert report.boundary_resolved
    assert len(report.boundary_shifts) == n_max + 1


def test_fixed_inner_wall_biases_coulomb_ground_level():
    # a wall at 1e-4 lifts -12.5 by about x_min B times the density at the origin
    walled = GridSpec(x_min=1e-4, x_max=21.6, num_points=4001)
    report = crosscheck_analytic(ATOMIC, Deformation(0.0), COULOMB, 0, grid=walled)
    scaled = crosscheck_analytic(ATOMIC, Deformation(0.0), COULOMB, 0)
    assert report.rows[0].rel_gap > 10 * scaled.rows[0].rel_gap
    assert report.boundary_shifts[0] > scaled.boundary_shifts[0]


def test_crosscheck_with_deformation_is_diagnostic():
    report = crosscheck_analytic(ATOMIC, Deformation(0.1), PotentialParams(A=0.0, B=5.0), 1)
    assert not report.asserted
    assert report.passed
    assert all(row.rel_gap < 1e-3 for row in report.rows)


def test_crosscheck_reports_missing_levels():
    grid = GridSpec(x_min=1e-4, x_max=3.0, num_points=501)
    report = crosscheck_analytic(ATOMIC, Deformation(0.0), PotentialParams(A=0.0, B=1.0), 3, grid=grid)
    assert report.rows[-1].verdict in (Verdict.MISSING, Verdict.MISMATCH)
    with pytest.raises(VerificationError):
        report.require()


def test_failed_report_raises_only_when_asserted():
    row = CrosscheckRow(n=0, E_analytic=-1.0, E_numeric=-0.9, abs_gap=0.1, rel_gap=0.1,
                        convergence=1e-6, physical=True, verdict=Verdict.MISMATCH)
    common = dict(rows=(row,), gamma=0.0, tol=1e-3, grid=SMALL_GRID,
                  method=DiscretizationMethod.LOG_COORDINATE)
    with pytest.raises(VerificationError):
        CrosscheckReport(asserted=True, **common).require()
    CrosscheckReport(asserted=False, **common).require()
