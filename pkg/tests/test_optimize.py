import numpy as np
import pytest

from memchannel import (
    DepolarizingSpec,
    apply_channel,
    locate_threshold,
    optimize_signal_angle,
    product_density,
    product_information_endpoint,
    product_output_fidelity,
    product_output_purity,
    search_product_ensembles,
    signal_information,
    threshold_memory,
    two_use_kraus,
)

QUARTER_PI = np.pi / 4.0


def random_unit_vector(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


# --- angle optimization ------------------------------------------------------


def test_angle_optimum_is_product_basis_below_threshold():
    for eta, memory in [(0.8, 0.1), (0.8, 0.4), (0.3, 0.05), (0.5, 0.2)]:
        best = optimize_signal_angle(eta, memory)
        assert not best.degenerate
        assert best.theta == 0.0
        assert best.information == pytest.approx(
            signal_information(eta, memory, 0.0), abs=1e-12
        )


def test_angle_optimum_is_bell_basis_above_threshold():
    for eta, memory in [(0.8, 0.5), (0.8, 0.95), (0.3, 0.4), (0.5, 0.8)]:
        best = optimize_signal_angle(eta, memory)
        assert not best.degenerate
        assert abs(best.theta - QUARTER_PI) < 1e-6
        assert best.information >= signal_information(eta, memory, QUARTER_PI) - 1e-12


def test_angle_scan_flags_threshold_degeneracy():
    for eta in (0.3, 0.8):
        best = optimize_signal_angle(eta, threshold_memory(eta))
        assert best.degenerate
        assert best.theta == 0.0
    # eta = 1 is noiseless: flat in the angle at every memory degree
    assert optimize_signal_angle(1.0, 0.37).degenerate


def test_angle_optimum_dominates_both_endpoint_families():
    rng = np.random.default_rng(21)
    for _ in range(25):
        eta = float(rng.uniform(0.0, 1.0))
        memory = float(rng.uniform())
        best = optimize_signal_angle(eta, memory)
        endpoint = max(
            signal_information(eta, memory, 0.0),
            signal_information(eta, memory, QUARTER_PI),
        )
        assert best.information >= endpoint - 1e-10


def test_optimize_signal_angle_validation():
    with pytest.raises(ValueError):
        optimize_signal_angle(0.8, 0.5, grid_n=5)
    with pytest.raises(ValueError):
        optimize_signal_angle(0.8, 0.5, tol=0.0)


# --- numeric threshold -------------------------------------------------------


def test_locate_threshold_matches_closed_form():
    for eta in np.linspace(0.05, 1.0, 10):
        assert abs(locate_threshold(eta) - threshold_memory(eta)) < 1e-9


def test_locate_threshold_noiseless_limit():
    # both signal families carry exactly two bits, the crossing degenerates to 0.5
    assert locate_threshold(1.0) == pytest.approx(0.5, abs=1e-9)


def test_locate_threshold_validation():
    with pytest.raises(ValueError):
        locate_threshold(0.0)
    with pytest.raises(ValueError):
        locate_threshold(1.2)
    with pytest.raises(ValueError):
        locate_threshold(0.5, tol=-1.0)


# --- product-state outputs ---------------------------------------------------


def test_product_density_matches_kron_construction():
    rng = np.random.default_rng(22)
    for _ in range(20):
        b1, b2 = random_unit_vector(rng), random_unit_vector(rng)
        sx = np.array([[0, 1], [1, 0]], dtype=complex)
        sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
        sz = np.array([[1, 0], [0, -1]], dtype=complex)
        single1 = 0.5 * (np.eye(2) + b1[0] * sx + b1[1] * sy + b1[2] * sz)
        single2 = 0.5 * (np.eye(2) + b2[0] * sx + b2[1] * sy + b2[2] * sz)
        assert np.abs(product_density(b1, b2) - np.kron(single1, single2)).max() < 1e-14


def test_product_density_requires_unit_vectors():
    with pytest.raises(ValueError):
        product_density(np.array([0.0, 0.0, 0.9]), np.array([0.0, 0.0, 1.0]))


def test_product_output_purity_frozen_examples():
    z = np.array([0.0, 0.0, 1.0])
    x = np.array([1.0, 0.0, 0.0])
    assert product_output_purity(z, z, DepolarizingSpec(0.8, 0.0)) == pytest.approx(
        0.6724, abs=1e-14
    )
    assert product_output_purity(z, x, DepolarizingSpec(0.8, 1.0)) == pytest.approx(
        0.73, abs=1e-14
    )
    assert product_output_purity(z, z, DepolarizingSpec(0.8, 1.0)) == pytest.approx(
        0.82, abs=1e-14
    )


def test_product_output_purity_matches_kraus_path():
    rng = np.random.default_rng(23)
    worst = 0.0
    for _ in range(100):
        spec = DepolarizingSpec(
            eta=float(rng.uniform(-1.0 / 3.0, 1.0)), memory=float(rng.uniform())
        )
        b1, b2 = random_unit_vector(rng), random_unit_vector(rng)
        out = apply_channel(two_use_kraus(spec.to_channel_spec()), product_density(b1, b2))
        direct = float(np.trace(out @ out).real)
        worst = max(worst, abs(product_output_purity(b1, b2, spec) - direct))
    assert worst < 1e-12


def test_product_output_fidelity_matches_kraus_path():
    rng = np.random.default_rng(24)
    worst = 0.0
    for _ in range(100):
        spec = DepolarizingSpec(
            eta=float(rng.uniform(-1.0 / 3.0, 1.0)), memory=float(rng.uniform())
        )
        b1, b2 = random_unit_vector(rng), random_unit_vector(rng)
        rho = product_density(b1, b2)
        out = apply_channel(two_use_kraus(spec.to_channel_spec()), rho)
        direct = float(np.trace(rho @ out).real)
        worst = max(worst, abs(product_output_fidelity(b1, b2, spec) - direct))
    assert worst < 1e-12


def test_axis_aligned_pair_maximizes_output_fidelity():
    z = np.array([0.0, 0.0, 1.0])
    rng = np.random.default_rng(25)
    for spec in (DepolarizingSpec(0.8, 0.3), DepolarizingSpec(0.5, 0.9), DepolarizingSpec(0.9, 0.0)):
        aligned = product_output_fidelity(z, z, spec)
        for _ in range(1000):
            b1, b2 = random_unit_vector(rng), random_unit_vector(rng)
            assert product_output_fidelity(b1, b2, spec) <= aligned + 1e-12


# --- randomized ensemble search ----------------------------------------------


def test_search_is_deterministic_for_a_seed():
    spec = DepolarizingSpec(eta=0.6, memory=0.7)
    a = search_product_ensembles(spec, restarts=5, seed=3)
    b = search_product_ensembles(spec, restarts=5, seed=3)
    assert a.information == b.information
    assert a.restart == b.restart
    assert np.array_equal(a.angles, b.angles)
    assert np.array_equal(a.restart_values, b.restart_values)


def test_search_never_beats_the_angle_family_bound():
    rng = np.random.default_rng(26)
    for _ in range(3):
        eta = float(rng.uniform(0.2, 1.0))
        memory = float(rng.uniform())
        spec = DepolarizingSpec(eta=eta, memory=memory)
        found = search_product_ensembles(spec, restarts=6, seed=1)
        assert found.information <= signal_information(eta, memory, 0.0) + 1e-9
        assert np.abs(np.linalg.norm(found.bloch1, axis=1) - 1.0).max() < 1e-12
        assert np.abs(np.linalg.norm(found.bloch2, axis=1) - 1.0).max() < 1e-12


def test_search_recovers_endpoint_optima_with_fifty_restarts():
    independent = search_product_ensembles(DepolarizingSpec(0.8, 0.0), restarts=50, seed=0)
    assert independent.information == pytest.approx(
        product_information_endpoint(0.8, 0), abs=1e-6
    )
    repeated = search_product_ensembles(DepolarizingSpec(0.8, 1.0), restarts=50, seed=0)
    assert repeated.information == pytest.approx(
        product_information_endpoint(0.8, 1), abs=1e-6
    )


def test_search_validation():
    with pytest.raises(ValueError):
        search_product_ensembles(DepolarizingSpec(0.5, 0.5), restarts=0)
    with pytest.raises(ValueError):
        search_product_ensembles(DepolarizingSpec(0.5, 0.5), restarts=2, line_grid=3)
