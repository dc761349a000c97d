import numpy as np
import pytest

from memchannel import (
    ChannelSpec,
    DepolarizingSpec,
    apply_channel,
    apply_depolarizing_bloch,
    bloch_from_density,
    density_from_bloch,
    eta_from_p,
    markov_weight,
    p_from_eta,
    signal_states,
    two_use_kraus,
)
from memchannel.channels import KrausSet


def random_density(rng):
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    return rho / rho.trace()


def random_channel_spec(rng):
    probs = rng.exponential(size=4)
    probs /= probs.sum()
    return ChannelSpec(probs=tuple(probs), memory=float(rng.uniform()))


def test_channel_spec_validation():
    ChannelSpec(probs=(0.25, 0.25, 0.25, 0.25), memory=0.5)
    with pytest.raises(ValueError):
        ChannelSpec(probs=(0.5, 0.5, 0.1, 0.0), memory=0.5)
    with pytest.raises(ValueError):
        ChannelSpec(probs=(1.2, -0.2, 0.0, 0.0), memory=0.5)
    with pytest.raises(ValueError):
        ChannelSpec(probs=(0.25, 0.25, 0.25, 0.25), memory=1.5)
    with pytest.raises(ValueError):
        ChannelSpec(probs=(0.25, 0.25, 0.25, 0.25), memory=-0.1)


def test_depolarizing_spec_validation_and_conversion():
    spec = DepolarizingSpec(eta=0.8, memory=0.5)
    assert spec.p == pytest.approx(0.15, abs=1e-15)
    cs = spec.to_channel_spec()
    assert cs.probs == pytest.approx((0.85, 0.05, 0.05, 0.05), abs=1e-15)
    assert cs.memory == 0.5
    with pytest.raises(ValueError):
        DepolarizingSpec(eta=1.2, memory=0.0)
    with pytest.raises(ValueError):
        DepolarizingSpec(eta=-0.4, memory=0.0)
    with pytest.raises(ValueError):
        DepolarizingSpec(eta=0.5, memory=2.0)


def test_eta_p_conversions_are_mutual_inverses():
    assert eta_from_p(0.15) == pytest.approx(0.8, abs=1e-15)
    assert p_from_eta(0.8) == pytest.approx(0.15, abs=1e-15)
    for p in np.linspace(0.0, 1.0, 21):
        assert p_from_eta(eta_from_p(p)) == pytest.approx(p, abs=1e-14)
    for eta in np.linspace(-1.0 / 3.0, 1.0, 21):
        assert eta_from_p(p_from_eta(eta)) == pytest.approx(eta, abs=1e-14)
    with pytest.raises(ValueError):
        eta_from_p(1.1)
    with pytest.raises(ValueError):
        p_from_eta(-0.5)


def test_markov_weight_frozen_example():
    # p = 0.15 depolarizing, memory 0.5, both uses apply sigma_x:
    # 0.05 * (0.5 * 0.05 + 0.5) = 0.02625
    spec = DepolarizingSpec(eta=0.8, memory=0.5).to_channel_spec()
    assert markov_weight(spec, 1, 1) == pytest.approx(0.02625, abs=1e-15)


def test_markov_weight_limits_and_normalization():
    rng = np.random.default_rng(2)
    for _ in range(50):
        spec = random_channel_spec(rng)
        total = sum(markov_weight(spec, k1, k2) for k1 in range(4) for k2 in range(4))
        assert total == pytest.approx(1.0, abs=1e-12)
    probs = (0.4, 0.3, 0.2, 0.1)
    independent = ChannelSpec(probs=probs, memory=0.0)
    repeated = ChannelSpec(probs=probs, memory=1.0)
    for k1 in range(4):
        for k2 in range(4):
            assert markov_weight(independent, k1, k2) == pytest.approx(
                probs[k1] * probs[k2], abs=1e-15
            )
            expected = probs[k1] if k1 == k2 else 0.0
            assert markov_weight(repeated, k1, k2) == pytest.approx(expected, abs=1e-15)


def test_markov_weight_rejects_bad_indices():
    spec = ChannelSpec(probs=(0.25, 0.25, 0.25, 0.25), memory=0.0)
    with pytest.raises(ValueError):
        markov_weight(spec, 4, 0)
    with pytest.raises(ValueError):
        markov_weight(spec, 0, -1)


def test_two_use_kraus_structure():
    kraus = two_use_kraus(DepolarizingSpec(eta=0.8, memory=1.0).to_channel_spec())
    assert len(kraus) == 16
    pairs = list(kraus)
    assert len(pairs) == 16
    # fully correlated: only the 4 repeated-index pairs carry weight,
    # zero-weight entries are retained
    weights = np.array([w for w, _ in pairs])
    assert (weights == 0.0).sum() == 12
    assert weights.sum() == pytest.approx(1.0, abs=1e-15)
    for w, op in pairs:
        assert np.abs(op @ op.conj().T - np.eye(4)).max() < 1e-15


def test_two_use_kraus_complete_for_random_specs():
    rng = np.random.default_rng(3)
    for _ in range(200):
        kraus = two_use_kraus(random_channel_spec(rng))
        assert kraus.completeness_defect() <= 1e-12


def test_apply_channel_preserves_state_validity():
    rng = np.random.default_rng(4)
    for _ in range(200):
        kraus = two_use_kraus(random_channel_spec(rng))
        out = apply_channel(kraus, random_density(rng))
        assert abs(out.trace() - 1.0) < 1e-12
        assert np.abs(out - out.conj().T).max() < 1e-12
        assert np.linalg.eigvalsh(out).min() > -1e-10


def test_apply_channel_is_linear():
    rng = np.random.default_rng(5)
    kraus = two_use_kraus(random_channel_spec(rng))
    rho1, rho2 = random_density(rng), random_density(rng)
    mix = 0.3 * rho1 + 0.7 * rho2
    direct = apply_channel(kraus, mix)
    split = 0.3 * apply_channel(kraus, rho1) + 0.7 * apply_channel(kraus, rho2)
    assert np.abs(direct - split).max() < 1e-13


def test_apply_channel_rejects_incomplete_kraus():
    good = two_use_kraus(ChannelSpec(probs=(0.7, 0.1, 0.1, 0.1), memory=0.3))
    broken = KrausSet(weights=good.weights * 0.9, unitaries=good.unitaries)
    with pytest.raises(ValueError):
        apply_channel(broken, np.eye(4, dtype=complex) / 4)


def test_apply_channel_rejects_bad_state():
    kraus = two_use_kraus(ChannelSpec(probs=(0.7, 0.1, 0.1, 0.1), memory=0.3))
    with pytest.raises(ValueError):
        apply_channel(kraus, np.eye(4, dtype=complex))  # trace 4
    lopsided = np.eye(4, dtype=complex) / 4
    lopsided[0, 1] = 0.5
    with pytest.raises(ValueError):
        apply_channel(kraus, lopsided)


def test_kraus_set_rejects_negative_weights():
    ops = two_use_kraus(ChannelSpec(probs=(0.7, 0.1, 0.1, 0.1), memory=0.3))
    weights = ops.weights.copy()
    weights[0] = -0.1
    with pytest.raises(ValueError):
        KrausSet(weights=weights, unitaries=ops.unitaries)


def test_bloch_path_matches_kraus_path():
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(300):
        spec = DepolarizingSpec(
            eta=float(rng.uniform(-1.0 / 3.0, 1.0)), memory=float(rng.uniform())
        )
        rho = random_density(rng)
        via_kraus = apply_channel(two_use_kraus(spec.to_channel_spec()), rho)
        via_bloch = density_from_bloch(
            apply_depolarizing_bloch(spec, bloch_from_density(rho))
        )
        worst = max(worst, np.abs(via_kraus - via_bloch).max())
    assert worst < 1e-12


def test_memory_interpolates_convexly_between_limit_channels():
    rng = np.random.default_rng(7)
    probs = (0.6, 0.2, 0.15, 0.05)
    independent = two_use_kraus(ChannelSpec(probs=probs, memory=0.0))
    repeated = two_use_kraus(ChannelSpec(probs=probs, memory=1.0))
    for memory in (0.25, 0.5, 0.8):
        blended = two_use_kraus(ChannelSpec(probs=probs, memory=memory))
        for _ in range(20):
            rho = random_density(rng)
            expected = memory * apply_channel(repeated, rho) + (1.0 - memory) * apply_channel(
                independent, rho
            )
            assert np.abs(apply_channel(blended, rho) - expected).max() < 1e-12


def test_bell_states_are_fixed_points_of_fully_correlated_channel():
    rng = np.random.default_rng(8)
    for _ in range(20):
        probs = rng.exponential(size=4)
        probs /= probs.sum()
        kraus = two_use_kraus(ChannelSpec(probs=tuple(probs), memory=1.0))
        for _, rho in signal_states(np.pi / 4.0):
            assert np.abs(apply_channel(kraus, rho) - rho).max() < 1e-12
