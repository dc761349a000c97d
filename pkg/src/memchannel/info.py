"""Classical information carried by two correlated channel uses.

The signal family interpolates between product and maximally entangled
codewords through a single angle ``theta``::

    |s1> = cos(theta)|00> + sin(theta)|11>
    |s2> = sin(theta)|00> - cos(theta)|11>
    |s3> = cos(theta)|01> + sin(theta)|10>
    |s4> = sin(theta)|01> - cos(theta)|10>

used with equal priors 1/4. ``theta = 0`` gives the computational product
basis, ``theta = pi/4`` the four Bell states. The accessible information of
the two uses is measured by the Holevo quantity of the output ensemble,
``S(avg output) - avg S(output)``, in bits.
"""

from __future__ import annotations

import numpy as np

from .channels import ChannelSpec, DepolarizingSpec, apply_channel, two_use_kraus
from .core import check_density_matrix, spectrum_entropy, von_neumann_entropy

__all__ = [
    "signal_kets",
    "signal_states",
    "mutual_information",
    "signal_output_eigenvalues",
    "signal_information",
    "product_information_endpoint",
    "threshold_memory",
]

_PRIOR_TOL = 1e-12


def signal_kets(theta: float) -> np.ndarray:
    """The four signal kets as rows of a (4, 4) array, any real ``theta``."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [
            [c, 0.0, 0.0, s],
            [s, 0.0, 0.0, -c],
            [0.0, c, s, 0.0],
            [0.0, s, -c, 0.0],
        ],
        dtype=complex,
    )


def signal_states(theta: float) -> tuple[tuple[float, np.ndarray], ...]:
    """Equiprobable signal ensemble: four ``(1/4, |s_i><s_i|)`` pairs."""
    kets = signal_kets(theta)
    return tuple((0.25, np.outer(k, k.conj())) for k in kets)


def mutual_information(
    ensemble: tuple[tuple[float, np.ndarray], ...],
    spec: ChannelSpec | DepolarizingSpec,
) -> float:
    """Holevo information (bits) of an input ensemble after the two-use channel.

    ``ensemble`` is a sequence of ``(prior, density_matrix)`` pairs; priors
    must be non-negative and sum to 1 within 1e-12, states must be valid
    density matrices.
    """
    ensemble = tuple(ensemble)
    if not ensemble:
        raise ValueError("ensemble must contain at least one state")
    priors = np.array([float(p) for p, _ in ensemble])
    if priors.min() < -_PRIOR_TOL:
        raise ValueError(f"negative prior {priors.min():.3e}")
    if abs(priors.sum() - 1.0) > _PRIOR_TOL:
        raise ValueError(f"priors sum to {priors.sum()!r}, expected 1")
    kraus = two_use_kraus(spec)
    outputs = [apply_channel(kraus, check_density_matrix(rho)) for _, rho in ensemble]
    average = sum(p * out for p, out in zip(priors, outputs))
    conditional = sum(p * von_neumann_entropy(out) for p, out in zip(priors, outputs))
    return von_neumann_entropy(average) - float(conditional)


def signal_output_eigenvalues(eta: float, memory: float, theta: float) -> np.ndarray:
    """Output spectrum of any signal state, in closed form, sorted ascending.

    For the depolarizing pair ``(eta, memory)`` every signal state of angle
    ``theta`` leaves the channel with the same four eigenvalues::

        lam_{1,2} = (1/4) (1 - memory) (1 - eta^2)
        lam_{3,4} = (1/4) (1 + memory + eta^2 (1 - memory) +- 2 r)
        r = sqrt(eta^2 cos^2(2 theta) + (eta^2 (1 - memory) + memory)^2 sin^2(2 theta))
    """
    spec = DepolarizingSpec(eta=eta, memory=memory)  # range validation
    eta, m = spec.eta, spec.memory
    eta2 = eta * eta
    side = 0.25 * (1.0 - m) * (1.0 - eta2)
    d = eta2 * (1.0 - m) + m
    c2, s2 = np.cos(2.0 * theta), np.sin(2.0 * theta)
    r = np.sqrt(eta2 * c2 * c2 + d * d * s2 * s2)
    hi = 0.25 * (1.0 + m + eta2 * (1.0 - m) + 2.0 * r)
    lo = 0.25 * (1.0 + m + eta2 * (1.0 - m) - 2.0 * r)
    return np.sort(np.array([side, side, lo, hi]))


def signal_information(eta: float, memory: float, theta: float) -> float:
    """Closed-form Holevo information (bits) of the signal ensemble.

    Equals ``2 - H(spectrum)``: the equiprobable average output is maximally
    mixed, so the average-entropy term is exactly 2 bits.
    """
    return 2.0 - spectrum_entropy(signal_output_eigenvalues(eta, memory, theta))


def product_information_endpoint(eta: float, memory: float) -> float:
    """Closed form for the product-basis information at the memory endpoints.

    ``memory = 0`` (independent uses)::

        (1 + eta) log2(1 + eta) + (1 - eta) log2(1 - eta)

    ``memory = 1`` (perfectly repeated Pauli)::

        1 + ((1 + eta) log2(1 + eta) + (1 - eta) log2(1 - eta)) / 2

    Only the endpoints have this closed form; other ``memory`` values raise
    ValueError.
    """
    eta = float(eta)
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"shrinking factor must lie in [0, 1], got {eta!r}")
    base = (1.0 + eta) * np.log2(1.0 + eta)
    if eta < 1.0:
        base += (1.0 - eta) * np.log2(1.0 - eta)
    if memory == 0.0:
        return float(base)
    if memory == 1.0:
        return float(1.0 + 0.5 * base)
    raise ValueError(f"closed form exists only at memory 0 or 1, got {memory!r}")


def threshold_memory(eta: float) -> float:
    """Memory degree above which Bell signals beat product signals: ``eta / (1 + eta)``.

    Defined for ``eta`` in ``(0, 1]``; at the threshold every signal angle
    carries the same information.
    """
    eta = float(eta)
    if not 0.0 < eta <= 1.0:
        raise ValueError(f"threshold requires shrinking factor in (0, 1], got {eta!r}")
    return eta / (1.0 + eta)
