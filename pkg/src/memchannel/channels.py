"""Two-use Pauli channels with Markov-correlated noise.

A single use applies ``sigma_k`` with probability ``p_k``. Across two
consecutive uses the second Pauli index is drawn from the Markov kernel

    p(k2 | k1) = (1 - memory) * p_k2 + memory * delta_{k1, k2}

so ``memory = 0`` gives two independent uses and ``memory = 1`` repeats the
first Pauli exactly. The depolarizing special case uses
``p = (1 - p, p/3, p/3, p/3)`` and is summarized by the shrinking factor
``eta = 1 - 4p/3``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PAULI_PAIRS, TwoQubitBloch

__all__ = [
    "ChannelSpec",
    "DepolarizingSpec",
    "KrausSet",
    "markov_weight",
    "two_use_kraus",
    "apply_channel",
    "apply_depolarizing_bloch",
    "eta_from_p",
    "p_from_eta",
]

_PROB_TOL = 1e-12
_COMPLETENESS_TOL = 1e-12
_APPLY_TOL = 1e-10

#: The 16 two-qubit Pauli products flattened to shape (16, 4, 4); entry
#: ``4*k1 + k2`` is ``sigma_k1 (x) sigma_k2``.
_PAIR_OPS = PAULI_PAIRS.reshape(16, 4, 4)


@dataclass(frozen=True)
class ChannelSpec:
    """Single-use Pauli probabilities plus the memory degree of the pair.

    Attributes
    ----------
    probs:
        Probabilities ``(p_I, p_x, p_y, p_z)``; non-negative, summing to 1.
    memory:
        Markov memory degree in ``[0, 1]``.
    """

    probs: tuple[float, float, float, float]
    memory: float

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        if len(probs) != 4:
            raise ValueError(f"expected 4 Pauli probabilities, got {len(probs)}")
        if min(probs) < -_PROB_TOL:
            raise ValueError(f"negative Pauli probability {min(probs):.3e}")
        if abs(sum(probs) - 1.0) > _PROB_TOL:
            raise ValueError(f"Pauli probabilities sum to {sum(probs)!r}, expected 1")
        memory = float(self.memory)
        if not 0.0 <= memory <= 1.0:
            raise ValueError(f"memory degree must lie in [0, 1], got {memory!r}")
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "memory", memory)


@dataclass(frozen=True)
class DepolarizingSpec:
    """Depolarizing channel pair: shrinking factor ``eta`` and memory degree."""

    eta: float
    memory: float

    def __post_init__(self):
        eta = float(self.eta)
        if not -1.0 / 3.0 - _PROB_TOL <= eta <= 1.0 + _PROB_TOL:
            raise ValueError(f"shrinking factor must lie in [-1/3, 1], got {eta!r}")
        memory = float(self.memory)
        if not 0.0 <= memory <= 1.0:
            raise ValueError(f"memory degree must lie in [0, 1], got {memory!r}")
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "memory", memory)

    @property
    def p(self) -> float:
        """Total single-use Pauli error probability."""
        return p_from_eta(self.eta)

    def to_channel_spec(self) -> ChannelSpec:
        p = self.p
        return ChannelSpec(probs=(1.0 - p, p / 3.0, p / 3.0, p / 3.0), memory=self.memory)


def eta_from_p(p: float) -> float:
    """Shrinking factor ``1 - 4p/3`` of a depolarizing channel with error weight ``p``."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"error probability must lie in [0, 1], got {p!r}")
    return 1.0 - 4.0 * p / 3.0


def p_from_eta(eta: float) -> float:
    """Inverse of :func:`eta_from_p`: ``p = 3 (1 - eta) / 4``."""
    eta = float(eta)
    if not -1.0 / 3.0 <= eta <= 1.0:
        raise ValueError(f"shrinking factor must lie in [-1/3, 1], got {eta!r}")
    return 3.0 * (1.0 - eta) / 4.0


def markov_weight(spec: ChannelSpec, k1: int, k2: int) -> float:
    """Joint probability that uses one and two apply ``sigma_k1`` and ``sigma_k2``.

    Equals ``p_k1 * ((1 - memory) * p_k2 + memory * delta_{k1,k2})``.
    """
    if k1 not in (0, 1, 2, 3) or k2 not in (0, 1, 2, 3):
        raise ValueError(f"Pauli indices must be in 0..3, got ({k1!r}, {k2!r})")
    p = spec.probs
    m = spec.memory
    return p[k1] * ((1.0 - m) * p[k2] + (m if k1 == k2 else 0.0))


@dataclass(frozen=True)
class KrausSet:
    """Weighted Pauli-product Kraus decomposition of a two-use channel.

    The channel acts as ``rho -> sum_n weights[n] * U_n rho U_n^dagger`` with
    unitary ``U_n``; the Kraus operators proper are ``sqrt(weights[n]) * U_n``.
    All 16 pairs are kept, including zero-weight ones, so indexing is stable.
    """

    weights: np.ndarray
    unitaries: np.ndarray

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float).copy()
        unitaries = np.asarray(self.unitaries, dtype=complex).copy()
        if weights.ndim != 1 or unitaries.shape != (weights.shape[0], 4, 4):
            raise ValueError("weights must be (n,) and unitaries (n, 4, 4)")
        if weights.min() < -_PROB_TOL:
            raise ValueError(f"negative Kraus weight {weights.min():.3e}")
        weights.setflags(write=False)
        unitaries.setflags(write=False)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "unitaries", unitaries)

    def __len__(self) -> int:
        return self.weights.shape[0]

    def __iter__(self):
        """Iterate over ``(weight, operator)`` pairs."""
        return iter(zip(self.weights.tolist(), self.unitaries))

    def completeness_defect(self) -> float:
        """Max-norm deviation of ``sum_n w_n U_n^dagger U_n`` from the identity."""
        acc = np.einsum("n,nji,njk->ik", self.weights, self.unitaries.conj(), self.unitaries)
        return float(np.abs(acc - np.eye(4)).max())


def _as_channel_spec(spec: ChannelSpec | DepolarizingSpec) -> ChannelSpec:
    if isinstance(spec, DepolarizingSpec):
        return spec.to_channel_spec()
    if isinstance(spec, ChannelSpec):
        return spec
    raise TypeError(f"expected ChannelSpec or DepolarizingSpec, got {type(spec)!r}")


def two_use_kraus(spec: ChannelSpec | DepolarizingSpec) -> KrausSet:
    """Kraus set of two correlated channel uses.

    Entry ``4*k1 + k2`` carries ``sigma_k1 (x) sigma_k2`` with the joint
    Markov weight of :func:`markov_weight`.
    """
    spec = _as_channel_spec(spec)
    p = np.asarray(spec.probs)
    m = spec.memory
    weights = np.outer(p, (1.0 - m) * p) + m * np.diag(p)
    return KrausSet(weights=weights.reshape(16), unitaries=_PAIR_OPS)


def apply_channel(kraus: KrausSet, rho: np.ndarray) -> np.ndarray:
    """Apply ``rho -> sum_n w_n U_n rho U_n^dagger``.

    Raises ValueError if the Kraus set is not trace-preserving to within 1e-10
    or if ``rho`` is not 4x4 Hermitian with unit trace (cheap checks only; the
    eigenvalue check is left to the caller).
    """
    defect = kraus.completeness_defect()
    if defect > _APPLY_TOL:
        raise ValueError(f"Kraus set not complete (defect {defect:.3e})")
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 state, got shape {rho.shape}")
    if abs(rho.trace() - 1.0) > _APPLY_TOL:
        raise ValueError(f"state trace is {rho.trace():.15g}, expected 1")
    if np.abs(rho - rho.conj().T).max() > _APPLY_TOL:
        raise ValueError("state is not Hermitian")
    rotated = kraus.unitaries @ rho
    return np.einsum("n,nij,nkj->ik", kraus.weights, rotated, kraus.unitaries.conj())


def apply_depolarizing_bloch(spec: DepolarizingSpec, bloch: TwoQubitBloch) -> TwoQubitBloch:
    """Closed-form Bloch action of two correlated depolarizing uses.

    Both local Bloch vectors shrink by ``eta`` regardless of memory; the
    correlation matrix scales by ``memory + (1 - memory) eta**2`` on the
    diagonal and ``memory * eta + (1 - memory) * eta**2`` off it.
    """
    eta = spec.eta
    m = spec.memory
    diag_scale = m + (1.0 - m) * eta * eta
    off_scale = m * eta + (1.0 - m) * eta * eta
    scale = np.full((3, 3), off_scale)
    np.fill_diagonal(scale, diag_scale)
    return TwoQubitBloch(
        b1=eta * bloch.b1,
        b2=eta * bloch.b2,
        corr=scale * bloch.corr,
    )
