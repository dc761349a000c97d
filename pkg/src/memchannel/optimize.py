"""Optimizers over signal angles, memory degree, and product-state ensembles.

Everything here is deterministic: the angle scan and threshold bisection use
fixed grids and brackets, and the randomized ensemble search draws all of its
starting points from a caller-supplied seed.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from .channels import DepolarizingSpec
from .core import PAULI_PAIRS, TwoQubitBloch, density_from_bloch
from .info import signal_information

__all__ = [
    "AngleOptimum",
    "ProductSearchResult",
    "optimize_signal_angle",
    "locate_threshold",
    "product_density",
    "product_output_purity",
    "product_output_fidelity",
    "search_product_ensembles",
]

_QUARTER_PI = np.pi / 4.0
_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0  # golden-section shrink ratio
_PLATEAU_TOL = 1e-12
_TIE_TOL = 1e-12
_UNIT_TOL = 1e-12

# sigma_k (x) I, I (x) sigma_k, sigma_k (x) sigma_l as stacked (3,4,4)/(3,3,4,4)
_SINGLE1 = PAULI_PAIRS[1:, 0]
_SINGLE2 = PAULI_PAIRS[0, 1:]
_PAIRS = PAULI_PAIRS[1:, 1:]
_EYE4 = np.eye(4, dtype=complex)


class AngleOptimum(NamedTuple):
    """Result of the signal-angle scan."""

    theta: float
    information: float
    degenerate: bool


class ProductSearchResult(NamedTuple):
    """Best product ensemble found by the multi-start search."""

    information: float
    bloch1: np.ndarray  # (4, 3) Bloch vectors, first qubit of each state
    bloch2: np.ndarray  # (4, 3) Bloch vectors, second qubit
    angles: np.ndarray  # (4, 4) rows of (polar1, azimuth1, polar2, azimuth2)
    restart: int
    restart_values: np.ndarray  # best value reached by each restart


def _golden_max(
    f: Callable[[float], float], a: float, b: float, tol: float
) -> tuple[float, float]:
    """Golden-section maximization of ``f`` on ``[a, b]`` to bracket width ``tol``."""
    h = b - a
    c = b - _INV_PHI * h
    d = a + _INV_PHI * h
    fc, fd = f(c), f(d)
    for _ in range(200):  # 0.618^200 underflows; the cap only guards tiny tol
        if b - a <= tol:
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def optimize_signal_angle(
    eta: float, memory: float, grid_n: int = 33, tol: float = 1e-8
) -> AngleOptimum:
    """Maximize the signal information over the angle range ``[0, pi/4]``.

    A ``grid_n``-point scan brackets the maximum and golden-section refinement
    narrows it to width ``tol``. When the whole scan is flat to within 1e-12
    (the threshold degeneracy) the angle is reported as 0 with
    ``degenerate=True``. Ties within 1e-12 prefer the smaller angle, so the
    product basis wins over the Bell basis when both carry equal information.
    """
    if grid_n < 9:
        raise ValueError(f"grid_n must be at least 9, got {grid_n}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")

    def f(theta: float) -> float:
        return signal_information(eta, memory, theta)

    thetas = np.linspace(0.0, _QUARTER_PI, grid_n)
    values = np.array([f(t) for t in thetas])
    if values.max() - values.min() < _PLATEAU_TOL:
        return AngleOptimum(theta=0.0, information=float(values[0]), degenerate=True)

    i = int(values.argmax())
    lo = thetas[max(i - 1, 0)]
    hi = thetas[min(i + 1, grid_n - 1)]
    candidates = [
        (0.0, values[0]),
        (_QUARTER_PI, values[-1]),
        (float(thetas[i]), float(values[i])),
        _golden_max(f, float(lo), float(hi), tol),
    ]
    best_value = max(v for _, v in candidates)
    theta_star, value_star = min(
        (t, v) for t, v in candidates if v >= best_value - _TIE_TOL
    )
    return AngleOptimum(theta=float(theta_star), information=float(value_star), degenerate=False)


def locate_threshold(eta: float, tol: float = 1e-10) -> float:
    """Bisect for the memory degree where Bell and product signals carry equal bits.

    The gap ``g(m) = info(pi/4) - info(0)`` is negative at ``m=0`` and positive
    at ``m=1`` for ``eta`` in (0, 1); bisection narrows the sign change to
    ``max(tol, 1e-15)``. An exactly zero midpoint is itself a crossing and is
    returned immediately — for ``eta = 1`` the two curves coincide everywhere,
    so the first midpoint 0.5 (the limiting crossing) is returned.
    """
    eta = float(eta)
    if not 0.0 < eta <= 1.0:
        raise ValueError(f"threshold search requires eta in (0, 1], got {eta!r}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")

    def gap(m: float) -> float:
        return signal_information(eta, m, _QUARTER_PI) - signal_information(eta, m, 0.0)

    lo, hi = 0.0, 1.0
    if gap(lo) > 0.0 or gap(hi) < 0.0:
        raise RuntimeError(
            "information gap does not change sign on [0, 1]; "
            "this cannot happen for eta in (0, 1] and signals a numerics bug"
        )
    width = max(tol, 1e-15)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # bracket narrowed to adjacent floats
            break
        g = gap(mid)
        if g == 0.0:
            return mid
        if g < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _check_unit(b: np.ndarray, name: str) -> np.ndarray:
    b = np.asarray(b, dtype=float)
    if b.shape != (3,):
        raise ValueError(f"{name} must be a 3-vector, got shape {b.shape}")
    norm = float(np.linalg.norm(b))
    if abs(norm - 1.0) > _UNIT_TOL:
        raise ValueError(f"{name} must be a unit vector, |{name}| = {norm!r}")
    return b


def product_density(b1: np.ndarray, b2: np.ndarray) -> np.ndarray:
    """Pure product state with the given unit Bloch vectors, as a 4x4 density."""
    b1 = _check_unit(b1, "b1")
    b2 = _check_unit(b2, "b2")
    return density_from_bloch(TwoQubitBloch(b1=b1, b2=b2, corr=np.outer(b1, b2)))


def _corr_scales(spec: DepolarizingSpec) -> tuple[float, float]:
    eta, m = spec.eta, spec.memory
    diag = m + (1.0 - m) * eta * eta
    off = m * eta + (1.0 - m) * eta * eta
    return diag, off


def product_output_purity(b1: np.ndarray, b2: np.ndarray, spec: DepolarizingSpec) -> float:
    """Purity ``tr(out^2)`` of the channel output for a pure product input.

    Closed form: with ``a`` and ``o`` the diagonal and off-diagonal correlation
    scales of the channel,

        (1/4) (1 + 2 eta^2 + a^2 sum_i b1_i^2 b2_i^2
                           + o^2 sum_{i != j} b1_i^2 b2_j^2)
    """
    b1 = _check_unit(b1, "b1")
    b2 = _check_unit(b2, "b2")
    diag, off = _corr_scales(spec)
    q1, q2 = b1 * b1, b2 * b2
    aligned = float((q1 * q2).sum())
    cross = float(q1.sum() * q2.sum()) - aligned
    eta2 = spec.eta * spec.eta
    return 0.25 * (1.0 + 2.0 * eta2 + diag * diag * aligned + off * off * cross)


def product_output_fidelity(b1: np.ndarray, b2: np.ndarray, spec: DepolarizingSpec) -> float:
    """Overlap ``tr(in * out)`` between a pure product input and its channel output.

    Maximized, over all product pairs, by both Bloch vectors on a common Pauli
    axis; same structure as :func:`product_output_purity` with unsquared scales.
    """
    b1 = _check_unit(b1, "b1")
    b2 = _check_unit(b2, "b2")
    diag, off = _corr_scales(spec)
    q1, q2 = b1 * b1, b2 * b2
    aligned = float((q1 * q2).sum())
    cross = float(q1.sum() * q2.sum()) - aligned
    return 0.25 * (1.0 + 2.0 * spec.eta + diag * aligned + off * cross)


# --- multi-start product-ensemble search -----------------------------------

_N_STATES = 4
_SWEEP_TOL = 1e-11


def _bloch_of(polar: np.ndarray, azimuth: np.ndarray) -> np.ndarray:
    """Unit Bloch vectors from spherical angles; inputs broadcast elementwise."""
    st = np.sin(polar)
    return np.stack([st * np.cos(azimuth), st * np.sin(azimuth), np.cos(polar)], axis=-1)


def _entropy_rows(lam: np.ndarray) -> np.ndarray:
    """Shannon entropy (bits) along the last axis; round-off negatives clipped."""
    lam = np.clip(lam, 0.0, None)
    safe = np.where(lam > 0.0, lam, 1.0)
    return np.maximum(-(lam * np.log2(safe)).sum(axis=-1), 0.0)


def _output_batch(b1s: np.ndarray, b2s: np.ndarray, spec: DepolarizingSpec) -> np.ndarray:
    """Channel outputs (..., 4, 4) for pure product inputs given as Bloch rows (..., 3)."""
    eta = spec.eta
    diag, off = _corr_scales(spec)
    coeff = np.full((3, 3), off)
    np.fill_diagonal(coeff, diag)
    corr = coeff * b1s[..., :, None] * b2s[..., None, :]
    rho = (
        _EYE4
        + eta * np.einsum("...k,kij->...ij", b1s, _SINGLE1)
        + eta * np.einsum("...k,kij->...ij", b2s, _SINGLE2)
        + np.einsum("...kl,klij->...ij", corr, _PAIRS)
    )
    return 0.25 * rho


def _golden_max_rows(
    f: Callable[[np.ndarray], np.ndarray],
    a: np.ndarray,
    b: np.ndarray,
    tol: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Row-wise golden-section maximization: one bracket per row, in lockstep.

    ``f`` maps a vector of abscissas (one per row) to a vector of values; every
    row runs the same number of shrink steps, enough to take the widest initial
    bracket below ``tol``.
    """
    width = b - a
    c = b - _INV_PHI * width
    d = a + _INV_PHI * width
    fc, fd = f(c), f(d)
    w0 = float(width.max())
    if w0 > tol:
        steps = int(np.ceil(np.log(w0 / tol) / np.log(1.0 / _INV_PHI)))
        for _ in range(min(steps, 120)):
            take = fc > fd  # rows keeping [a, d]; the rest keep [c, b]
            a1 = np.where(take, a, c)
            b1 = np.where(take, d, b)
            w = b1 - a1
            c_fresh = b1 - _INV_PHI * w
            d_fresh = a1 + _INV_PHI * w
            fx = f(np.where(take, c_fresh, d_fresh))
            c1 = np.where(take, c_fresh, d)
            fc1 = np.where(take, fx, fd)
            d1 = np.where(take, c, d_fresh)
            fd1 = np.where(take, fc, fx)
            a, b, c, d, fc, fd = a1, b1, c1, d1, fc1, fd1
    pick_c = fc >= fd
    return np.where(pick_c, c, d), np.where(pick_c, fc, fd)


def search_product_ensembles(
    spec: DepolarizingSpec,
    restarts: int = 50,
    seed: int = 0,
    max_sweeps: int = 40,
    line_grid: int = 9,
    line_tol: float = 2e-4,
) -> ProductSearchResult:
    """Multi-start coordinate ascent over ensembles of four pure product states.

    Each state is parameterized by spherical angles of its two single-qubit
    Bloch vectors (16 coordinates total); priors are fixed at 1/4. Every
    restart draws a uniformly random configuration, then cycles through the
    coordinates maximizing the ensemble information one angle at a time (grid
    scan plus golden-section refinement). All restarts advance in lockstep so
    the eigenvalue work stays batched; the search stops when no restart gains
    more than 1e-11 over a full sweep. Deterministic for a given ``seed``;
    ties between restarts keep the earliest.
    """
    if restarts < 1:
        raise ValueError(f"restarts must be at least 1, got {restarts}")
    if line_grid < 5:
        raise ValueError(f"line_grid must be at least 5, got {line_grid}")
    rng = np.random.default_rng(seed)
    # Uniform directions: polar from arccos of a uniform cosine, azimuth uniform.
    angles = np.empty((restarts, _N_STATES, 4))
    angles[..., 0] = np.arccos(rng.uniform(-1.0, 1.0, size=(restarts, _N_STATES)))
    angles[..., 1] = rng.uniform(0.0, 2.0 * np.pi, size=(restarts, _N_STATES))
    angles[..., 2] = np.arccos(rng.uniform(-1.0, 1.0, size=(restarts, _N_STATES)))
    angles[..., 3] = rng.uniform(0.0, 2.0 * np.pi, size=(restarts, _N_STATES))

    bounds = (np.pi, 2.0 * np.pi, np.pi, 2.0 * np.pi)  # polar1, azim1, polar2, azim2
    rows = np.arange(restarts)

    outs = _output_batch(
        _bloch_of(angles[..., 0], angles[..., 1]),
        _bloch_of(angles[..., 2], angles[..., 3]),
        spec,
    )  # (restarts, 4 states, 4, 4)
    ents = _entropy_rows(np.linalg.eigvalsh(outs))
    value = _entropy_rows(np.linalg.eigvalsh(outs.mean(axis=1))) - ents.mean(axis=1)

    def line_eval(
        state: int,
        coord: int,
        xs: np.ndarray,
        others: np.ndarray,
        ents_other: np.ndarray,
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Ensemble value with ``angles[:, state, coord]`` replaced by ``xs``.

        ``xs`` has shape (restarts,) or (restarts, grid); returns values plus
        the trial state's outputs and entropies at the same shape.
        """
        base = angles[:, state, :]
        if xs.ndim == 1:
            trial = base.copy()
            trial[:, coord] = xs
        else:
            trial = np.broadcast_to(base[:, None, :], xs.shape + (4,)).copy()
            trial[..., coord] = xs
            others = others[:, None]
            ents_other = ents_other[:, None]
        out_i = _output_batch(
            _bloch_of(trial[..., 0], trial[..., 1]),
            _bloch_of(trial[..., 2], trial[..., 3]),
            spec,
        )
        ent_i = _entropy_rows(np.linalg.eigvalsh(out_i))
        avg_ent = _entropy_rows(np.linalg.eigvalsh((others + out_i) / _N_STATES))
        return avg_ent - (ents_other + ent_i) / _N_STATES, out_i, ent_i

    for _ in range(max_sweeps):
        gains = np.zeros(restarts)
        for i in range(_N_STATES):
            others = outs.sum(axis=1) - outs[:, i]
            ents_other = ents.sum(axis=1) - ents[:, i]
            for c in range(4):
                xs_grid = np.linspace(0.0, bounds[c], line_grid)
                grid_vals, _, _ = line_eval(
                    i, c, np.broadcast_to(xs_grid, (restarts, line_grid)), others, ents_other
                )
                j = grid_vals.argmax(axis=1)
                x_star, v_star = _golden_max_rows(
                    lambda xs: line_eval(i, c, xs, others, ents_other)[0],
                    xs_grid[np.maximum(j - 1, 0)],
                    xs_grid[np.minimum(j + 1, line_grid - 1)],
                    line_tol,
                )
                keep_grid = grid_vals[rows, j] >= v_star
                x_star = np.where(keep_grid, xs_grid[j], x_star)
                v_best, out_i, ent_i = line_eval(i, c, x_star, others, ents_other)
                improve = v_best > value
                if improve.any():
                    gains += np.where(improve, v_best - value, 0.0)
                    value = np.where(improve, v_best, value)
                    angles[improve, i, c] = x_star[improve]
                    outs[improve, i] = out_i[improve]
                    ents[improve, i] = ent_i[improve]
        if gains.max() < _SWEEP_TOL:
            break

    best_restart = int(value.argmax())  # first maximum wins ties
    best_angles = angles[best_restart]
    b1s = _bloch_of(best_angles[:, 0], best_angles[:, 1])
    b2s = _bloch_of(best_angles[:, 2], best_angles[:, 3])
    return ProductSearchResult(
        information=float(value[best_restart]),
        bloch1=b1s,
        bloch2=b2s,
        angles=best_angles.copy(),
        restart=best_restart,
        restart_values=value.copy(),
    )
