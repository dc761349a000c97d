"""Linear-algebra substrate for two-qubit states.

Conventions used throughout the package:

* Two-qubit computational basis is ordered ``|00>, |01>, |10>, |11>``, i.e.
  index ``2*a + b`` for qubit values ``(a, b)``.
* Pauli operators are indexed ``0 = identity, 1 = x, 2 = y, 3 = z``.
* A two-qubit state ``rho`` is parameterized by two local Bloch vectors and a
  3x3 correlation matrix::

      rho = (1/4) * ( I4
                      + sum_k b1[k] * sigma_k (x) I
                      + sum_k b2[k] * I (x) sigma_k
                      + sum_kl corr[k, l] * sigma_k (x) sigma_l )

  with ``b1[k] = tr(rho (sigma_k (x) I))``, ``b2[k] = tr(rho (I (x) sigma_k))``
  and ``corr[k, l] = tr(rho (sigma_k (x) sigma_l))``, k, l in {x, y, z}.

All functions are pure; input arrays are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PAULIS",
    "TwoQubitBloch",
    "pauli",
    "kron2",
    "eig_hermitian",
    "spectrum_entropy",
    "von_neumann_entropy",
    "check_density_matrix",
    "bloch_from_density",
    "density_from_bloch",
]

#: Default absolute tolerance for validity checks (Hermiticity, trace, norms).
DEFAULT_TOL = 1e-12

#: Eigenvalues may round below zero by at most this much and still count as valid.
PSD_TOL = 1e-10

_I2 = np.eye(2, dtype=complex)
_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)

#: Stacked single-qubit Paulis, shape (4, 2, 2), index order (I, x, y, z).
PAULIS = np.stack([_I2, _SX, _SY, _SZ])
PAULIS.setflags(write=False)

#: Stacked two-qubit Pauli products, shape (4, 4, 4, 4):
#: PAULI_PAIRS[k, l] = sigma_k (x) sigma_l in the fixed basis order.
PAULI_PAIRS = np.einsum("kab,lcd->klacbd", PAULIS, PAULIS).reshape(4, 4, 4, 4)
PAULI_PAIRS.setflags(write=False)


def pauli(k: int) -> np.ndarray:
    """Return the single-qubit Pauli operator with index ``k`` in {0, 1, 2, 3}."""
    if k not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be 0, 1, 2 or 3, got {k!r}")
    return PAULIS[k].copy()


def kron2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product of two 2x2 operators, ``(a (x) b)[2i+j, 2k+l] = a[i,k] b[j,l]``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"kron2 expects two 2x2 matrices, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def _hermiticity_defect(m: np.ndarray) -> float:
    return float(np.abs(m - m.conj().T).max())


def eig_hermitian(m: np.ndarray, tol: float = PSD_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(values, vectors)`` with eigenvalues ascending and eigenvectors as
    orthonormal columns, so that ``m == vectors @ diag(values) @ vectors.conj().T``.

    Raises ValueError if ``m`` deviates from Hermiticity by more than ``tol``
    in max-norm.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    defect = _hermiticity_defect(m)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian (defect {defect:.3e} > {tol:.1e})")
    values, vectors = np.linalg.eigh(m)
    return values, vectors


def spectrum_entropy(values: np.ndarray) -> float:
    """Shannon entropy (base 2) of a probability vector, with ``0 log 0 = 0``.

    Entries in ``[-1e-10, 0)`` are treated as round-off and clamped to zero;
    anything more negative raises ValueError.
    """
    lam = np.asarray(values, dtype=float)
    if lam.min() < -PSD_TOL:
        raise ValueError(
            f"negative probability {lam.min():.3e} below -{PSD_TOL:.1e}"
        )
    lam = np.where(lam > 0.0, lam, 0.0)
    pos = lam[lam > 0.0]
    s = float(-(pos * np.log2(pos)).sum())
    # A top eigenvalue rounding to 1 + O(eps) can push the sum to -O(eps).
    return max(s, 0.0)


def check_density_matrix(
    rho: np.ndarray,
    tol: float = DEFAULT_TOL,
    psd_tol: float = PSD_TOL,
) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, positive semidefinite.

    Returns the validated array (as complex ndarray); raises ValueError on the
    first violated property.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    defect = _hermiticity_defect(rho)
    if defect > tol:
        raise ValueError(f"state is not Hermitian (defect {defect:.3e})")
    tr = rho.trace()
    if abs(tr - 1.0) > tol:
        raise ValueError(f"state trace is {tr:.15g}, expected 1")
    lam = np.linalg.eigvalsh(rho)
    if lam.min() < -psd_tol:
        raise ValueError(f"state has negative eigenvalue {lam.min():.3e}")
    return rho


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Von Neumann entropy ``S(rho) = -tr(rho log2 rho)`` in bits.

    ``rho`` must be a valid density matrix; eigenvalues in ``[-1e-10, 0)`` are
    clamped to zero, more negative ones raise ValueError.
    """
    rho = np.asarray(rho, dtype=complex)
    defect = _hermiticity_defect(rho)
    if defect > DEFAULT_TOL:
        raise ValueError(f"state is not Hermitian (defect {defect:.3e})")
    return spectrum_entropy(np.linalg.eigvalsh(rho))


@dataclass(frozen=True)
class TwoQubitBloch:
    """Bloch-style parameterization of a two-qubit operator.

    Attributes
    ----------
    b1, b2:
        Local Bloch vectors of the first and second qubit, shape (3,).
    corr:
        Correlation matrix ``corr[k, l] = tr(rho (sigma_k (x) sigma_l))``,
        shape (3, 3).
    """

    b1: np.ndarray
    b2: np.ndarray
    corr: np.ndarray

    def __post_init__(self):
        b1 = np.asarray(self.b1, dtype=float).copy()
        b2 = np.asarray(self.b2, dtype=float).copy()
        corr = np.asarray(self.corr, dtype=float).copy()
        if b1.shape != (3,) or b2.shape != (3,):
            raise ValueError("Bloch vectors must have shape (3,)")
        if corr.shape != (3, 3):
            raise ValueError("correlation matrix must have shape (3, 3)")
        for arr in (b1, b2, corr):
            arr.setflags(write=False)
        object.__setattr__(self, "b1", b1)
        object.__setattr__(self, "b2", b2)
        object.__setattr__(self, "corr", corr)


def bloch_from_density(rho: np.ndarray, tol: float = DEFAULT_TOL) -> TwoQubitBloch:
    """Extract the Bloch representation of a two-qubit density matrix.

    All 15 components are real for a Hermitian input; an imaginary residue
    above ``tol`` raises ValueError.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {rho.shape}")
    if _hermiticity_defect(rho) > tol:
        raise ValueError("input is not Hermitian")
    # coeffs[k, l] = tr(rho (sigma_k (x) sigma_l)) for all 16 index pairs
    coeffs = np.einsum("ij,klji->kl", rho, PAULI_PAIRS)
    if np.abs(coeffs.imag).max() > tol:
        raise ValueError("Bloch components have nonzero imaginary part")
    c = coeffs.real
    return TwoQubitBloch(b1=c[1:, 0], b2=c[0, 1:], corr=c[1:, 1:])


def density_from_bloch(bloch: TwoQubitBloch, psd_tol: float = PSD_TOL) -> np.ndarray:
    """Reconstruct a two-qubit density matrix from its Bloch representation.

    Raises ValueError when the components do not describe a physical state
    (an eigenvalue falls below ``-psd_tol``).
    """
    c = np.empty((4, 4))
    c[0, 0] = 1.0
    c[1:, 0] = bloch.b1
    c[0, 1:] = bloch.b2
    c[1:, 1:] = bloch.corr
    rho = np.einsum("kl,klij->ij", c, PAULI_PAIRS) / 4.0
    lam = np.linalg.eigvalsh(rho)
    if lam.min() < -psd_tol:
        raise ValueError(
            f"Bloch components describe a non-positive operator "
            f"(eigenvalue {lam.min():.3e})"
        )
    return rho
