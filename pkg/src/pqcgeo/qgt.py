"""Quantum Geometric Tensor over ansatz parameters.

G_ij = <d_i psi | d_j psi> - <d_i psi | psi><psi | d_j psi>

The real part is the Fubini-Study metric used by natural-gradient descent.
The subtraction term makes G invariant under parameter-dependent global
phases, which is why gauge parameters produce exactly-zero rows.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ansatz

DENSE = "dense"
BLOCK = "block"
DIAG = "diag"
_MODE_ALIASES = {
    "dense": DENSE,
    "block": BLOCK,
    "block_diagonal": BLOCK,
    "block-diagonal": BLOCK,
    "diag": DIAG,
    "diagonal": DIAG,
}
METRIC_MODES = (DENSE, BLOCK, DIAG)


class DegenerateMetricError(RuntimeError):
    """Every metric eigenvalue fell below the inversion threshold."""


@dataclass(frozen=True)
class PseudoInverse:
    """Spectral pseudo-inverse keeping eigenvalues above rcond * lambda_max."""

    rcond: float = 1e-8

    def __post_init__(self):
        if not self.rcond > 0:
            raise ValueError("rcond must be positive")


@dataclass(frozen=True)
class Tikhonov:
    """(g + epsilon I)^-1 regularized inverse."""

    epsilon: float = 1e-3

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")


InversionPolicy = PseudoInverse | Tikhonov


def canonical_mode(mode: str) -> str:
    try:
        return _MODE_ALIASES[str(mode).strip().lower()]
    except KeyError:
        raise ValueError(f"unknown metric mode {mode!r}; expected dense/block/diag") from None


def qgt_from_state(psi: np.ndarray, jac: np.ndarray) -> np.ndarray:
    """QGT from a state and its parameter Jacobian (columns d|psi>/d theta_j)."""
    v = jac.conj().T @ psi
    return jac.conj().T @ jac - np.outer(v, v.conj())


def qgt_full(kind: str, theta) -> np.ndarray:
    """Hermitian m x m QGT of the ansatz at theta."""
    psi, jac = ansatz.state_and_jacobian(kind, theta)
    return qgt_from_state(psi, jac)


def block_mask(kind: str, mode: str = BLOCK) -> np.ndarray:
    """Boolean mask of entries kept by the approximation mode."""
    mode = canonical_mode(mode)
    m = ansatz.param_count(kind)
    if mode == DENSE:
        return np.ones((m, m), dtype=bool)
    mask = np.zeros((m, m), dtype=bool)
    if mode == DIAG:
        mask[np.diag_indices(m)] = True
        return mask
    for block in ansatz.BLOCK_PARTITIONS[ansatz.resolve_kind(kind)]:
        for i in block:
            for j in block:
                mask[i, j] = True
    return mask


def fs_metric(kind: str, theta, mode: str = DENSE) -> np.ndarray:
    """Fubini-Study metric Re(QGT), exactly symmetrized, with the mode mask applied.

    Entries outside the dense/block/diagonal mask are exactly zero.
    """
    g = qgt_full(kind, theta).real
    g = 0.5 * (g + g.T)
    mode = canonical_mode(mode)
    if mode == DENSE:
        return g
    return np.where(block_mask(kind, mode), g, 0.0)


def invert_metric(g: np.ndarray, policy: InversionPolicy = PseudoInverse()) -> np.ndarray:
    """Regularized inverse of a symmetric metric.

    PseudoInverse: eigendecompose, invert eigenvalues above rcond * lambda_max,
    zero the rest; raises DegenerateMetricError when nothing survives.
    Tikhonov: plain (g + epsilon I)^-1.
    """
    g = np.asarray(g, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise ValueError("metric must be a square matrix")
    if np.abs(g - g.T).max() > 1e-10:
        raise ValueError("metric must be symmetric")
    g = 0.5 * (g + g.T)
    if isinstance(policy, Tikhonov):
        inv = np.linalg.inv(g + policy.epsilon * np.eye(g.shape[0]))
        return 0.5 * (inv + inv.T)
    w, v = np.linalg.eigh(g)
    thresh = policy.rcond * np.abs(w).max() if np.abs(w).max() > 0 else np.inf
    keep = w > thresh
    if not np.any(keep):
        raise DegenerateMetricError("all metric eigenvalues below the pseudo-inverse threshold")
    winv = np.where(keep, 1.0 / np.where(keep, w, 1.0), 0.0)
    inv = (v * winv) @ v.T
    return 0.5 * (inv + inv.T)
