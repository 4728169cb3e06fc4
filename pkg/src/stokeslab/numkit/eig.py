"""Hermitian eigenvalues by cyclic Jacobi rotations.

Sizes here are tiny (k <= 12), where cyclic Jacobi is unconditionally
convergent and delivers eigenpairs to full working precision.  Each sweep
annihilates every off-diagonal pivot with a complex plane rotation

    J = [[c, s], [-conj(s), c]],   c real,  |s|^2 + c^2 = 1,

chosen so that (J^H A J)[p, q] = 0.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import NonHermitianError

_MAX_SIZE = 12
_MAX_SWEEPS = 40


def _offdiag_norm(a: np.ndarray) -> float:
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(np.sqrt(np.sum(np.abs(a[mask]) ** 2)))


def herm_eig_system(m: np.ndarray, tol: float = 1e-13):
    """Return (eigenvalues ascending, eigenvector columns) of a Hermitian m."""
    a = np.asarray(m, dtype=complex)
    k = a.shape[0]
    if a.shape != (k, k) or k < 1:
        raise ValueError("herm_eigs expects a square matrix of size >= 1")
    if k > _MAX_SIZE:
        raise ValueError(f"herm_eigs supports k <= {_MAX_SIZE}, got {k}")
    scale = max(float(np.max(np.abs(a))), 1e-300)
    if _offdiag_norm(a - a.conj().T) + float(np.max(np.abs(np.diag(a).imag))) > tol * scale * k:
        raise NonHermitianError("input matrix is not Hermitian within tolerance")
    a = 0.5 * (a + a.conj().T)

    v = np.eye(k, dtype=complex)
    for _ in range(_MAX_SWEEPS):
        off = _offdiag_norm(a)
        if off <= 1e-15 * scale * k:
            break
        for p in range(k - 1):
            for q in range(p + 1, k):
                b = a[p, q]
                if abs(b) <= 1e-18 * scale:
                    continue
                phase = b / abs(b)
                tau = (a[p, p].real - a[q, q].real) / (2.0 * abs(b))
                # Smaller-magnitude root of t^2 - 2*tau*t - 1 = 0, in the
                # cancellation-free reciprocal form.
                sgn = 1.0 if tau >= 0.0 else -1.0
                t = -sgn / (abs(tau) + math.sqrt(tau * tau + 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = phase * (t * c)
                # Apply J on the right (columns p, q), J^H on the left.
                col_p = a[:, p] * c - a[:, q] * np.conj(s)
                col_q = a[:, p] * s + a[:, q] * c
                a[:, p], a[:, q] = col_p, col_q
                row_p = a[p, :] * c - a[q, :] * s
                row_q = a[p, :] * np.conj(s) + a[q, :] * c
                a[p, :], a[q, :] = row_p, row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p] * c - v[:, q] * np.conj(s)
                vq = v[:, p] * s + v[:, q] * c
                v[:, p], v[:, q] = vp, vq
    eigs = np.diag(a).real.copy()
    order = np.argsort(eigs, kind="stable")
    return eigs[order], v[:, order]


def herm_eigs(m: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix (k <= 12)."""
    eigs, _ = herm_eig_system(m, tol=tol)
    return eigs
