"""Simultaneous polynomial root finding (Aberth-Ehrlich).

Coefficients are given highest-degree first, like numpy's poly1d.  The
iteration starts from a circle whose radius comes from the coefficient
magnitudes, with deterministic staggered phases so symmetric configurations
cannot lock.  A batch variant runs the iteration vectorized over many
polynomials of equal degree; it is the workhorse for sheet continuation.
"""

from __future__ import annotations

import numpy as np

from ..errors import RootFindingError

_MAX_ITER = 120
_MAX_DEGREE = 24
# Golden-angle stagger; breaks the symmetry of exact roots of unity.
_PHASE_OFFSET = 0.35731921438


def _initial_circle(coeffs: np.ndarray) -> np.ndarray:
    d = len(coeffs) - 1
    lead = abs(coeffs[0])
    tail = abs(coeffs[-1])
    if tail > 0.0:
        r = (tail / lead) ** (1.0 / d)
    else:
        r = 1.0
    cauchy = 1.0 + float(np.max(np.abs(coeffs[1:]))) / lead
    r = min(max(r, 1e-8), cauchy)
    ang = 2.0 * np.pi * (np.arange(d) + _PHASE_OFFSET) / d + 0.5 / d
    return r * np.exp(1j * ang)


def poly_roots(coeffs, max_degree: int = 12) -> np.ndarray:
    """All complex roots of sum_k coeffs[k] z^(d-k), leading coefficient first.

    Raises RootFindingError for a (numerically) vanishing leading coefficient
    or when the evaluation residual |p(root)| exceeds 1e-10 times the
    evaluation scale sum_k |c_k| |root|^(d-k).
    """
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim != 1 or len(c) < 2:
        raise ValueError("need a polynomial of degree >= 1")
    d = len(c) - 1
    if d > max_degree:
        raise ValueError(f"degree {d} exceeds supported bound {max_degree}")
    big = float(np.max(np.abs(c)))
    if big == 0.0 or abs(c[0]) <= 1e-14 * big:
        raise RootFindingError("degenerate (zero) leading coefficient")
    roots = poly_roots_batch(c[None, :])[0]
    _check_residuals(c[None, :], roots[None, :])
    return roots


def poly_roots_batch(coeff_rows: np.ndarray) -> np.ndarray:
    """Vectorized Aberth iteration: coeff_rows has shape (m, d+1)."""
    c = np.asarray(coeff_rows, dtype=complex)
    m, width = c.shape
    d = width - 1
    c = c / c[:, :1]
    dc = c[:, :-1] * np.arange(d, 0, -1)[None, :]

    x = np.empty((m, d), dtype=complex)
    for i in range(m):
        x[i] = _initial_circle(c[i])

    for _ in range(_MAX_ITER):
        p = np.zeros((m, d), dtype=complex)
        for k in range(width):
            p = p * x + c[:, k, None]
        dp = np.zeros((m, d), dtype=complex)
        for k in range(width - 1):
            dp = dp * x + dc[:, k, None]
        w = p / np.where(dp == 0, 1e-300, dp)
        diff = x[:, :, None] - x[:, None, :]
        idx = np.arange(d)
        diff[:, idx, idx] = 1.0  # keep the diagonal harmless
        inv = 1.0 / np.where(diff == 0, 1e-300, diff)
        inv[:, idx, idx] = 0.0
        s = inv.sum(axis=2)
        denom = 1.0 - w * s
        step = w / np.where(denom == 0, 1e-300, denom)
        x = x - step
        if np.max(np.abs(step)) <= 1e-15 * (1.0 + np.max(np.abs(x))):
            break
    return x


def _check_residuals(c: np.ndarray, roots: np.ndarray) -> None:
    m, width = c.shape
    p = np.zeros_like(roots)
    scale = np.zeros(roots.shape, dtype=float)
    for k in range(width):
        p = p * roots + c[:, k, None]
        scale = scale * np.abs(roots) + abs(c[:, k, None])
    rel = np.abs(p) / np.maximum(scale, 1e-300)
    worst = float(np.max(rel))
    if worst > 1e-10:
        raise RootFindingError(f"root residual {worst:.3e} exceeds 1e-10")


def cluster_roots(roots: np.ndarray, tol: float = 1e-8):
    """Group roots into multiplicity clusters of radius tol.

    Returns a list of (center, multiplicity), centers averaged per cluster.
    """
    remaining = list(np.asarray(roots, dtype=complex))
    clusters = []
    while remaining:
        seed = remaining.pop(0)
        members = [seed]
        keep = []
        for r in remaining:
            if abs(r - seed) <= tol * (1.0 + abs(seed)):
                members.append(r)
            else:
                keep.append(r)
        remaining = keep
        clusters.append((complex(np.mean(members)), len(members)))
    return clusters
