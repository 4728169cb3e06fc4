"""Linear matrix ODE transport along complex contours.

Embedded Dormand-Prince 5(4) pair on the complex matrix state F, integrating

    dF/ds = z'(s) * rhs(z(s)) @ F

segment by segment along a PathSpec.  The systems here are oscillatory but
linear, so an explicit adaptive pair with error-per-unit-arclength control
is enough; stiffness shows up only as step-size underflow, which is raised.
"""

from __future__ import annotations

import numpy as np

from ..errors import StepSizeError
from .paths import PathSpec

# Dormand-Prince tableau.
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_B4 = np.array([5179 / 57600, 0.0, 7571 / 16695, 393 / 640,
                -92097 / 339200, 187 / 2100, 1 / 40])

_MIN_STEP_FRACTION = 1e-12
_MAX_STEPS = 2_000_000


def _step(fun, t, y, h):
    k = [fun(t, y)]
    for i in range(1, 7):
        acc = np.zeros_like(y)
        for j, a in enumerate(_A[i]):
            if a != 0.0:
                acc = acc + a * k[j]
        k.append(fun(t + _C[i] * h, y + h * acc))
    y5 = y + h * sum(b * ki for b, ki in zip(_B5, k) if b != 0.0)
    y4 = y + h * sum(b * ki for b, ki in zip(_B4, k) if b != 0.0)
    return y5, float(np.max(np.abs(y5 - y4)))


def ode_propagate(rhs, path: PathSpec, f0: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Transport f0 along the path under dF/dz = rhs(z) F.

    Local error is controlled to <= tol per unit arclength relative to the
    current solution magnitude.  rhs(z) must be analytic on the path and the
    path must avoid singularities of rhs.
    """
    y = np.array(f0, dtype=complex)
    if y.ndim == 0:
        y = y.reshape(1, 1)
    squeeze = np.isscalar(f0) or np.ndim(f0) == 0

    for seg in path.segments:
        length = seg.length
        if length == 0.0:
            continue

        def fun(t, state, seg=seg):
            m = np.asarray(rhs(seg.at(t)), dtype=complex)
            if m.ndim == 0:
                m = m.reshape(1, 1)
            return seg.deriv(t) * (m @ state)

        t, h = 0.0, 0.05
        steps = 0
        while t < 1.0:
            h = min(h, 1.0 - t)
            y5, err = _step(fun, t, y, h)
            scale = tol * (h * length) * (1.0 + float(np.max(np.abs(y))))
            ratio = err / scale if scale > 0 else np.inf
            if ratio <= 1.0:
                t += h
                y = y5
                h *= min(5.0, max(0.2, 0.9 * ratio ** -0.25 if ratio > 0 else 5.0))
            else:
                h *= max(0.1, 0.9 * ratio ** -0.25)
            if h < _MIN_STEP_FRACTION:
                raise StepSizeError(f"step underflow at t={t:.6f} on segment {seg}")
            steps += 1
            if steps > _MAX_STEPS:
                raise StepSizeError("step budget exhausted")
    return y[0, 0] if squeeze else y
