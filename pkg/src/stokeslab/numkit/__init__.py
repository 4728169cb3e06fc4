"""Self-contained numerical kernels.

Everything here is pure and reentrant: complex log-Gamma, a cyclic-Jacobi
Hermitian eigensolver, an Aberth-Ehrlich simultaneous root finder, adaptive
Gauss-Kronrod path quadrature, and an embedded Runge-Kutta propagator for
linear matrix ODEs along paths in the complex plane.
"""

from .gammafn import log_gamma
from .eig import herm_eigs, herm_eig_system
from .roots import poly_roots, poly_roots_batch, cluster_roots
from .paths import Arc, Line, PathSpec, circle
from .quad import integrate_path
from .odes import ode_propagate

__all__ = [
    "log_gamma",
    "herm_eigs",
    "herm_eig_system",
    "poly_roots",
    "poly_roots_batch",
    "cluster_roots",
    "Line",
    "Arc",
    "PathSpec",
    "circle",
    "integrate_path",
    "ode_propagate",
]
