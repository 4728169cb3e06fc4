"""Numerical Stokes data, spectral curves, periods and spectral networks
for the rank-n linear system with one simple pole (at 0) and one double
pole (at infinity), under Hermitian reality conditions."""

__version__ = "0.1.0"
