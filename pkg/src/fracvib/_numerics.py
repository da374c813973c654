"""Low-level numeric primitives: real powers and quarter-turn trigonometry."""

import math

import numpy as np

from .errors import NonPositiveFrequency

# cos/sin of n*pi/2 for n mod 4
_COS_Q = np.array([1.0, 0.0, -1.0, 0.0])
_SIN_Q = np.array([0.0, 1.0, 0.0, -1.0])


def as_frequency(omega):
    """Return ``omega`` as a float array, rejecting non-positive entries."""
    if isinstance(omega, float):
        if not (math.isfinite(omega) and omega > 0.0):
            raise NonPositiveFrequency(f"frequency must be finite and > 0, got {omega!r}")
        return np.float64(omega)
    w = np.asarray(omega, dtype=float)
    if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
        raise NonPositiveFrequency(f"frequency must be finite and > 0, got {omega!r}")
    return w


def power(omega, nu):
    """omega**nu evaluated as exp(nu * ln(omega))."""
    return np.exp(np.multiply(nu, np.log(omega)))


def cos_half_pi(nu):
    """cos(nu*pi/2), exact at integer nu."""
    nu = np.asarray(nu, dtype=float)
    n = np.rint(nu)
    exact = _COS_Q[np.mod(n, 4).astype(int)]
    return np.where(nu == n, exact, np.cos(nu * (np.pi / 2)))


def sin_half_pi(nu):
    """sin(nu*pi/2), exact at integer nu."""
    nu = np.asarray(nu, dtype=float)
    n = np.rint(nu)
    exact = _SIN_Q[np.mod(n, 4).astype(int)]
    return np.where(nu == n, exact, np.sin(nu * (np.pi / 2)))


def scalarize(x):
    """Unwrap 0-d arrays to Python floats/complex; leave arrays alone."""
    if isinstance(x, np.ndarray) and x.ndim == 0:
        return x.item()
    return x
