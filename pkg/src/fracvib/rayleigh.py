"""Generalised Rayleigh damping.

With no primary damping (c = 0) the effective damping splits into a
mass-proportional and a stiffness-proportional part,

    c_gray = a(w) m + b(w) k,
    a(w) = w^(alpha-1) sin(alpha pi/2),
    b(w) = w^(lambda-1) sin(lambda pi/2).

With constant orders this is the usual Rayleigh form with frequency-dependent
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._numerics import as_frequency, power, sin_half_pi
from .errors import NonzeroPrimaryDamping
from .model import VibratorSpec, canonicalize


@dataclass(frozen=True)
class RayleighDecomposition:
    omega: float
    a: float
    b: float
    c_gray: float


def rayleigh_coefficients(spec: VibratorSpec, omega: float) -> RayleighDecomposition:
    if spec.c != 0.0:
        raise NonzeroPrimaryDamping(
            f"Rayleigh decomposition needs c = 0, got c = {spec.c!r}"
        )
    w = float(as_frequency(omega))
    spec = canonicalize(spec)
    alpha, _, lam = spec.orders_at(w)
    a = float(power(w, alpha - 1.0) * sin_half_pi(alpha))
    b = float(power(w, lam - 1.0) * sin_half_pi(lam))
    return RayleighDecomposition(w, a, b, a * spec.m + b * spec.k)
