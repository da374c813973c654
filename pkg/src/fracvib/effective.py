"""Effective mass, damping and stiffness of the equivalent second-order vibrator.

For a class-VI vibrator the variable-order equation is equivalent, at
frequency ``omega``, to

    m_eff x'' + c_eff x' + k_eff x = f(t)

with

    m_eff = -(m w^(a-2) cos(a pi/2) + c w^(b-2) cos(b pi/2))
    c_eff =   m w^(a-1) sin(a pi/2) + c w^(b-1) sin(b pi/2) + k w^(l-1) sin(l pi/2)
    k_eff =   k w^l cos(l pi/2)

Every other class is first rewritten as class VI (see
:func:`fracvib.model.canonicalize`). All functions accept a scalar or an
array of frequencies.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._numerics import as_frequency, cos_half_pi, power, scalarize, sin_half_pi
from .model import VibratorSpec, canonicalize


@dataclass(frozen=True)
class EffectiveParams:
    omega: float
    m_eff: float
    c_eff: float
    k_eff: float


def _prepare(spec, omega):
    w = as_frequency(omega)
    spec = canonicalize(spec)
    a, b, l = spec.orders_at(w)
    return spec, w, a, b, l


def _mass(spec, w, a, b):
    return -(spec.m * power(w, a - 2.0) * cos_half_pi(a)
             + spec.c * power(w, b - 2.0) * cos_half_pi(b))


def _damping(spec, w, a, b, l):
    # grouped as coefficient * (w^nu sin) so the c = 0 case matches a*m + b*k bitwise
    return (spec.m * (power(w, a - 1.0) * sin_half_pi(a))
            + spec.c * (power(w, b - 1.0) * sin_half_pi(b))
            + spec.k * (power(w, l - 1.0) * sin_half_pi(l)))


def _stiffness(spec, w, l):
    return spec.k * power(w, l) * cos_half_pi(l)


def effective_mass(spec: VibratorSpec, omega):
    spec, w, a, b, _ = _prepare(spec, omega)
    return scalarize(_mass(spec, w, a, b))


def effective_damping(spec: VibratorSpec, omega):
    spec, w, a, b, l = _prepare(spec, omega)
    return scalarize(_damping(spec, w, a, b, l))


def effective_stiffness(spec: VibratorSpec, omega):
    spec, w, _, _, l = _prepare(spec, omega)
    return scalarize(_stiffness(spec, w, l))


def effective_params(spec: VibratorSpec, omega: float) -> EffectiveParams:
    """All three effective coefficients at a single frequency."""
    spec, w, a, b, l = _prepare(spec, float(omega))
    return EffectiveParams(
        omega=float(omega),
        m_eff=float(_mass(spec, w, a, b)),
        c_eff=float(_damping(spec, w, a, b, l)),
        k_eff=float(_stiffness(spec, w, l)),
    )


def spectral_polynomial(spec: VibratorSpec, omega):
    """D(omega) = m (i w)^a + c (i w)^b + k (i w)^l on the principal branch.

    Computed as exp(nu * Log(i w)) with Log(i w) = ln w + i pi/2, i.e. by
    complex exponentiation rather than the real/imaginary split used for
    the effective parameters.
    """
    spec, w, a, b, l = _prepare(spec, omega)
    log_iw = np.log(w) + 0.5j * np.pi
    out = (spec.m * np.exp(a * log_iw)
           + spec.c * np.exp(b * log_iw)
           + spec.k * np.exp(l * log_iw))
    return scalarize(out)


def equivalent_polynomial(spec: VibratorSpec, omega):
    """k_eff - m_eff w^2 + i w c_eff; equals :func:`spectral_polynomial`."""
    w = as_frequency(omega)
    m_eff = effective_mass(spec, w)
    c_eff = effective_damping(spec, w)
    k_eff = effective_stiffness(spec, w)
    return scalarize(k_eff - m_eff * w**2 + 1j * w * c_eff)
