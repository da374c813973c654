"""Closed forms written directly for classes I-V.

These do not go through :func:`fracvib.model.canonicalize`; each class has
its own hand-reduced effective coefficients, and the restricted quantities,
responses and transfer function are then built from those. The
class-reduction check compares them with the class-VI pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._numerics import cos_half_pi, power, sin_half_pi
from .model import VibratorClass, VibratorSpec


@dataclass(frozen=True)
class ClassResult:
    m_eff: float
    c_eff: float
    k_eff: float
    mass_positive: bool
    zeta: Optional[float] = None
    omega_n: Optional[float] = None
    omega_d: Optional[float] = None
    gamma: Optional[float] = None
    H: Optional[complex] = None
    x: Optional[np.ndarray] = None
    h: Optional[np.ndarray] = None


def _class_I(spec, w):
    a = spec.alpha(w)
    m_eff = -spec.m * power(w, a - 2.0) * cos_half_pi(a)
    c_eff = spec.m * (power(w, a - 1.0) * sin_half_pi(a))
    return m_eff, c_eff, spec.k


def _class_II(spec, w):
    b = spec.beta(w)
    m_eff = spec.m - spec.c * power(w, b - 2.0) * cos_half_pi(b)
    c_eff = spec.c * (power(w, b - 1.0) * sin_half_pi(b))
    return m_eff, c_eff, spec.k


def _class_III(spec, w):
    a, b = spec.alpha(w), spec.beta(w)
    m_eff = -(spec.m * power(w, a - 2.0) * cos_half_pi(a)
              + spec.c * power(w, b - 2.0) * cos_half_pi(b))
    c_eff = (spec.m * (power(w, a - 1.0) * sin_half_pi(a))
             + spec.c * (power(w, b - 1.0) * sin_half_pi(b)))
    return m_eff, c_eff, spec.k


def _class_IV(spec, w):
    a, l = spec.alpha(w), spec.lam(w)
    m_eff = -spec.m * power(w, a - 2.0) * cos_half_pi(a)
    c_eff = (spec.m * (power(w, a - 1.0) * sin_half_pi(a))
             + spec.k * (power(w, l - 1.0) * sin_half_pi(l)))
    k_eff = spec.k * power(w, l) * cos_half_pi(l)
    return m_eff, c_eff, k_eff


def _class_V(spec, w):
    l = spec.lam(w)
    c_eff = spec.k * (power(w, l - 1.0) * sin_half_pi(l))
    k_eff = spec.k * power(w, l) * cos_half_pi(l)
    return spec.m, c_eff, k_eff


_COEFFICIENTS = {
    VibratorClass.I: _class_I,
    VibratorClass.II: _class_II,
    VibratorClass.III: _class_III,
    VibratorClass.IV: _class_IV,
    VibratorClass.V: _class_V,
}


def class_effective(spec: VibratorSpec, omega: float):
    """(m_eff, c_eff, k_eff) from the class's own reduced formulas."""
    try:
        fn = _COEFFICIENTS[spec.vibrator_class]
    except KeyError:
        raise ValueError("class-specific forms exist only for classes I-V") from None
    return tuple(float(v) for v in fn(spec, float(omega)))


def class_result(spec: VibratorSpec, omega: float, x0=1.0, v0=1.0, t=None) -> ClassResult:
    """Every quantity of one class at ``omega``; responses on ``t`` if given."""
    m_eff, c_eff, k_eff = class_effective(spec, omega)
    if not m_eff > 0.0:
        return ClassResult(m_eff, c_eff, k_eff, False)

    omega_n = math.sqrt(k_eff / m_eff)
    zeta = c_eff / (2.0 * math.sqrt(m_eff * k_eff))
    gamma = omega / omega_n
    H = 1.0 / (k_eff * complex(1.0 - gamma**2, 2.0 * zeta * gamma))
    if abs(zeta) > 1.0:
        return ClassResult(m_eff, c_eff, k_eff, True, zeta, omega_n, None, gamma, H)

    omega_d = omega_n * math.sqrt(1.0 - zeta**2)
    x = h = None
    if t is not None:
        t = np.asarray(t, dtype=float)
        decay = np.exp(-zeta * omega_n * t)
        x = decay * (x0 * np.cos(omega_d * t)
                     + (v0 + zeta * omega_n * x0) / omega_d * np.sin(omega_d * t))
        h = decay / (m_eff * omega_d) * np.sin(omega_d * t)
    return ClassResult(m_eff, c_eff, k_eff, True, zeta, omega_n, omega_d, gamma, H, x, h)
