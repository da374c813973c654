"""Restricted effective damping ratio, natural frequencies and frequency ratio.

These mirror the classical SDOF quantities but are only meaningful while the
effective mass is positive; the damped natural frequency additionally needs
``|zeta_eff| <= 1``. The scalar functions raise a
:class:`~fracvib.errors.RestrictionError` subclass when undefined, and
:func:`restricted_params` reports the same information as a status field so
that sweeps can record it per frequency.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .effective import effective_params
from .errors import MassNonPositive, OverCritical, StiffnessZero
from .model import VibratorSpec, canonicalize


class Status(str, enum.Enum):
    OK = "OK"
    MASS_NON_POSITIVE = "MassNonPositive"
    OVER_CRITICAL = "OverCritical"
    STIFFNESS_ZERO = "StiffnessZero"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RestrictedParams:
    omega: float
    status: Status
    zeta_eff: Optional[float] = None
    omega_effn: Optional[float] = None
    omega_effd: Optional[float] = None
    gamma_eff: Optional[float] = None


@dataclass(frozen=True)
class ClassicalParams:
    """zeta, omega_n, omega_d (None if overdamped) and gamma of m x'' + c x' + k x."""

    zeta: float
    omega_n: float
    omega_d: Optional[float]
    gamma: float


def classical_params(m, c, k, omega) -> ClassicalParams:
    zeta = c / (2.0 * math.sqrt(m * k))
    omega_n = math.sqrt(k / m)
    omega_d = omega_n * math.sqrt(1.0 - zeta**2) if abs(zeta) <= 1.0 else None
    return ClassicalParams(zeta, omega_n, omega_d, omega / omega_n)


def _checked(spec, omega):
    p = effective_params(spec, omega)
    if not p.m_eff > 0.0:
        raise MassNonPositive(f"m_eff = {p.m_eff!r} <= 0 at omega = {omega!r}")
    if not p.k_eff > 0.0:
        raise StiffnessZero(f"k_eff = {p.k_eff!r} at omega = {omega!r}")
    return p


def damping_ratio(spec: VibratorSpec, omega: float) -> float:
    p = _checked(spec, omega)
    return p.c_eff / (2.0 * math.sqrt(p.m_eff * p.k_eff))


def natural_frequency(spec: VibratorSpec, omega: float) -> float:
    p = _checked(spec, omega)
    return math.sqrt(p.k_eff / p.m_eff)


def damped_frequency(spec: VibratorSpec, omega: float) -> float:
    p = _checked(spec, omega)
    zeta = p.c_eff / (2.0 * math.sqrt(p.m_eff * p.k_eff))
    if abs(zeta) > 1.0:
        raise OverCritical(f"|zeta_eff| = {abs(zeta)!r} > 1 at omega = {omega!r}")
    return math.sqrt(p.k_eff / p.m_eff) * math.sqrt(1.0 - zeta**2)


def frequency_ratio(spec: VibratorSpec, omega: float) -> float:
    return omega / natural_frequency(spec, omega)


def restricted_params(spec: VibratorSpec, omega: float) -> RestrictedParams:
    """All four restricted quantities with a status instead of exceptions.

    Order-range and frequency errors still raise; only the restrictions are
    folded into ``status``.
    """
    p = effective_params(spec, omega)
    if not p.m_eff > 0.0:
        return RestrictedParams(omega, Status.MASS_NON_POSITIVE)
    if not p.k_eff > 0.0:
        return RestrictedParams(omega, Status.STIFFNESS_ZERO)
    zeta = p.c_eff / (2.0 * math.sqrt(p.m_eff * p.k_eff))
    wn = math.sqrt(p.k_eff / p.m_eff)
    gamma = omega / wn
    if abs(zeta) > 1.0:
        return RestrictedParams(omega, Status.OVER_CRITICAL, zeta, wn, None, gamma)
    wd = wn * math.sqrt(1.0 - zeta**2)
    return RestrictedParams(omega, Status.OK, zeta, wn, wd, gamma)


def frequency_ratio_direct(spec: VibratorSpec, omega: float) -> float:
    """gamma_eff written through the classical gamma, zeta and omega_n.

    gamma_eff = gamma * sqrt(-(w^(a-2) cos(a pi/2) + 2 zeta omega_n w^(b-2) cos(b pi/2))
                             / (w^l cos(l pi/2)))

    Algebraically identical to ``omega / natural_frequency``; kept as an
    independent evaluation route.
    """
    spec = canonicalize(spec)
    a, b, l = spec.orders_at(omega)
    cp = classical_params(spec.m, spec.c, spec.k, omega)
    num = -(omega ** (a - 2.0) * math.cos(a * math.pi / 2)
            + 2.0 * cp.zeta * cp.omega_n * omega ** (b - 2.0) * math.cos(b * math.pi / 2))
    den = omega**l * math.cos(l * math.pi / 2)
    if not num > 0.0:
        raise MassNonPositive(f"m_eff <= 0 at omega = {omega!r}")
    return cp.gamma * math.sqrt(num / den)
