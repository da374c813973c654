"""Free response, impulse response and frequency transfer function.

The time-domain responses freeze the effective coefficients at one frequency
``omega`` and solve the resulting second-order equation in closed form, so
each result is a slice ``x(t, omega)`` of a time-frequency surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .effective import effective_params
from .errors import MassNonPositive, OverCritical, ResonanceSingular, StiffnessZero
from .model import VibratorSpec
from .restricted import Status

# omega_effd below this fraction of omega_effn uses the critical-damping limit
CRITICAL_RTOL = 1e-9
SINGULAR_MODULUS = 1e-300


@dataclass(frozen=True)
class InitialConditions:
    x0: float = 0.0
    v0: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.x0) and math.isfinite(self.v0)):
            raise ValueError("initial conditions must be finite")


@dataclass(frozen=True)
class TimeSeries:
    t: np.ndarray
    values: np.ndarray
    omega: float

    def envelope(self, start, stop):
        """max |value| over start <= t <= stop."""
        mask = (self.t >= start) & (self.t <= stop)
        return float(np.max(np.abs(self.values[mask])))


@dataclass(frozen=True)
class FrequencyResponsePoint:
    omega: float
    H: complex
    amplitude: float
    phase: float
    status: Status = Status.OK


@dataclass(frozen=True)
class _Modal:
    m_eff: float
    zeta: float
    omega_n: float
    omega_d: float
    critical: bool


def _modal(spec, omega):
    p = effective_params(spec, omega)
    if not p.m_eff > 0.0:
        raise MassNonPositive(f"m_eff = {p.m_eff!r} <= 0 at omega = {omega!r}")
    if not p.k_eff > 0.0:
        raise StiffnessZero(f"k_eff = {p.k_eff!r} at omega = {omega!r}")
    zeta = p.c_eff / (2.0 * math.sqrt(p.m_eff * p.k_eff))
    if abs(zeta) > 1.0:
        raise OverCritical(f"|zeta_eff| = {abs(zeta)!r} > 1 at omega = {omega!r}")
    wn = math.sqrt(p.k_eff / p.m_eff)
    wd = wn * math.sqrt(1.0 - zeta**2)
    return _Modal(p.m_eff, zeta, wn, wd, wd < CRITICAL_RTOL * wn)


def _time_grid(t):
    t = np.asarray(t, dtype=float)
    if t.ndim != 1 or np.any(t < 0) or np.any(np.diff(t) <= 0):
        raise ValueError("t must be a 1-D, strictly increasing grid of t >= 0")
    return t


def free_response(spec: VibratorSpec, omega: float, ic: InitialConditions, t) -> TimeSeries:
    """x(t) for x(0) = x0, x'(0) = v0 with coefficients frozen at ``omega``."""
    t = _time_grid(t)
    md = _modal(spec, omega)
    sigma = md.zeta * md.omega_n
    decay = np.exp(-sigma * t)
    if md.critical:
        x = decay * (ic.x0 + (ic.v0 + sigma * ic.x0) * t)
    else:
        wd = md.omega_d
        x = decay * (ic.x0 * np.cos(wd * t) + (ic.v0 + sigma * ic.x0) / wd * np.sin(wd * t))
    return TimeSeries(t, x, float(omega))


def impulse_response(spec: VibratorSpec, omega: float, t) -> TimeSeries:
    """h(t): response to a unit impulse from rest, coefficients frozen at ``omega``."""
    t = _time_grid(t)
    md = _modal(spec, omega)
    decay = np.exp(-md.zeta * md.omega_n * t)
    if md.critical:
        h = t * decay / md.m_eff
    else:
        h = decay * np.sin(md.omega_d * t) / (md.m_eff * md.omega_d)
    return TimeSeries(t, h, float(omega))


def transfer_function(spec: VibratorSpec, omega: float) -> FrequencyResponsePoint:
    """H(omega) = 1 / (k_eff (1 - gamma_eff^2 + 2i zeta_eff gamma_eff)).

    ``phase`` is the phase lag atan2(2 zeta gamma, 1 - gamma^2) in (-pi, pi],
    so that ``H = amplitude * exp(-1j * phase)``. For zeta >= 0 it equals the
    arccos form and lies in [0, pi].
    """
    p = effective_params(spec, omega)
    if not p.m_eff > 0.0:
        raise MassNonPositive(f"m_eff = {p.m_eff!r} <= 0 at omega = {omega!r}")
    if not p.k_eff > 0.0:
        raise StiffnessZero(f"k_eff = {p.k_eff!r} at omega = {omega!r}")
    zeta = p.c_eff / (2.0 * math.sqrt(p.m_eff * p.k_eff))
    gamma = omega / math.sqrt(p.k_eff / p.m_eff)
    re = 1.0 - gamma**2
    im = 2.0 * zeta * gamma
    modulus = math.hypot(re, im)
    if p.k_eff * modulus < SINGULAR_MODULUS:
        raise ResonanceSingular(f"transfer denominator vanishes at omega = {omega!r}")
    H = 1.0 / (p.k_eff * complex(re, im))
    amplitude = 1.0 / (p.k_eff * modulus)
    return FrequencyResponsePoint(float(omega), H, amplitude, math.atan2(im, re))


def phase_arccos(spec: VibratorSpec, omega: float) -> float:
    """The unsigned phase arccos((1 - gamma^2) / |1 - gamma^2 + 2i zeta gamma|)."""
    p = effective_params(spec, omega)
    if not p.m_eff > 0.0:
        raise MassNonPositive(f"m_eff = {p.m_eff!r} <= 0 at omega = {omega!r}")
    zeta = p.c_eff / (2.0 * math.sqrt(p.m_eff * p.k_eff))
    gamma = omega / math.sqrt(p.k_eff / p.m_eff)
    re = 1.0 - gamma**2
    return math.acos(max(-1.0, min(1.0, re / math.hypot(re, 2.0 * zeta * gamma))))
