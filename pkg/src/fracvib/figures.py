"""Catalog of reference figure panels and the sweeps behind them.

Each panel names one plotted quantity and one or more curves; a curve is a
spec plus, for time-domain panels, the frozen frequency. Choices not fixed
by the panel definitions are:

* frequency panels sweep 512 uniform points on [1e-3, 10] (transfer-function
  panels 5.3/5.4 on [1e-3, 2]);
* time panels use 2001 uniform points on [0, 50];
* time panels over "omega in (0, 1)" draw one curve per
  omega in {0.25, 0.5, 0.8, 0.9} (the first two are over-critical for
  both damping levels and come out as status rows);
* orders that do not affect the plotted quantity (lambda for m_eff, say)
  are left at their integer values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import effective, rayleigh, restricted, response
from .errors import FracVibError, RestrictionError, UnknownFigureId
from .model import VibratorClass, VibratorSpec

# variable-order profiles used by the panels
A_SIN = "1.10 + 1.89*abs(sin(w))"
A_COS_HALF = "1.10 + 1.89*abs(cos(0.5*w))"
A_COS_TENTH = "1.10 + 1.89*abs(cos(0.1*w))"
A_COS = "1.10 + 1.89*abs(cos(w))"
A_RAYLEIGH = "1.80 + 1.19*abs(sin(w))"
A_DECAY = "2.99*exp(-w)"
B_COS = "1 + 0.99*abs(cos(w))"
B_SIN = "1 + 0.99*abs(sin(w))"
L_SIN = "0.99*abs(sin(w))"
L_COS = "0.99*abs(cos(w))"
L_EXP = "0.99*abs(exp(-w))"

PANEL_PROFILES = (A_SIN, A_COS_HALF, A_COS_TENTH, A_COS, A_RAYLEIGH, A_DECAY,
                    B_COS, B_SIN, L_SIN, L_COS, L_EXP)

ALPHA_LOW = (1.3, 1.6, 1.9)
ALPHA_HIGH = (2.3, 2.6, 2.9)
FIXED_OMEGA = 1.1
OMEGA_SLICES = (0.25, 0.5, 0.8, 0.9)

OMEGA_MIN = 1e-3
OMEGA_COUNT = 512
T_MAX = 50.0
T_COUNT = 2001

QUANTITIES = {
    "m_eff": "omega", "c_eff": "omega", "k_eff": "omega",
    "zeta_eff": "omega", "omega_effn": "omega", "gamma_eff": "omega",
    "amplitude": "omega", "phase": "omega",
    "a": "omega", "b": "omega", "c_gray": "omega",
    "x": "t", "h": "t",
}


@dataclass(frozen=True)
class Curve:
    label: str
    spec: VibratorSpec
    omega: Optional[float] = None  # frozen frequency for time panels


@dataclass(frozen=True)
class Panel:
    id: str
    quantity: str
    curves: tuple
    x_max: float = 10.0
    x0: float = 1.0
    v0: float = 1.0
    note: str = field(default="", compare=False)

    @property
    def x_name(self) -> str:
        return QUANTITIES[self.quantity]

    def x_grid(self):
        if self.x_name == "t":
            return np.linspace(0.0, T_MAX, T_COUNT)
        return np.linspace(OMEGA_MIN, self.x_max, OMEGA_COUNT)


def _spec(m=1.0, c=1.0, k=1.0, alpha=2.0, beta=1.0, lam=0.0):
    return VibratorSpec(VibratorClass.VI, m=m, k=k, c=c, alpha=alpha, beta=beta, lam=lam)


def _alpha_family(alphas, omega=None, **kw):
    return tuple(Curve(f"alpha={a}", _spec(alpha=a, **kw), omega) for a in alphas)


def _one(spec, omega=None, label="variable"):
    return (Curve(label, spec, omega),)


def _slices(spec):
    return tuple(Curve(f"omega={w}", spec, w) for w in OMEGA_SLICES)


def _build():
    P = []
    # effective mass, m = c = k = 1
    P += [
        Panel("3.1a", "m_eff", _alpha_family(ALPHA_LOW, beta=1.0)),
        Panel("3.1b", "m_eff", _alpha_family(ALPHA_HIGH, beta=1.0)),
        Panel("3.1c", "m_eff", _alpha_family(ALPHA_LOW, beta=1.3)),
        Panel("3.1d", "m_eff", _alpha_family(ALPHA_HIGH, beta=1.3)),
        Panel("3.1e", "m_eff", _alpha_family(ALPHA_LOW, beta=0.9), note="negative m_eff at small omega"),
        Panel("3.1f", "m_eff", _one(_spec(alpha=A_SIN, beta=B_COS))),
    ]
    # effective damping, m = c = k = 1
    P += [
        Panel("3.2a", "c_eff", _alpha_family(ALPHA_LOW, beta=0.3, lam=0.3)),
        Panel("3.2b", "c_eff", _alpha_family(ALPHA_HIGH, beta=0.3, lam=0.3), note="negative damping"),
        Panel("3.2c", "c_eff", _one(_spec(alpha=A_COS_HALF, beta=B_SIN, lam=L_SIN)), note="negative damping"),
        Panel("3.2d", "c_eff", _alpha_family((1.3, 2.3), beta=B_SIN, lam=L_COS)),
    ]
    # effective stiffness, k = 1
    P += [
        Panel("3.3a", "k_eff", tuple(Curve(f"lambda={l}", _spec(lam=l)) for l in (0.3, 0.6, 0.9))),
        Panel("3.3b", "k_eff", _one(_spec(lam=L_COS))),
    ]
    # damping ratio, m = c = k = 1
    P += [
        Panel("4.1a", "zeta_eff", _alpha_family(ALPHA_LOW, beta=0.3, lam=0.3)),
        Panel("4.1b", "zeta_eff", _alpha_family(ALPHA_HIGH, beta=1.9, lam=0.3), note="negative damping ratio"),
        Panel("4.1c", "zeta_eff", _one(_spec(alpha=A_COS_TENTH, beta=B_SIN, lam=L_COS)), note="negative damping ratio"),
        Panel("4.1d", "zeta_eff", _one(_spec(alpha=A_COS_TENTH, beta=B_SIN, lam=L_EXP)), note="negative damping ratio"),
    ]
    # natural frequency and frequency ratio, m = k = 1, c = 0.2
    light = dict(c=0.2)
    P += [
        Panel("4.2a", "omega_effn", _alpha_family(ALPHA_LOW, beta=0.3, lam=0.3, **light)),
        Panel("4.2b", "omega_effn", _alpha_family(ALPHA_LOW, beta=1.3, lam=0.3, **light)),
        Panel("4.2c", "omega_effn", _alpha_family(ALPHA_HIGH, beta=0.3, lam=0.3, **light)),
        Panel("4.2d", "omega_effn", _alpha_family(ALPHA_HIGH, beta=1.3, lam=0.3, **light)),
        Panel("4.2e", "omega_effn", _one(_spec(alpha=A_COS_TENTH, beta=B_SIN, lam=L_COS, **light))),
        Panel("4.2f", "omega_effn", _one(_spec(alpha=A_COS_TENTH, beta=B_SIN, lam=L_EXP, **light))),
        Panel("4.3a", "gamma_eff", _alpha_family(ALPHA_LOW, beta=0.3, lam=0.3, **light)),
        Panel("4.3b", "gamma_eff", _alpha_family(ALPHA_HIGH, beta=0.3, lam=0.3, **light)),
        Panel("4.3c", "gamma_eff", _one(_spec(alpha=A_COS_TENTH, beta=B_SIN, lam=L_COS, **light))),
    ]
    # responses, m = k = 1
    var_light = _spec(alpha=A_COS_TENTH, beta=B_SIN, lam=L_COS, c=0.2)
    var_heavy = _spec(alpha=A_COS_TENTH, beta=B_SIN, lam=L_COS, c=1.2)
    P += [
        Panel("5.1a", "x", _alpha_family(ALPHA_LOW, FIXED_OMEGA, beta=0.3, lam=0.3, **light), note="decaying"),
        Panel("5.1b", "x", _one(_spec(alpha=2.4, beta=1.9, lam=0.3, **light), FIXED_OMEGA, "alpha=2.4"), note="self-vibration"),
        Panel("5.1c", "x", _slices(var_light)),
        Panel("5.1d", "x", _slices(var_heavy)),
        Panel("5.2a", "h", _alpha_family(ALPHA_LOW, FIXED_OMEGA, beta=0.3, lam=0.3, **light)),
        Panel("5.2b", "h", _one(_spec(alpha=2.5, beta=1.5, lam=0.3, **light), FIXED_OMEGA, "alpha=2.5"), note="self-vibration"),
        Panel("5.2c", "h", _slices(var_light)),
        Panel("5.2d", "h", _slices(var_heavy)),
    ]
    # transfer function, m = k = 1, omega in (0, 2]
    tf_light = _spec(alpha=A_COS, beta=B_SIN, lam=L_COS, c=0.2)
    tf_heavy = _spec(alpha=A_COS, beta=B_SIN, lam=L_COS, c=1.2)
    for fig, q in (("5.3", "amplitude"), ("5.4", "phase")):
        P += [
            Panel(f"{fig}a", q, _alpha_family(ALPHA_LOW, beta=1.3, lam=0.3, **light), x_max=2.0),
            Panel(f"{fig}b", q, _alpha_family(ALPHA_HIGH, beta=1.3, lam=0.3, **light), x_max=2.0),
            Panel(f"{fig}c", q, _one(tf_light), x_max=2.0),
            Panel(f"{fig}d", q, _one(tf_heavy), x_max=2.0),
        ]
    # generalised Rayleigh damping, m = k = 1, c = 0
    P += [
        Panel("6.1a", "a", _one(_spec(alpha=A_RAYLEIGH, c=0.0))),
        Panel("6.1b", "b", _one(_spec(lam=L_COS, c=0.0))),
        Panel("6.2a", "c_gray", _one(_spec(alpha=A_RAYLEIGH, lam=L_COS, c=0.0))),
        Panel("6.2b", "c_gray", _one(_spec(alpha=A_DECAY, lam=L_COS, c=0.0)),
              note="alpha leaves (1, 3) for omega > ln 2.99"),
    ]
    return {p.id: p for p in P}


CATALOG = _build()


def get_panel(figure_id: str) -> Panel:
    key = figure_id.strip().lower().replace("(", "").replace(")", "")
    try:
        return CATALOG[key]
    except KeyError:
        raise UnknownFigureId(
            f"unknown figure id {figure_id!r}; known: {', '.join(CATALOG)}"
        ) from None


def figure_specs() -> list:
    """Distinct specs from the catalog that use at least one variable order."""
    seen, out = set(), []
    for panel in CATALOG.values():
        for curve in panel.curves:
            s = curve.spec
            if all(p.is_constant for p in (s.alpha, s.beta, s.lam)):
                continue
            if s not in seen:
                seen.add(s)
                out.append(s)
    return out


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def evaluate_point(quantity: str, spec: VibratorSpec, omega: float):
    """One frequency-domain quantity at ``omega``.

    Returns ``(value, status)``; value is None when undefined.
    """
    try:
        if quantity == "m_eff":
            return float(effective.effective_mass(spec, omega)), "OK"
        if quantity == "c_eff":
            return float(effective.effective_damping(spec, omega)), "OK"
        if quantity == "k_eff":
            return float(effective.effective_stiffness(spec, omega)), "OK"
        if quantity in ("zeta_eff", "omega_effn", "gamma_eff"):
            rp = restricted.restricted_params(spec, omega)
            value = getattr(rp, quantity)
            status = "OK" if value is not None else rp.status.value
            return value, status
        if quantity in ("amplitude", "phase"):
            fr = response.transfer_function(spec, omega)
            return getattr(fr, quantity), "OK"
        if quantity in ("a", "b", "c_gray"):
            return getattr(rayleigh.rayleigh_coefficients(spec, omega), quantity), "OK"
    except RestrictionError as exc:
        return None, exc.status
    except FracVibError as exc:
        return None, type(exc).__name__
    raise ValueError(f"unknown quantity {quantity!r}")


def panel_rows(panel: Panel):
    """Rows ``(curve, x, value, status)`` in curve-then-grid order."""
    rows = []
    grid = panel.x_grid()
    for curve in panel.curves:
        if panel.x_name == "t":
            ic = response.InitialConditions(panel.x0, panel.v0)
            try:
                if panel.quantity == "x":
                    ts = response.free_response(curve.spec, curve.omega, ic, grid)
                else:
                    ts = response.impulse_response(curve.spec, curve.omega, grid)
                rows += [(curve.label, float(t), float(v), "OK")
                         for t, v in zip(ts.t, ts.values)]
            except RestrictionError as exc:
                rows += [(curve.label, float(t), None, exc.status) for t in grid]
            except FracVibError as exc:
                rows += [(curve.label, float(t), None, type(exc).__name__) for t in grid]
        else:
            for w in grid:
                value, status = evaluate_point(panel.quantity, curve.spec, float(w))
                rows.append((curve.label, float(w), value, status))
    return rows
