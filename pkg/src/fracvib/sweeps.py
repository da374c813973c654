"""Parameter sweeps producing tables, and deterministic CSV output.

Every table is ``(header, rows)``. Undefined values are ``None`` and are
written as empty CSV fields next to a ``status`` column; floats are written
with ``repr`` (shortest round-trip form).
"""

from __future__ import annotations

import csv
import io

from . import effective, rayleigh, restricted, response
from .errors import ConfigError, FracVibError, NonFiniteResult, RestrictionError
from .figures import get_panel, panel_rows


def _status(exc):
    return exc.status if isinstance(exc, RestrictionError) else type(exc).__name__


def _order_value(profile, w):
    try:
        return float(profile(w))
    except NonFiniteResult:
        return None


def effective_table(cfg):
    spec = cfg.spec
    header = ["omega", "alpha", "beta", "lambda", "m_eff", "c_eff", "k_eff", "status"]
    rows = []
    for w in cfg.omega_grid():
        w = float(w)
        orders = [_order_value(p, w) for p in (spec.alpha, spec.beta, spec.lam)]
        try:
            p = effective.effective_params(spec, w)
            rows.append([w, *orders, p.m_eff, p.c_eff, p.k_eff, "OK"])
        except FracVibError as exc:
            rows.append([w, *orders, None, None, None, _status(exc)])
    return header, rows


def restricted_table(cfg):
    header = ["omega", "zeta_eff", "omega_effn", "omega_effd", "gamma_eff", "status"]
    rows = []
    for w in cfg.omega_grid():
        w = float(w)
        try:
            rp = restricted.restricted_params(cfg.spec, w)
            rows.append([w, rp.zeta_eff, rp.omega_effn, rp.omega_effd, rp.gamma_eff,
                         rp.status.value])
        except FracVibError as exc:
            rows.append([w, None, None, None, None, _status(exc)])
    return header, rows


def response_table(cfg, kind=None):
    kind = kind or cfg.kind
    if kind not in ("free", "impulse"):
        raise ConfigError(f"response kind must be 'free' or 'impulse', got {kind!r}")
    t = cfg.t_grid()
    header = ["t", "x" if kind == "free" else "h", "status"]
    try:
        if kind == "free":
            ts = response.free_response(cfg.spec, cfg.response_omega, cfg.ic, t)
        else:
            ts = response.impulse_response(cfg.spec, cfg.response_omega, t)
    except FracVibError as exc:
        return header, [[float(s), None, _status(exc)] for s in t]
    return header, [[float(s), float(v), "OK"] for s, v in zip(ts.t, ts.values)]


def transfer_table(cfg):
    header = ["omega", "re_H", "im_H", "amplitude", "phase", "status"]
    rows = []
    for w in cfg.omega_grid():
        w = float(w)
        try:
            fr = response.transfer_function(cfg.spec, w)
            rows.append([w, fr.H.real, fr.H.imag, fr.amplitude, fr.phase, "OK"])
        except FracVibError as exc:
            rows.append([w, None, None, None, None, _status(exc)])
    return header, rows


def rayleigh_table(cfg):
    if cfg.spec.c != 0.0:
        raise ConfigError("rayleigh sweep needs c = 0")
    header = ["omega", "a", "b", "c_gray", "status"]
    rows = []
    for w in cfg.omega_grid():
        w = float(w)
        try:
            d = rayleigh.rayleigh_coefficients(cfg.spec, w)
            rows.append([w, d.a, d.b, d.c_gray, "OK"])
        except FracVibError as exc:
            rows.append([w, None, None, None, _status(exc)])
    return header, rows


def figure_table(figure_id):
    panel = get_panel(figure_id)
    header = ["curve", panel.x_name, panel.quantity, "status"]
    return header, [list(r) for r in panel_rows(panel)]


def format_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(header, rows, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    write_csv(header, rows, buf)
    return buf.getvalue()
