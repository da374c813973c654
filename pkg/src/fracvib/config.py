"""JSON sweep configuration.

Example::

    {
      "class": "VI",
      "m": 1, "c": 0.2, "k": 1,
      "alpha": "1.10 + 1.89*abs(cos(0.1*w))",
      "beta": 1.3,
      "lambda": {"table": [[0.1, 0.2], [10, 0.6]]},
      "omega": {"min": 0.001, "max": 10, "count": 512, "spacing": "linear"},
      "response": {"omega": 1.1, "t_max": 50, "count": 2001,
                   "x0": 1, "v0": 1, "kind": "free"}
    }

Every key except ``m`` and ``k`` is optional. Orders are numbers
(constant), DSL strings, or ``{"table": [[omega, value], ...]}``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import ConfigError, FracVibError
from .model import VibratorSpec
from .response import InitialConditions

DEFAULT_OMEGA = {"min": 1e-3, "max": 10.0, "count": 512, "spacing": "linear"}
DEFAULT_RESPONSE = {"omega": 1.1, "t_max": 50.0, "count": 2001,
                    "x0": 1.0, "v0": 1.0, "kind": "free"}

_TOP_KEYS = {"class", "m", "c", "k", "alpha", "beta", "lambda", "omega", "response", "out"}


@dataclass(frozen=True)
class SweepConfig:
    spec: VibratorSpec
    omega_min: float
    omega_max: float
    omega_count: int
    spacing: str
    response_omega: float
    t_max: float
    t_count: int
    ic: InitialConditions
    kind: str
    out: Optional[str] = None

    def omega_grid(self):
        if self.spacing == "log":
            return np.logspace(math.log10(self.omega_min), math.log10(self.omega_max),
                               self.omega_count)
        return np.linspace(self.omega_min, self.omega_max, self.omega_count)

    def t_grid(self):
        return np.linspace(0.0, self.t_max, self.t_count)


def _number(section, key, value, integer=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{section}.{key} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise ConfigError(f"{section}.{key} must be finite")
    if integer:
        if int(value) != value:
            raise ConfigError(f"{section}.{key} must be an integer")
        return int(value)
    return float(value)


def parse_config(doc: dict) -> SweepConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key in ("m", "k"):
        if key not in doc:
            raise ConfigError(f"config needs {key!r}")

    kwargs = {"m": doc["m"], "k": doc["k"], "c": doc.get("c", 0.0)}
    for key, field in (("alpha", "alpha"), ("beta", "beta"), ("lambda", "lam")):
        if key in doc:
            kwargs[field] = doc[key]
    for key in ("m", "k", "c"):
        _number("config", key, kwargs[key])
    try:
        spec = VibratorSpec(doc.get("class", "VI"), **kwargs)
    except (FracVibError, ValueError, TypeError) as exc:
        raise ConfigError(f"invalid vibrator: {exc}") from exc

    om = {**DEFAULT_OMEGA, **doc.get("omega", {})}
    w_min = _number("omega", "min", om["min"])
    w_max = _number("omega", "max", om["max"])
    count = _number("omega", "count", om["count"], integer=True)
    if not w_min > 0:
        raise ConfigError(f"omega.min must be > 0, got {w_min}")
    if not w_max > w_min:
        raise ConfigError("omega.max must exceed omega.min")
    if count < 2:
        raise ConfigError("omega.count must be >= 2")
    if om["spacing"] not in ("linear", "log"):
        raise ConfigError("omega.spacing must be 'linear' or 'log'")

    rs = {**DEFAULT_RESPONSE, **doc.get("response", {})}
    r_omega = _number("response", "omega", rs["omega"])
    t_max = _number("response", "t_max", rs["t_max"])
    t_count = _number("response", "count", rs["count"], integer=True)
    if not r_omega > 0:
        raise ConfigError("response.omega must be > 0")
    if not t_max > 0:
        raise ConfigError("response.t_max must be > 0")
    if t_count < 2:
        raise ConfigError("response.count must be >= 2")
    if rs["kind"] not in ("free", "impulse"):
        raise ConfigError("response.kind must be 'free' or 'impulse'")
    ic = InitialConditions(_number("response", "x0", rs["x0"]),
                           _number("response", "v0", rs["v0"]))

    return SweepConfig(spec, w_min, w_max, count, om["spacing"], r_omega,
                       t_max, t_count, ic, rs["kind"], doc.get("out"))


def load_config(path) -> SweepConfig:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return parse_config(doc)
