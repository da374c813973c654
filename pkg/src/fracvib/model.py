"""Vibrator classes, order profiles, and their validation.

The six classes share one motion equation,

    m x^(alpha) + c x^(beta) + k x^(lambda) = f(t),

and differ only in which coefficients and orders are pinned:

=====  =====================================
class  fixed
=====  =====================================
I      c = 0, lambda = 0
II     alpha = 2, lambda = 0
III    lambda = 0
IV     c = 0
V      alpha = 2, c = 0
VI     nothing
=====  =====================================
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from . import expr as _expr
from .errors import NonFiniteResult, OrderOutOfRange

# (low, high, low_inclusive)
ALPHA_BOUNDS = (1.0, 3.0, False)
BETA_BOUNDS = (0.0, 2.0, False)
LAMBDA_BOUNDS = (0.0, 1.0, True)


def _bounds_text(bounds):
    lo, hi, lo_incl = bounds
    return f"{'[' if lo_incl else '('}{lo:g}, {hi:g})"


def _in_bounds(values, bounds):
    lo, hi, lo_incl = bounds
    above = values >= lo if lo_incl else values > lo
    return above & (values < hi)


class OrderProfile:
    """A fractional order as a function of angular frequency.

    Three kinds are supported: a constant, a parsed DSL expression, and a
    table of ``(omega, value)`` pairs interpolated linearly (held constant
    beyond the end points, as ``numpy.interp`` does).
    """

    __slots__ = ("kind", "_value", "_expr", "_table")

    def __init__(self, kind, value=None, expression=None, table=None):
        self.kind = kind
        self._value = value
        self._expr = expression
        self._table = table

    @classmethod
    def constant(cls, value: float) -> "OrderProfile":
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"constant order must be finite, got {value}")
        return cls("constant", value=value)

    @classmethod
    def expression(cls, source) -> "OrderProfile":
        if not isinstance(source, _expr.ProfileExpr):
            source = _expr.parse(source)
        return cls("expression", expression=source)

    @classmethod
    def table(cls, pairs) -> "OrderProfile":
        arr = np.asarray(pairs, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 2:
            raise ValueError("table profile needs at least two (omega, value) pairs")
        if not np.all(np.diff(arr[:, 0]) > 0):
            raise ValueError("table profile omegas must be strictly increasing")
        if not np.all(np.isfinite(arr)):
            raise ValueError("table profile entries must be finite")
        arr.setflags(write=False)
        return cls("table", table=arr)

    @property
    def is_constant(self) -> bool:
        return self.kind == "constant"

    @property
    def value(self) -> float:
        """The constant value; only valid for constant profiles."""
        if self.kind != "constant":
            raise AttributeError("only constant profiles have a single value")
        return self._value

    def __call__(self, omega):
        if self.kind == "constant":
            w = np.asarray(omega, dtype=float)
            return self._value if w.ndim == 0 else np.full_like(w, self._value)
        if self.kind == "expression":
            return self._expr(omega)
        out = np.interp(omega, self._table[:, 0], self._table[:, 1])
        return float(out) if np.ndim(out) == 0 else out

    def to_config(self):
        """JSON-friendly form accepted back by :func:`as_profile`."""
        if self.kind == "constant":
            return self._value
        if self.kind == "expression":
            return self._expr.source or _expr.to_string(self._expr)
        return {"table": self._table.tolist()}

    def __eq__(self, other):
        if not isinstance(other, OrderProfile) or other.kind != self.kind:
            return NotImplemented
        if self.kind == "constant":
            return self._value == other._value
        if self.kind == "expression":
            return self._expr == other._expr
        return np.array_equal(self._table, other._table)

    def __hash__(self):
        if self.kind == "table":
            return hash((self.kind, self._table.tobytes()))
        return hash((self.kind, self._value, self._expr))

    def __repr__(self):
        if self.kind == "constant":
            return f"OrderProfile.constant({self._value!r})"
        if self.kind == "expression":
            return f"OrderProfile.expression({_expr.to_string(self._expr)!r})"
        return f"OrderProfile.table({self._table.tolist()!r})"


def as_profile(obj) -> OrderProfile:
    """Coerce a number, DSL string, ``{"table": ...}`` dict, or pair list."""
    if isinstance(obj, OrderProfile):
        return obj
    if isinstance(obj, _expr.ProfileExpr):
        return OrderProfile.expression(obj)
    if isinstance(obj, bool):
        raise TypeError("boolean is not an order profile")
    if isinstance(obj, (int, float, np.floating, np.integer)):
        return OrderProfile.constant(obj)
    if isinstance(obj, str):
        return OrderProfile.expression(obj)
    if isinstance(obj, dict) and "table" in obj:
        return OrderProfile.table(obj["table"])
    if isinstance(obj, Sequence):
        return OrderProfile.table(obj)
    raise TypeError(f"cannot interpret {obj!r} as an order profile")


class VibratorClass(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"

    @property
    def damping_free(self) -> bool:
        return self in (VibratorClass.I, VibratorClass.IV, VibratorClass.V)

    @property
    def integer_inertia(self) -> bool:
        return self in (VibratorClass.II, VibratorClass.V)

    @property
    def integer_restoration(self) -> bool:
        return self in (VibratorClass.I, VibratorClass.II, VibratorClass.III)


def _is_const(profile, value):
    return profile.is_constant and profile.value == value


@dataclass(frozen=True)
class VibratorSpec:
    """Primary coefficients and orders of one vibrator.

    Omitted orders default to the integer-order values (alpha=2, beta=1,
    lambda=0), so ``VibratorSpec("I", m=1, k=1, alpha=1.5)`` is a complete
    class-I spec. Arguments that contradict the class (e.g. ``c=0.3`` for
    class I) raise ``ValueError``.
    """

    vibrator_class: VibratorClass
    m: float
    k: float
    c: float = 0.0
    alpha: OrderProfile = field(default=2.0)
    beta: OrderProfile = field(default=1.0)
    lam: OrderProfile = field(default=0.0)

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "vibrator_class", VibratorClass(self.vibrator_class))
        for name in ("m", "k", "c"):
            set_(self, name, float(getattr(self, name)))
        for name in ("alpha", "beta", "lam"):
            set_(self, name, as_profile(getattr(self, name)))

        if not (math.isfinite(self.m) and self.m > 0):
            raise ValueError(f"m must be finite and > 0, got {self.m}")
        if not (math.isfinite(self.k) and self.k > 0):
            raise ValueError(f"k must be finite and > 0, got {self.k}")
        if not (math.isfinite(self.c) and self.c >= 0):
            raise ValueError(f"c must be finite and >= 0, got {self.c}")

        cls = self.vibrator_class
        if cls.damping_free and self.c != 0.0:
            raise ValueError(f"class {cls.value} has no damping term (c must be 0)")
        if cls.integer_inertia and not _is_const(self.alpha, 2.0):
            raise ValueError(f"class {cls.value} fixes alpha = 2")
        if cls.integer_restoration and not _is_const(self.lam, 0.0):
            raise ValueError(f"class {cls.value} fixes lambda = 0")

    def orders_at(self, omega, check=True):
        """Return ``(alpha, beta, lam)`` evaluated at ``omega``.

        With ``check`` set, raises OrderOutOfRange on the first violation.
        """
        a, b, l = self.alpha(omega), self.beta(omega), self.lam(omega)
        if check and all(isinstance(v, float) for v in (a, b, l)):
            for name, v, bounds in (("alpha", a, ALPHA_BOUNDS),
                                    ("beta", b, BETA_BOUNDS),
                                    ("lambda", l, LAMBDA_BOUNDS)):
                if not _in_bounds(v, bounds):
                    raise OrderOutOfRange(name, v, float(omega), _bounds_text(bounds))
        elif check:
            for name, vals, bounds in (
                ("alpha", a, ALPHA_BOUNDS),
                ("beta", b, BETA_BOUNDS),
                ("lambda", l, LAMBDA_BOUNDS),
            ):
                vals = np.asarray(vals)
                bad = ~_in_bounds(vals, bounds)
                if np.any(bad):
                    idx = np.flatnonzero(bad.ravel())[0]
                    w = np.broadcast_to(np.asarray(omega, dtype=float), vals.shape)
                    raise OrderOutOfRange(
                        name, float(vals.ravel()[idx]), float(w.ravel()[idx]),
                        _bounds_text(bounds),
                    )
        return a, b, l

    def with_(self, **changes) -> "VibratorSpec":
        return replace(self, **changes)

    def to_config(self) -> dict:
        return {
            "class": self.vibrator_class.value,
            "m": self.m,
            "c": self.c,
            "k": self.k,
            "alpha": self.alpha.to_config(),
            "beta": self.beta.to_config(),
            "lambda": self.lam.to_config(),
        }


def classical(m, c, k) -> VibratorSpec:
    """The integer-order vibrator m x'' + c x' + k x as a class-VI spec."""
    return VibratorSpec(VibratorClass.VI, m=m, k=k, c=c)


@dataclass(frozen=True)
class Violation:
    omega: float
    order: str
    value: float
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(spec: VibratorSpec, omega_grid) -> ValidationReport:
    """List every order-range violation of ``spec`` on ``omega_grid``."""
    grid = np.atleast_1d(np.asarray(omega_grid, dtype=float))
    if grid.size == 0 or np.any(grid <= 0):
        raise ValueError("omega grid must be non-empty with all entries > 0")

    violations = []
    for name, profile, bounds in (
        ("alpha", spec.alpha, ALPHA_BOUNDS),
        ("beta", spec.beta, BETA_BOUNDS),
        ("lambda", spec.lam, LAMBDA_BOUNDS),
    ):
        if profile.is_constant:
            values = np.full_like(grid, profile.value)
        else:
            try:
                values = np.asarray(profile(grid), dtype=float)
            except NonFiniteResult:
                values = np.array([_safe_eval(profile, w) for w in grid])
        ok = _in_bounds(values, bounds)
        msg = f"{name} out of {_bounds_text(bounds)}"
        for w, v, good in zip(grid, values, ok):
            if not good:
                violations.append(Violation(float(w), name, float(v), msg))
    violations.sort(key=lambda v: v.omega)
    return ValidationReport(tuple(violations))


def _safe_eval(profile, w):
    try:
        return float(profile(w))
    except NonFiniteResult:
        return float("nan")


def canonicalize(spec: VibratorSpec) -> VibratorSpec:
    """Rewrite any class as the equivalent class-VI spec.

    Classes without a damping term get the inert beta = 1.
    """
    if spec.vibrator_class is VibratorClass.VI:
        return spec
    beta = OrderProfile.constant(1.0) if spec.vibrator_class.damping_free else spec.beta
    return replace(spec, vibrator_class=VibratorClass.VI, beta=beta)
