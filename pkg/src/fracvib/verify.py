"""Independent numerical checks of the equivalence and its consequences.

Each ``check_*`` function returns a :class:`VerificationReport` whose
``passed`` flag is true exactly when the worst recorded error is within the
threshold. The random spec generator is seeded, so reports are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import effective, response
from .classforms import class_result
from .errors import RestrictionError
from .figures import figure_specs
from .model import VibratorClass, VibratorSpec, canonicalize, validate
from .rayleigh import rayleigh_coefficients
from .restricted import Status, classical_params, restricted_params

DEFAULT_SEED = 42
ORDER_MARGIN = 0.05
ABS_FALLBACK = 1e-14
SMALL_D = 1e-10


@dataclass(frozen=True)
class PointRecord:
    point: Optional[float]
    error: float
    threshold: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.error <= self.threshold)


@dataclass
class VerificationReport:
    name: str
    records: list = field(default_factory=list)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return bool(self.records) and all(r.passed for r in self.records)

    @property
    def worst(self) -> PointRecord:
        return max(self.records, key=lambda r: (not r.passed, r.error / (r.threshold or 1.0)))

    @property
    def worst_error(self) -> float:
        return max(r.error for r in self.records)

    def extend(self, other: "VerificationReport"):
        self.records.extend(other.records)
        self.skipped += other.skipped
        return self

    def summary(self) -> dict:
        w = self.worst
        return {
            "check": self.name,
            "passed": self.passed,
            "points": len(self.records),
            "skipped": self.skipped,
            "worst_error": self.worst_error,
            "worst_point": w.point,
            "worst_threshold": w.threshold,
            "worst_detail": w.detail,
        }


# ---------------------------------------------------------------------------
# Random specs
# ---------------------------------------------------------------------------

def _log_uniform(rng, lo, hi):
    return float(math.exp(rng.uniform(math.log(lo), math.log(hi))))


def random_spec(rng, vibrator_class=VibratorClass.VI, margin=ORDER_MARGIN) -> VibratorSpec:
    """m, c, k log-uniform on [0.1, 10]; constant orders uniform in shrunk ranges.

    Coefficients and orders fixed by the class are left at their fixed values;
    the random draws are still consumed so the stream does not depend on class.
    """
    cls = VibratorClass(vibrator_class)
    m, c, k = (_log_uniform(rng, 0.1, 10.0) for _ in range(3))
    alpha = float(rng.uniform(1.0 + margin, 3.0 - margin))
    beta = float(rng.uniform(0.0 + margin, 2.0 - margin))
    lam = float(rng.uniform(0.0 + margin, 1.0 - margin))
    return VibratorSpec(
        cls, m=m, k=k,
        c=0.0 if cls.damping_free else c,
        alpha=2.0 if cls.integer_inertia else alpha,
        beta=1.0 if cls.damping_free else beta,
        lam=0.0 if cls.integer_restoration else lam,
    )


def random_specs(n, seed=DEFAULT_SEED, vibrator_class=VibratorClass.VI):
    rng = np.random.default_rng(seed)
    return [random_spec(rng, vibrator_class) for _ in range(n)]


def log_grid(lo=1e-2, hi=1e2, n=64):
    return np.logspace(math.log10(lo), math.log10(hi), n)


def figure_grid(hi=10.0, n=512):
    """n uniform points on (0, hi], excluding zero."""
    return np.linspace(hi / n, hi, n)


def _valid_points(spec, grid):
    grid = np.asarray(grid, dtype=float)
    bad = {v.omega for v in validate(spec, grid).violations}
    keep = np.array([w not in bad for w in grid], dtype=bool)
    return grid[keep], int((~keep).sum())


def _rel(a, b):
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def check_spectral_identity(spec, omega_grid, rel_tol=1e-10) -> VerificationReport:
    """k_eff - m_eff w^2 + i w c_eff against m(iw)^a + c(iw)^b + k(iw)^l."""
    report = VerificationReport("spectral_identity")
    grid, report.skipped = _valid_points(spec, omega_grid)
    if grid.size == 0:
        return report
    m_eff = effective.effective_mass(spec, grid)
    c_eff = effective.effective_damping(spec, grid)
    k_eff = effective.effective_stiffness(spec, grid)
    lhs = k_eff - m_eff * grid**2 + 1j * grid * c_eff
    rhs = np.atleast_1d(effective.spectral_polynomial(spec, grid))
    for w, l, r in zip(grid, np.atleast_1d(lhs), rhs):
        diff = abs(l - r)
        if abs(r) < SMALL_D:
            report.records.append(PointRecord(float(w), diff, ABS_FALLBACK, "absolute"))
        else:
            report.records.append(PointRecord(float(w), diff / abs(r), rel_tol))
    return report


def check_transfer_equivalence(spec, omega_grid, rel_tol=1e-10) -> VerificationReport:
    """H from the restricted parameters against 1/D wherever m_eff > 0."""
    report = VerificationReport("transfer_equivalence")
    grid, report.skipped = _valid_points(spec, omega_grid)
    for w in grid:
        w = float(w)
        try:
            H = response.transfer_function(spec, w).H
        except RestrictionError:
            report.skipped += 1
            continue
        D = effective.spectral_polynomial(spec, w)
        ref = 1.0 / D
        report.records.append(PointRecord(w, abs(H - ref) / abs(ref), rel_tol))
    return report


def _residual(series_at, m_eff, c_eff, k_eff, t, step):
    x = series_at(t)
    xp = series_at(t + step)
    xm = series_at(t - step)
    d1 = (xp - xm) / (2.0 * step)
    d2 = (xp - 2.0 * x + xm) / step**2
    r = m_eff * d2 + c_eff * d1 + k_eff * x
    scale = max(np.max(np.abs(m_eff * d2)), np.max(np.abs(k_eff * x)), np.finfo(float).tiny)
    return np.abs(r) / scale


def check_ode_residual(spec, omega, ic=None, t_grid=None, step=1e-4,
                       kind="free", threshold=1e-4) -> VerificationReport:
    """Central-difference residual of a closed-form response in m_eff x'' + c_eff x' + k_eff x = 0.

    The residual is normalised by the largest of |m_eff x''| and |k_eff x|
    over the whole grid. ``t_grid`` must start at or after ``step``.
    """
    if ic is None:
        ic = response.InitialConditions(1.0, 1.0)
    if t_grid is None:
        t_grid = np.linspace(0.1, 20.0, 400)
    t = np.asarray(t_grid, dtype=float)
    if t[0] < step:
        raise ValueError("t_grid must start at or after the difference step")
    p = effective.effective_params(spec, omega)
    if kind == "free":
        series_at = lambda s: response.free_response(spec, omega, ic, s).values
    elif kind == "impulse":
        series_at = lambda s: response.impulse_response(spec, omega, s).values
    else:
        raise ValueError(f"kind must be 'free' or 'impulse', got {kind!r}")
    err = _residual(series_at, p.m_eff, p.c_eff, p.k_eff, t, step)
    report = VerificationReport(f"ode_residual_{kind}")
    report.records = [PointRecord(float(s), float(e), threshold, f"omega={omega!r}")
                      for s, e in zip(t, err)]
    return report


def _series_dev(a, b):
    scale = np.max(np.abs(b))
    return 0.0 if scale == 0.0 else float(np.max(np.abs(a - b)) / scale)


def check_class_reduction(spec, omega_grid, rel_tol=1e-12, t_grid=None,
                          x0=1.0, v0=1.0) -> VerificationReport:
    """Class-specific closed forms against the canonical class-VI pipeline.

    Scalars are compared relative to the larger magnitude; time series
    relative to the peak magnitude of the pipeline's series.
    """
    if spec.vibrator_class is VibratorClass.VI:
        raise ValueError("class reduction applies to classes I-V")
    if t_grid is None:
        t_grid = np.linspace(0.0, 20.0, 201)
    canon = canonicalize(spec)
    ic = response.InitialConditions(x0, v0)
    report = VerificationReport(f"class_reduction_{spec.vibrator_class.value}")
    grid, report.skipped = _valid_points(spec, omega_grid)
    for w in grid:
        w = float(w)
        ref = class_result(spec, w, x0, v0, t_grid)
        p = effective.effective_params(canon, w)
        devs = {
            "m_eff": _rel(p.m_eff, ref.m_eff),
            "c_eff": _rel(p.c_eff, ref.c_eff),
            "k_eff": _rel(p.k_eff, ref.k_eff),
        }
        rp = restricted_params(canon, w)
        if (rp.status is not Status.MASS_NON_POSITIVE) != ref.mass_positive:
            devs["status"] = math.inf
        elif ref.mass_positive:
            devs["zeta"] = _rel(rp.zeta_eff, ref.zeta)
            devs["omega_n"] = _rel(rp.omega_effn, ref.omega_n)
            devs["gamma"] = _rel(rp.gamma_eff, ref.gamma)
            H = response.transfer_function(canon, w).H
            devs["H"] = abs(H - ref.H) / max(abs(H), abs(ref.H))
            if (rp.status is Status.OK) != (ref.omega_d is not None):
                devs["status"] = math.inf
            elif ref.omega_d is not None:
                devs["omega_d"] = _rel(rp.omega_effd, ref.omega_d)
                x = response.free_response(canon, w, ic, t_grid).values
                h = response.impulse_response(canon, w, t_grid).values
                devs["x"] = _series_dev(x, ref.x)
                devs["h"] = _series_dev(h, ref.h)
        worst = max(devs, key=devs.get)
        report.records.append(PointRecord(w, devs[worst], rel_tol, worst))
    return report


def check_classical_reduction(m, c, k, omega_grid, rel_tol=1e-12) -> VerificationReport:
    """alpha=2, beta=1, lambda=0 must give back the textbook SDOF quantities."""
    spec = VibratorSpec(VibratorClass.VI, m=m, k=k, c=c)
    report = VerificationReport("classical_reduction")
    for w in np.asarray(omega_grid, dtype=float):
        w = float(w)
        p = effective.effective_params(spec, w)
        cp = classical_params(m, c, k, w)
        rp = restricted_params(spec, w)
        devs = {
            "m": _rel(p.m_eff, m),
            "c": _rel(p.c_eff, c),
            "k": _rel(p.k_eff, k),
            "zeta": _rel(rp.zeta_eff, cp.zeta),
            "omega_n": _rel(rp.omega_effn, cp.omega_n),
            "gamma": _rel(rp.gamma_eff, cp.gamma),
        }
        if cp.omega_d is not None:
            devs["omega_d"] = _rel(rp.omega_effd, cp.omega_d)
        H = response.transfer_function(spec, w).H
        ref = 1.0 / complex(k - m * w**2, c * w)
        devs["H"] = abs(H - ref) / abs(ref)
        worst = max(devs, key=devs.get)
        report.records.append(PointRecord(w, devs[worst], rel_tol, worst))
    return report


def _probe(report, point, ok, detail):
    report.records.append(PointRecord(point, 0.0 if ok else 1.0, 0.0, detail))


def check_asymptotics(grid=None, specs=None) -> VerificationReport:
    """Threshold probes for the large/small-frequency limits.

    ``specs`` (default: 200 seeded random specs) are also used for the
    non-negativity of k_eff over ``grid``.
    """
    report = VerificationReport("asymptotics")
    S = lambda **kw: VibratorSpec(VibratorClass.VI, **kw)

    v = effective.effective_mass(S(m=1, c=1, k=1, alpha=1.5), 1e6)
    _probe(report, 1e6, abs(v) < 1e-2, f"mass->0 (alpha=1.5): |m_eff|={abs(v):.3e} < 1e-2")
    # m_eff ~ 0.707 w^0.5 here, so 1e6 reaches ~7e2
    v = effective.effective_mass(S(m=1, c=1, k=1, alpha=2.5), 1e6)
    _probe(report, 1e6, v > 1e2, f"mass->inf (alpha=2.5): m_eff={v:.3e} > 1e2")

    v = effective.effective_mass(S(m=1, c=1, k=1, alpha=2.5, beta=0.9), 1e-4)
    _probe(report, 1e-4, v < -100, f"negative mass: m_eff={v:.3e} < -100")

    # c_eff ~ 0.707 w^0.5 here as well
    v = effective.effective_damping(S(m=1, c=1, k=1, alpha=1.5, beta=0.5), 1e6)
    _probe(report, 1e6, v > 1e2, f"damping->+inf: c_eff={v:.3e} > 1e2")
    v = effective.effective_damping(S(m=1, c=1, k=1, alpha=2.5, beta=0.5), 1e6)
    _probe(report, 1e6, v < -1e6, f"damping->-inf: c_eff={v:.3e} < -1e6")

    probe = S(m=1, c=1, k=1, alpha=1.5, beta=0.5, lam=0.3)
    for w, approx in (
        (1e4, lambda w: w ** 0.5 * math.sin(0.75 * math.pi)),
        (1e-4, lambda w: w ** -0.5 * math.sin(0.25 * math.pi)
         + w ** -0.7 * math.sin(0.15 * math.pi)),
    ):
        v = effective.effective_damping(probe, w)
        err = abs(v - approx(w)) / abs(v)
        _probe(report, w, err < 1e-2, f"dominant-term c_eff: rel err {err:.3e} < 1e-2")

    if grid is None:
        grid = log_grid()
    if specs is None:
        specs = random_specs(200)
    worst = math.inf
    for spec in specs:
        worst = min(worst, float(np.min(effective.effective_stiffness(spec, grid))))
    _probe(report, None, worst >= 0.0, f"k_eff >= 0: min={worst:.3e}")
    return report


def check_rayleigh_identity(spec, omega_grid, rel_tol=1e-12) -> VerificationReport:
    """c_gray against effective damping with c = 0, and a m + b k exactness."""
    report = VerificationReport("rayleigh_identity")
    grid, report.skipped = _valid_points(spec, omega_grid)
    for w in grid:
        w = float(w)
        d = rayleigh_coefficients(spec, w)
        ref = effective.effective_damping(spec, w)
        err = _rel(d.c_gray, ref)
        if d.c_gray != d.a * spec.m + d.b * spec.k:
            err = math.inf
        report.records.append(PointRecord(w, err, rel_tol))
    return report


# ---------------------------------------------------------------------------
# Drivers
# ---------------------------------------------------------------------------

def ode_probe_cases(n=20, seed=DEFAULT_SEED):
    """n seeded (spec, omega) pairs whose restrictions hold and responses stay finite."""
    rng = np.random.default_rng(seed)
    cases = []
    while len(cases) < n:
        spec = random_spec(rng)
        w = _log_uniform(rng, 0.1, 10.0)
        rp = restricted_params(spec, w)
        if rp.status is not Status.OK:
            continue
        # growth over t <= 20 must stay representable
        if -rp.zeta_eff * rp.omega_effn * 20.0 > 600.0:
            continue
        cases.append((spec, w))
    return cases


def run_all(seed=DEFAULT_SEED) -> list:
    """Every check family with default grids; used by ``fracvib verify``."""
    grid = log_grid()
    fig_grid = figure_grid()
    specs = random_specs(200, seed)
    figs = figure_specs()

    spectral = VerificationReport("spectral_identity")
    transfer = VerificationReport("transfer_equivalence")
    for spec in specs:
        spectral.extend(check_spectral_identity(spec, grid))
        transfer.extend(check_transfer_equivalence(spec, grid))
    for spec in figs:
        spectral.extend(check_spectral_identity(spec, fig_grid))
        transfer.extend(check_transfer_equivalence(spec, fig_grid))

    rng = np.random.default_rng(seed)
    classical = VerificationReport("classical_reduction")
    for _ in range(10):
        m, c, k = (_log_uniform(rng, 0.1, 10.0) for _ in range(3))
        classical.extend(check_classical_reduction(m, c, k, grid))

    ode = VerificationReport("ode_residual")
    for spec, w in ode_probe_cases(20, seed):
        ode.extend(check_ode_residual(spec, w, kind="free"))
        ode.extend(check_ode_residual(spec, w, kind="impulse"))

    reports = [spectral, transfer, classical, ode]
    for cls in list(VibratorClass)[:5]:
        rep = VerificationReport(f"class_reduction_{cls.value}")
        for spec in random_specs(20, seed, cls):
            rep.extend(check_class_reduction(spec, grid))
        reports.append(rep)

    reports.append(check_asymptotics(grid, specs))

    rayleigh = VerificationReport("rayleigh_identity")
    for spec in specs:
        rayleigh.extend(check_rayleigh_identity(spec.with_(c=0.0), grid))
    reports.append(rayleigh)
    return reports
