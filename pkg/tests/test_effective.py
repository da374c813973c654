import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import effective_from_spectral, spectral
from fracvib import effective
from fracvib.errors import NonPositiveFrequency, OrderOutOfRange
from fracvib.model import VibratorSpec, classical

S = lambda **kw: VibratorSpec("VI", **kw)


def test_classical_orders_return_primary_coefficients():
    spec = classical(2, 3, 5)
    for w in (1e-3, 0.7, 1.0, 42.0, 1e4):
        p = effective.effective_params(spec, w)
        assert (p.m_eff, p.c_eff, p.k_eff) == (2.0, 3.0, 5.0)


# fixtures below were checked against the complex-power oracle in oracles.py
@pytest.mark.parametrize("kw, w, expected", [
    (dict(m=1, c=1, k=1, alpha=1.5, beta=1.0, lam=0.5), 1.0, (0.70711, 2.41421, 0.70711)),
    (dict(m=1, c=1, k=1, alpha=1.3, beta=0.3), 1.0, (-0.43702, None, 1.0)),
    (dict(m=1, c=0.2, k=1, alpha=1.9, beta=1.0, lam=0.0), 1.0, (None, 0.35643, 1.0)),
])
def test_fixtures(kw, w, expected):
    p = effective.effective_params(S(**kw), w)
    ref = effective_from_spectral(kw["m"], kw["c"], kw["k"], kw.get("alpha", 2.0),
                                  kw.get("beta", 1.0), kw.get("lam", 0.0), w)
    for got, want, oracle in zip((p.m_eff, p.c_eff, p.k_eff), expected, ref):
        assert got == pytest.approx(oracle, rel=1e-12, abs=1e-14)
        if want is not None:
            assert got == pytest.approx(want, abs=1e-5)


def test_stiffness_fixture_and_small_frequency_limit():
    spec = S(m=1, c=0, k=1, lam=0.5)
    assert effective.effective_stiffness(spec, 1.0) == pytest.approx(math.cos(math.pi / 4), abs=1e-15)
    vals = [effective.effective_stiffness(spec, w) for w in (1e-2, 1e-6, 1e-12)]
    assert vals[0] > vals[1] > vals[2] and vals[2] < 1e-5


def test_lambda_zero_keeps_k():
    spec = S(m=1, c=1, k=3.7, alpha=1.4, beta=0.6, lam=0.0)
    assert np.all(effective.effective_stiffness(spec, np.logspace(-3, 3, 50)) == 3.7)


def test_spectral_polynomial_fixtures():
    D = effective.spectral_polynomial(S(m=1, c=1, k=1, alpha=1.5, beta=1.0, lam=0.5), 1.0)
    assert D.real == pytest.approx(0.0, abs=1e-15)
    assert D.imag == pytest.approx(1.0 + math.sqrt(2.0), abs=1e-14)
    # computed by complex exponentials, so integer orders carry rounding
    D = effective.spectral_polynomial(S(m=1, c=0, k=1), 1.0)
    assert abs(D) < 1e-15
    D = effective.spectral_polynomial(classical(2, 3, 5), 1.5)
    assert abs(D - complex(5 - 2 * 1.5**2, 3 * 1.5)) < 1e-14


def test_array_and_scalar_agree():
    spec = S(m=1.3, c=0.4, k=2.2, alpha="1.10 + 1.89*abs(sin(w))", beta=1.3, lam=0.4)
    grid = np.linspace(0.05, 10, 97)
    for fn in (effective.effective_mass, effective.effective_damping, effective.effective_stiffness):
        vec = fn(spec, grid)
        assert np.array_equal(vec, [fn(spec, w) for w in grid])


@pytest.mark.parametrize("w", [0.0, -1.0, math.nan, math.inf])
def test_non_positive_frequency(w):
    with pytest.raises(NonPositiveFrequency):
        effective.effective_mass(classical(1, 1, 1), w)


def test_out_of_range_order_raises():
    spec = S(m=1, c=0, k=1, alpha="2.99*exp(-w)")
    effective.effective_mass(spec, 0.5)
    with pytest.raises(OrderOutOfRange):
        effective.effective_mass(spec, 3.0)


def test_class_dispatch_uses_canonical_form():
    # class I has no damping term; whatever beta is stored must not matter
    spec = VibratorSpec("I", m=1, k=1, alpha=1.5, beta=0.3)
    p = effective.effective_params(spec, 2.0)
    ref = effective_from_spectral(1, 0, 1, 1.5, 1.0, 0.0, 2.0)
    assert p.m_eff == pytest.approx(ref[0], rel=1e-13)
    assert p.c_eff == pytest.approx(ref[1], rel=1e-13)
    assert p.k_eff == 1.0


coef = st.floats(min_value=0.1, max_value=10.0)


@settings(max_examples=300, deadline=None)
@given(m=coef, c=coef, k=coef,
       alpha=st.floats(1.001, 2.999), beta=st.floats(0.001, 1.999), lam=st.floats(0.0, 0.999),
       logw=st.floats(-3.0, 3.0))
def test_spectral_identity_property(m, c, k, alpha, beta, lam, logw):
    w = 10.0**logw
    spec = S(m=m, c=c, k=k, alpha=alpha, beta=beta, lam=lam)
    p = effective.effective_params(spec, w)
    lhs = p.k_eff - p.m_eff * w**2 + 1j * w * p.c_eff
    D = spectral(m, c, k, alpha, beta, lam, w)
    assert abs(lhs - D) <= 1e-10 * abs(D) + 1e-13
    assert p.k_eff >= 0.0


def test_equivalent_polynomial_matches_spectral():
    spec = S(m=1, c=0.2, k=1, alpha="1.10 + 1.89*abs(cos(0.1*w))", beta="1 + 0.99*abs(sin(w))",
             lam="0.99*abs(cos(w))")
    grid = np.linspace(0.02, 10, 500)
    a = effective.equivalent_polynomial(spec, grid)
    b = effective.spectral_polynomial(spec, grid)
    assert np.max(np.abs(a - b) / np.abs(b)) < 1e-12
