import math

import numpy as np
import pytest

from oracles import effective_from_spectral
from fracvib import effective
from fracvib.errors import NonzeroPrimaryDamping
from fracvib.model import VibratorSpec
from fracvib.rayleigh import rayleigh_coefficients

S = lambda **kw: VibratorSpec("VI", **kw)


def test_classical_orders_give_zero():
    for w in (0.01, 1.0, 30.0):
        d = rayleigh_coefficients(S(m=2, c=0, k=3), w)
        assert (d.a, d.b, d.c_gray) == (0.0, 0.0, 0.0)


def test_fixture():
    d = rayleigh_coefficients(S(m=1, c=0, k=1, alpha=1.5, lam=0.5), 1.0)
    assert d.a == pytest.approx(0.70711, abs=1e-5)
    assert d.b == pytest.approx(0.70711, abs=1e-5)
    assert d.c_gray == pytest.approx(1.41421, abs=1e-5)
    assert d.c_gray == pytest.approx(effective_from_spectral(1, 0, 1, 1.5, 1.0, 0.5, 1.0)[1], rel=1e-12)


def test_constant_orders_reduce_to_standard_form():
    # constant orders: c_gray = a m + b k with frequency-only weights
    m, k, alpha, lam = 2.0, 5.0, 1.7, 0.4
    for w in (0.3, 1.0, 3.0):
        d = rayleigh_coefficients(S(m=m, c=0, k=k, alpha=alpha, lam=lam), w)
        a = w ** (alpha - 1) * math.sin(alpha * math.pi / 2)
        b = w ** (lam - 1) * math.sin(lam * math.pi / 2)
        assert d.a == pytest.approx(a, rel=1e-14)
        assert d.b == pytest.approx(b, rel=1e-14)


def test_requires_zero_primary_damping():
    with pytest.raises(NonzeroPrimaryDamping):
        rayleigh_coefficients(S(m=1, c=0.1, k=1), 1.0)


def test_identity_and_bit_exact_combination():
    spec = S(m=1.3, c=0, k=0.8, alpha="1.80 + 1.19*abs(sin(w))", lam="0.99*abs(cos(w))")
    for w in np.linspace(0.01, 10, 1000):
        d = rayleigh_coefficients(spec, w)
        assert d.c_gray == d.a * spec.m + d.b * spec.k
        ref = effective.effective_damping(spec, w)
        assert abs(d.c_gray - ref) <= 1e-12 * abs(ref)
        assert math.isfinite(d.c_gray)


def test_negative_a_for_high_inertia_order():
    d = rayleigh_coefficients(S(m=1, c=0, k=1, alpha=2.5), 1.0)
    assert d.a == pytest.approx(math.sin(1.25 * math.pi), rel=1e-14)
    assert d.a < 0


def test_non_negative_when_inertia_order_below_two():
    spec = S(m=1, c=0, k=1, alpha="1.10 + 0.89*abs(sin(w))", lam="0.99*abs(cos(w))")
    for w in np.linspace(0.001, 10, 2000):
        d = rayleigh_coefficients(spec, w)
        assert d.a >= 0 and d.b >= 0 and d.c_gray >= 0
