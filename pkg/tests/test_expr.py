import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracvib import expr
from fracvib.errors import NonFiniteResult, ProfileSyntaxError, UnknownIdentifier
from fracvib.figures import A_DECAY, PANEL_PROFILES
from fracvib.model import ALPHA_BOUNDS, BETA_BOUNDS, LAMBDA_BOUNDS

GRID_128 = np.linspace(10.0 / 128, 10.0, 128)


@pytest.mark.parametrize("text, omega, expected", [
    ("2.0", 0.7, 2.0),
    ("2.0", 123.0, 2.0),
    ("1.10 + 1.89*abs(sin(w))", 0.0, 1.10),
    ("0.99*abs(exp(-w))", 0.0, 0.99),
    ("1 + 0.99*abs(cos(w))", math.pi / 2, 1.0),
    ("1.10 + 1.89*abs(sin(w))", math.pi / 2, 2.99),
    ("1.80 + 1.19*abs(sin(w))", math.pi, 1.80),
])
def test_documented_values(text, omega, expected):
    assert expr.evaluate(expr.parse(text), omega) == pytest.approx(expected, abs=1e-12)


def test_unknown_identifier_reports_name():
    with pytest.raises(UnknownIdentifier) as info:
        expr.parse("1 + 0.99*abs(cos(q))")
    assert info.value.name == "q"
    assert info.value.position == 17


def test_precedence_and_associativity():
    ev = lambda s: expr.evaluate(expr.parse(s), 2.0)
    assert ev("1 + 2*3") == 7.0
    assert ev("8 - 3 - 2") == 3.0
    assert ev("8 / 4 / 2") == 1.0
    assert ev("-w*3") == -6.0
    assert ev("--w") == 2.0
    assert ev("(1 + 2)*3") == 9.0
    assert ev("1.5e1 + 2E-1") == pytest.approx(15.2)


@pytest.mark.parametrize("text", ["", "   ", "1.89abs(sin(w))", "1 +", "(1 + w",
                                  "sin w", "1 ** 2", "w)", "abs()", "1e999"])
def test_syntax_errors(text):
    with pytest.raises(ProfileSyntaxError) as info:
        expr.parse(text)
    assert info.value.position >= 0


def test_syntax_error_lists_expected_tokens():
    with pytest.raises(ProfileSyntaxError) as info:
        expr.parse("1 + ")
    assert "w" in info.value.expected and "(" in info.value.expected


def test_non_finite_results():
    with pytest.raises(NonFiniteResult):
        expr.evaluate(expr.parse("1/(w - w)"), 1.0)
    with pytest.raises(NonFiniteResult):
        expr.evaluate(expr.parse("exp(w)"), 1e3)


def test_array_evaluation_matches_scalar():
    e = expr.parse("1.10 + 1.89*abs(cos(0.1*w))")
    vec = expr.evaluate(e, GRID_128)
    assert vec.shape == GRID_128.shape
    assert np.array_equal(vec, [expr.evaluate(e, w) for w in GRID_128])
    assert isinstance(expr.evaluate(e, 1.0), float)


@pytest.mark.parametrize("text", PANEL_PROFILES)
def test_round_trip_panel_profiles(text):
    e = expr.parse(text)
    again = expr.parse(expr.to_string(e))
    assert np.max(np.abs(expr.evaluate(e, GRID_128) - expr.evaluate(again, GRID_128))) == 0.0
    assert expr.to_string(again) == expr.to_string(e)


def _ranges():
    a, b, l = ALPHA_BOUNDS, BETA_BOUNDS, LAMBDA_BOUNDS
    return {"1.10": a, "1.80": a, "2.99": a, "1 +": b, "0.99": l}


def _in(values, bounds):
    lo, hi, lo_incl = bounds
    return np.all((values >= lo) if lo_incl else (values > lo)) and np.all(values < hi)


@pytest.mark.parametrize("text", [p for p in PANEL_PROFILES if p != A_DECAY])
def test_panel_profiles_stay_in_range(text):
    bounds = next(b for prefix, b in _ranges().items() if text.startswith(prefix))
    grid = np.linspace(1e-6, 10.0, 4096)
    assert _in(expr.evaluate(expr.parse(text), grid), bounds)


def test_decaying_panel_profile_leaves_range():
    # 2.99 exp(-w) drops below 1 once w > ln 2.99, so it is not admissible on (0, 10]
    values = expr.evaluate(expr.parse(A_DECAY), np.array([0.5, math.log(2.99) + 1e-9, 10.0]))
    assert values[0] > 1.0 and values[1] < 1.0 and values[2] < 1.0


# random expression trees for the round-trip property
_leaf = st.one_of(
    st.floats(min_value=-50, max_value=50, allow_nan=False).map(lambda v: repr(abs(v))),
    st.just("w"),
)


def _extend(children):
    return st.one_of(
        st.tuples(children, st.sampled_from("+-*/"), children).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
        st.tuples(st.sampled_from(["abs", "sin", "cos"]), children).map(lambda t: f"{t[0]}({t[1]})"),
        children.map(lambda s: f"-{s}"),
    )


@settings(max_examples=200, deadline=None)
@given(st.recursive(_leaf, _extend, max_leaves=12))
def test_round_trip_random_trees(text):
    e = expr.parse(text)
    again = expr.parse(expr.to_string(e))
    with np.errstate(all="ignore"):
        try:
            a = expr.evaluate(e, GRID_128)
        except NonFiniteResult:
            with pytest.raises(NonFiniteResult):
                expr.evaluate(again, GRID_128)
            return
    b = expr.evaluate(again, GRID_128)
    assert np.max(np.abs(a - b)) == 0.0
