import numpy as np
import pytest

from fracvib.errors import UnknownFigureId
from fracvib.figures import CATALOG, figure_specs, get_panel, panel_rows


def test_catalog_size_and_ids():
    assert len(CATALOG) == 45
    assert {"3.1e", "3.2b", "3.2c", "4.1b", "4.1c", "4.1d", "5.1a", "5.1b", "5.2b"} <= set(CATALOG)


@pytest.mark.parametrize("text", ["3.1e", "3.1(e)", " 3.1E "])
def test_id_spellings(text):
    assert get_panel(text).id == "3.1e"


def test_unknown_id():
    with pytest.raises(UnknownFigureId):
        get_panel("9.9")


def test_rows_cover_every_curve_and_point():
    panel = get_panel("3.1a")
    rows = panel_rows(panel)
    assert len(rows) == 3 * 512
    assert {r[0] for r in rows} == {"alpha=1.3", "alpha=1.6", "alpha=1.9"}
    assert all(r[3] == "OK" for r in rows)


def test_undefined_points_carry_status():
    rows = panel_rows(get_panel("6.2b"))
    statuses = {r[3] for r in rows}
    assert statuses == {"OK", "OrderOutOfRange"}
    assert all(r[2] is None for r in rows if r[3] != "OK")


def test_over_critical_curve_in_response_panel():
    rows = panel_rows(get_panel("5.1a"))
    by_curve = {}
    for label, _, value, status in rows:
        by_curve.setdefault(label, set()).add(status)
    assert by_curve["alpha=1.3"] == {"OverCritical"}
    assert by_curve["alpha=1.6"] == {"OK"} and by_curve["alpha=1.9"] == {"OK"}


def test_figure_specs_are_variable_order_and_distinct():
    specs = figure_specs()
    assert len(specs) == len(set(specs)) > 5
    for s in specs:
        assert not all(p.is_constant for p in (s.alpha, s.beta, s.lam))
