import json

import numpy as np
import pytest

from fracvib.config import load_config, parse_config
from fracvib.errors import ConfigError

BASE = {"m": 1, "k": 1}


def test_defaults():
    cfg = parse_config(dict(BASE))
    grid = cfg.omega_grid()
    assert grid.size == 512 and grid[0] == 1e-3 and grid[-1] == 10.0
    t = cfg.t_grid()
    assert t.size == 2001 and t[-1] == 50.0
    assert cfg.response_omega == 1.1 and cfg.kind == "free"
    assert (cfg.ic.x0, cfg.ic.v0) == (1.0, 1.0)
    assert cfg.spec.vibrator_class.value == "VI"


def test_full_document(tmp_path):
    doc = {
        "class": "VI", "m": 1, "c": 0.2, "k": 1,
        "alpha": "1.10 + 1.89*abs(cos(0.1*w))", "beta": 1.3,
        "lambda": {"table": [[0.1, 0.2], [10, 0.6]]},
        "omega": {"min": 0.01, "max": 100, "count": 5, "spacing": "log"},
        "response": {"omega": 0.9, "t_max": 10, "count": 11, "x0": 0, "v0": 2, "kind": "impulse"},
    }
    path = tmp_path / "c.json"
    path.write_text(json.dumps(doc))
    cfg = load_config(path)
    assert np.allclose(cfg.omega_grid(), [0.01, 0.1, 1, 10, 100])
    assert cfg.spec.lam.kind == "table" and cfg.spec.alpha.kind == "expression"
    assert cfg.kind == "impulse" and cfg.t_grid()[1] == 1.0


@pytest.mark.parametrize("patch", [
    {"omega": {"min": 0}},
    {"omega": {"min": -1}},
    {"omega": {"min": 5, "max": 1}},
    {"omega": {"count": 1}},
    {"omega": {"count": 2.5}},
    {"omega": {"spacing": "cubic"}},
    {"response": {"omega": 0}},
    {"response": {"kind": "step"}},
    {"response": {"t_max": -1}},
    {"m": -1},
    {"m": "heavy"},
    {"c": True},
    {"alpha": "1.89abs(w)"},
    {"class": "VII"},
    {"class": "I", "c": 0.3},
    {"mass": 1},
])
def test_rejections(patch):
    with pytest.raises(ConfigError):
        parse_config(BASE | patch)


def test_missing_keys_and_files(tmp_path):
    with pytest.raises(ConfigError):
        parse_config({"m": 1})
    with pytest.raises(ConfigError):
        load_config(tmp_path / "nope.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        load_config(bad)
