import csv
import io
import json

import pytest

from fracvib import cli

CONFIG = {
    "m": 1, "c": 0.2, "k": 1,
    "alpha": "1.10 + 1.89*abs(cos(0.1*w))", "beta": "1 + 0.99*abs(sin(w))",
    "lambda": "0.99*abs(cos(w))",
    "omega": {"min": 0.05, "max": 2, "count": 40},
    "response": {"omega": 1.1, "t_max": 5, "count": 51},
}


@pytest.fixture
def config(tmp_path):
    def write(doc=CONFIG, name="cfg.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return write


def _run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _table(text):
    return list(csv.reader(io.StringIO(text)))


@pytest.mark.parametrize("command, header", [
    ("effective", ["omega", "alpha", "beta", "lambda", "m_eff", "c_eff", "k_eff", "status"]),
    ("restricted", ["omega", "zeta_eff", "omega_effn", "omega_effd", "gamma_eff", "status"]),
    ("response", ["t", "x", "status"]),
    ("transfer", ["omega", "re_H", "im_H", "amplitude", "phase", "status"]),
])
def test_sweep_commands(capsys, config, command, header):
    code, out, _ = _run(capsys, command, "--config", config())
    assert code == 0
    rows = _table(out)
    assert rows[0] == header
    assert len(rows) == 1 + (51 if command == "response" else 40)
    assert "\r" not in out


def test_impulse_kind(capsys, config):
    code, out, _ = _run(capsys, "response", "--config", config(), "--kind", "impulse")
    rows = _table(out)
    assert code == 0 and rows[0][1] == "h" and float(rows[1][1]) == 0.0


def test_restricted_reports_status_with_empty_fields(capsys, config):
    doc = CONFIG | {"alpha": 1.3, "beta": 0.3, "lambda": 0.3, "c": 1}
    code, out, _ = _run(capsys, "restricted", "--config", config(doc))
    rows = _table(out)[1:]
    neg = [r for r in rows if r[-1] == "MassNonPositive"]
    assert code == 0 and neg
    assert all(f == "" for f in neg[0][1:5])


def test_rayleigh_needs_zero_damping(capsys, config):
    code, _, err = _run(capsys, "rayleigh", "--config", config())
    assert code == 1 and "c = 0" in err
    code, out, _ = _run(capsys, "rayleigh", "--config", config(CONFIG | {"c": 0}))
    assert code == 0 and _table(out)[0] == ["omega", "a", "b", "c_gray", "status"]


def test_zero_minimum_frequency_rejected(capsys, config):
    doc = CONFIG | {"omega": {"min": 0, "max": 2, "count": 10}}
    code, out, err = _run(capsys, "effective", "--config", config(doc))
    assert code == 1 and out == "" and "omega.min" in err


def test_usage_errors_exit_one(capsys, tmp_path):
    assert _run(capsys, "effective")[0] == 1
    assert _run(capsys, "nonsense")[0] == 1
    assert _run(capsys, "effective", "--config", str(tmp_path / "missing.json"))[0] == 1


def test_unknown_figure(capsys):
    code, _, err = _run(capsys, "figure", "9.9")
    assert code == 1 and "unknown figure id" in err


def test_figure_list(capsys):
    code, out, _ = _run(capsys, "figure", "--list")
    assert code == 0 and len(out.strip().splitlines()) == 45


def test_figure_to_file(capsys, tmp_path):
    out = tmp_path / "fig.csv"
    code, stdout, _ = _run(capsys, "figure", "3.1e", "--out", str(out))
    assert code == 0 and stdout == ""
    rows = _table(out.read_text())
    assert rows[0] == ["curve", "omega", "m_eff", "status"] and len(rows) == 1 + 3 * 512


def test_svg_output(capsys, tmp_path):
    pytest.importorskip("matplotlib")
    out = tmp_path / "fig.csv"
    assert _run(capsys, "figure", "5.3c", "--out", str(out), "--svg")[0] == 0
    first = out.with_suffix(".svg").read_bytes()
    assert first.startswith(b"<?xml")
    assert _run(capsys, "figure", "5.3c", "--out", str(out), "--svg")[0] == 0
    assert out.with_suffix(".svg").read_bytes() == first


def test_svg_needs_out(capsys):
    assert _run(capsys, "figure", "3.1a", "--svg")[0] == 1


def test_sweeps_are_deterministic(capsys, config):
    path = config()
    first = _run(capsys, "transfer", "--config", path)[1]
    assert _run(capsys, "transfer", "--config", path)[1] == first


def test_verify_document_with_config(config):
    doc = cli.verify_document(42, config())
    names = [c["check"] for c in doc["checks"]]
    assert names.count("spectral_identity") == 2
    assert doc["passed"]
    json.dumps(doc, allow_nan=False)


def test_verify_failure_exit_code(capsys, monkeypatch, tmp_path):
    from fracvib import effective

    original = effective.effective_damping
    monkeypatch.setattr(effective, "effective_damping", lambda s, w: -original(s, w))
    code, _, err = _run(capsys, "verify", "--out", str(tmp_path / "r.json"))
    report = json.loads((tmp_path / "r.json").read_text())
    assert code == 2 and not report["passed"] and "FAIL spectral_identity" in err
