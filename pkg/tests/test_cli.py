import json
import os

import pytest

from zal.cli import dispatch
from zal.config import coerce, read_config_file, resolve
from zal.errors import ParseError


def run(tmp_path, *args, env=None):
    return dispatch(list(args) + ["--out-dir", str(tmp_path)], environ=env or {})


def test_zeta_point_prints_one_row(tmp_path, capsys):
    assert run(tmp_path, "zeta", "point", "--t", "100") == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0] == "t,theta,z,n,s,method_error"
    assert len(out) == 2 and out[1].startswith("100.0,")


def test_manifest_echoes_config(tmp_path):
    run(tmp_path, "zeta", "point", "--t", "250")
    doc = json.loads((tmp_path / "manifest.json").read_text())
    assert doc["command"] == ["zeta", "point"]
    assert doc["config"]["t"] == 250.0
    assert "version" in doc and "point.csv" in doc["outputs"]


def test_usage_errors_exit_2(tmp_path):
    assert dispatch(["bogus"]) == 2
    assert dispatch(["zeta", "point", "--order", "2.5"]) == 2
    assert run(tmp_path, "zeta", "point", "--t", "1") == 2


def test_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nt = 300\nseed = 3\n")
    assert run(tmp_path, "zeta", "point", "--config", str(cfg)) == 0
    assert json.loads((tmp_path / "manifest.json").read_text())["config"]["t"] == 300.0
    assert run(tmp_path, "zeta", "point", "--config", str(cfg), env={"ZAL_T": "400"}) == 0
    assert json.loads((tmp_path / "manifest.json").read_text())["config"]["t"] == 400.0
    assert run(tmp_path, "zeta", "point", "--config", str(cfg), "--t", "500", env={"ZAL_T": "400"}) == 0
    doc = json.loads((tmp_path / "manifest.json").read_text())
    assert doc["config"]["t"] == 500.0 and doc["config"]["seed"] == 3


def test_config_helpers(tmp_path):
    p = tmp_path / "c.cfg"
    p.write_text("a = 1\nbroken line\n")
    with pytest.raises(ParseError) as exc:
        read_config_file(p)
    assert exc.value.line == 2
    assert coerce("1e4", 1) == 10000
    assert coerce("1e4,1e5", [1.0]) == [1e4, 1e5]
    assert resolve({"x": 1}, {"x": 5}, None, {"ZAL_X": "3"}) == {"x": 5}
    assert resolve({"x": 1}, {}, None, {"ZAL_X": "3"}) == {"x": 3}


def test_rerun_is_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert dispatch(["stats", "moments", "--k", "1", "--T", "1e4", "--n", "300", "--seed", "7",
                     "--out-dir", str(a)], environ={}) == 0
    assert dispatch(["rerun", str(a / "manifest.json"), "--out-dir", str(b)], environ={}) == 0
    for name in ("moments.csv", "manifest.json"):
        ta, tb = (a / name).read_bytes(), (b / name).read_bytes()
        if name == "manifest.json":
            ta, tb = ta.replace(str(a).encode(), b""), tb.replace(str(b).encode(), b"")
        assert ta == tb


def test_verify_prop21_small(tmp_path):
    assert run(tmp_path, "verify", "prop21", "--t-min", "100", "--t-max", "1e5", "--pairs", "200") == 0
    rep = json.loads((tmp_path / "prop21.json").read_text())
    assert set(rep) == {"name", "params", "verdict", "statistics", "seed"}
    assert "min_slack" in rep["statistics"]


def test_zeta_zeros_against_table(tmp_path):
    table = tmp_path / "ref.txt"
    table.write_text("14.134725142\n21.022039639\n25.010857580\n")
    assert run(tmp_path, "zeta", "zeros", "--t-max", "26", "--zeros", str(table)) == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("14.134725142\n21.022039639\n")
    assert run(tmp_path, "zeta", "zeros", "--t-max", "26", "--zeros", str(bad)) == 1
    assert (tmp_path / "zeros.txt").read_text().count("\n") == 3


def test_report_summarises(tmp_path, capsys):
    run(tmp_path, "verify", "prop21", "--t-max", "1e4", "--pairs", "50")
    assert run(tmp_path, "report") == 0
    assert "drift" in capsys.readouterr().out
    assert os.path.exists(tmp_path / "summary.csv")


def test_integrity_error_exit_3(tmp_path, monkeypatch):
    from zal import rszeta
    from zal.errors import IntegrityError

    def boom(*a, **k):
        raise IntegrityError("forced", interval=(0, 1))

    monkeypatch.setattr(rszeta, "critical_samples", boom)
    assert run(tmp_path, "zeta", "point", "--t", "100") == 3
