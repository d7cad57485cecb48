import json

import pytest

from nn_extremal import cli
from nn_extremal import geom_core


def run(*argv):
    return cli.run([str(a) for a in argv])


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"rect": {"a": 1.0, "b": 1.0},
                                "points": [[0, 0], [1, 0], [0, 1], [1, 1]]}))
    return path


def test_sigma(config_file, tmp_path, capsys):
    assert run("sigma", "--in", config_file) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sigma"] == 4.0 and out["d"] == [1.0] * 4 and out["gap"] == 0.0

    target = tmp_path / "out" / "summary.json"
    assert run("sigma", "--in", config_file, "--out", target) == 0
    manifest = json.loads((tmp_path / "out" / "summary.json.manifest.json").read_text())
    assert manifest["command"] == "sigma"
    assert all(__import__("os").path.exists(p) for p in manifest["outputs"])
    assert manifest["timestamp"].endswith("+00:00")


def test_sigma_invalid_inputs(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rect": {"a": 1, "b": 1}, "points": [[0, 0], [2, 0]]}))
    assert run("sigma", "--in", bad) == 1
    assert run("sigma", "--in", tmp_path / "missing.json") == 1
    bad.write_text("{not json")
    assert run("sigma", "--in", bad) == 1
    bad.write_text(json.dumps({"rect": {"a": 1, "b": 1}, "points": [[0, 0], [1.05, 0]]}))
    assert run("sigma", "--in", bad, "--tol-contain", "0.1") == 0


def test_sigma_counterexample_alarm(config_file, monkeypatch):
    real = geom_core.nn_distances

    def inflated(config):
        s = real(config)
        return geom_core.NnSummary(s.d, s.nearest, s.sigma + 1.0)

    monkeypatch.setattr(cli, "nn_distances", inflated)
    assert run("sigma", "--in", config_file) == 2


def test_usage_errors(capsys):
    assert run("bogus") == 1
    assert run("maximize", "--a", "1") == 1
    assert run() == 1
    assert "usage" in capsys.readouterr().err


def test_maximize(tmp_path):
    out = tmp_path / "r.json"
    assert run("maximize", "--a", 1, "--b", 1, "--n", 3, "--restarts", 64, "--seed", 1,
               "--out", out) == 0
    rep = json.loads(out.read_text())
    assert rep["best_value"] == pytest.approx(3.25, abs=1e-6)
    assert rep["seed"] == 1 and rep["restarts_run"] == 64
    assert rep["bound"] == 4.0


def test_maximize_with_grid_and_anneal(tmp_path):
    out = tmp_path / "r.json"
    assert run("maximize", "--a", 1, "--b", 1, "--n", 4, "--restarts", 2, "--seed", 1,
               "--grid", 2, "--anneal", "--out", out) == 0
    rep = json.loads(out.read_text())
    assert rep["grid"]["best_value"] == 4.0
    assert rep["restarts_run"] == 3
    assert rep["best_value"] >= 4.0 - 1e-9


def test_maximize_invalid():
    assert run("maximize", "--a", -1, "--b", 1, "--n", 3) == 1
    assert run("maximize", "--a", 1, "--b", 1, "--n", 1) == 1
    assert run("maximize", "--a", 1, "--b", 1, "--n", 5, "--grid", 3) == 1


def test_maximize_bit_identical_across_workers(tmp_path):
    paths = []
    for w in (1, 3):
        p = tmp_path / f"w{w}.json"
        assert run("maximize", "--a", 1.5, "--b", 1, "--n", 6, "--restarts", 12, "--seed", 4,
                   "--workers", w, "--out", p) == 0
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_sweep_s3(tmp_path):
    out = tmp_path / "s.csv"
    assert run("sweep-s3", "--ratios", "0.5,2.0", "--restarts", 16, "--seed", 1,
               "--out", out) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "ratio,value,piece,ratio_bound,found,rel_err"
    assert lines[1].startswith("0.5,1.5625,1,")
    assert len(lines) == 3


def test_sweep_s3_closed_form_only(capsys):
    assert run("sweep-s3", "--closed-form-only", "--count", 5, "--breakpoints") == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 + 5 + 4
    ratio_bounds = [float(l.split(",")[3]) for l in lines[1:]]
    assert max(ratio_bounds) == pytest.approx(12 / 7, abs=1e-9)


def test_slice_csv(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert run("slice", "--seed", 7, "--n", 6, "--index", 3, "--samples", 101, "--out", p) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "s,sigma"
    assert len(lines) == 102
    # 17 significant digits round-trip the doubles exactly
    s, sig = lines[5].split(",")
    assert float(format(float(sig), ".17g")) == float(sig)


def test_slice_invalid():
    assert run("slice", "--n", 3, "--index", 5) == 1


def test_certify(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert run("certify", "--trials", 30, "--seed", 1, "--out", out) == 0
    reps = json.loads(out.read_text())
    assert isinstance(reps, list) and all(r["ok"] for r in reps)
    assert {"name", "value", "ok", "params"} <= set(reps[0])
    err = capsys.readouterr().err
    assert "case71" in err and "FAIL" not in err


def test_certify_failure_exit_code(tmp_path):
    # an absurdly negative tolerance makes every residual fail
    out = tmp_path / "c.json"
    assert run("certify", "--trials", 2, "--family", "case6", "--tol-identity", -1, "--out", out) == 2


def test_oracle(capsys):
    assert run("oracle", "--n", 4, "--m", 2) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["best_value"] == 4.0
    assert run("oracle", "--n", 4, "--m", 30) == 1
