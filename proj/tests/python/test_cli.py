"""End-to-end CLI tests: subcommands, schemas, exit codes, determinism."""

import json
import math
import os
import subprocess

import pytest

BIN = os.environ["SUPERCHSH_BIN"]


def run(*args, env_extra=None, expect=0):
    env = os.environ.copy()
    env.pop("SUPERCHSH_SEED", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    assert proc.returncode == expect, (
        f"exit {proc.returncode} != {expect}; stderr: {proc.stderr}"
    )
    return proc


REPORT_KEYS = {"map", "params", "tables", "p_win", "feasible", "seed", "version"}


def test_play_paper_rogers():
    out = json.loads(run("play", "--map", "rogers", "--params", "paper").stdout)
    assert REPORT_KEYS <= set(out)
    assert 0.9245 <= out["p_win"] <= 0.9285
    assert out["feasible"] is True
    assert len(out["tables"]) == 4
    assert all(len(t) == 3 and all(len(row) == 3 for row in t) for t in out["tables"])


def test_play_zero_dewitt_and_rogers_agree():
    dewitt = json.loads(run("play", "--map", "dewitt", "--params", "zero").stdout)
    rogers = json.loads(run("play", "--map", "rogers", "--params", "zero").stdout)
    # Bell state in the computational basis: wins the three ij != 11 rounds.
    assert dewitt["p_win"] == pytest.approx(0.75, abs=1e-12)
    assert rogers["p_win"] == dewitt["p_win"]
    assert rogers["tables"] == dewitt["tables"]


def test_play_set_overrides(tmp_path):
    out = json.loads(
        run("play", "--map", "rogers", "--params", "zero", "--set", "r0=0.6").stdout
    )
    assert out["params"]["r0"] == 0.6

    params_file = tmp_path / "params.json"
    params_file.write_text(json.dumps({"p": 0.5, "a0": 0.25}))
    out = json.loads(run("play", "--map", "rogers", "--params", str(params_file)).stdout)
    assert out["params"]["p"] == 0.5
    assert out["params"]["q"] == 0.0


def test_exit_code_malformed_params(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"p": 0.5, "bogus": 1.0}))
    run("play", "--map", "rogers", "--params", str(bad), expect=2)

    notjson = tmp_path / "notjson.json"
    notjson.write_text("{{{")
    run("play", "--map", "rogers", "--params", str(notjson), expect=2)

    run("play", "--map", "rogers", "--set", "nope=1", expect=2)
    run("play", "--map", "nosuchmap", expect=2)
    run("play", "--map", "trig", "--params", "zero", expect=2)  # missing flag


def test_exit_code_extraction_error():
    # paper parameters have r1 = 0 but p != 0, so the rotation-scale trig
    # substitution is undefined on the i = 1 settings
    proc = run(
        "play", "--map", "trig", "--experimental-trig", "--params", "paper", expect=3
    )
    assert "rho" in proc.stderr


def test_seed_env_fallback():
    out = json.loads(
        run(
            "play", "--map", "dewitt", "--params", "zero",
            env_extra={"SUPERCHSH_SEED": "99"},
        ).stdout
    )
    assert out["seed"] == 99
    out = json.loads(
        run(
            "play", "--map", "dewitt", "--params", "zero", "--seed", "7",
            env_extra={"SUPERCHSH_SEED": "99"},
        ).stdout
    )
    assert out["seed"] == 7


def test_optimize_deterministic_bytes():
    args = (
        "optimize", "--map", "rogers", "--seed", "7",
        "--restarts", "3", "--max-iters", "250",
    )
    first = run(*args).stdout
    second = run(*args).stdout
    assert first == second
    out = json.loads(first)
    assert REPORT_KEYS <= set(out)
    assert out["restarts_run"] == 3
    assert len(out["history"]) == 3
    assert out["feasible"] is True


def test_optimize_box():
    out = json.loads(
        run(
            "optimize", "--map", "rogers", "--seed", "7", "--restarts", "3",
            "--max-iters", "250", "--box", "0.5",
        ).stdout
    )
    assert out["box"] == {"r_max": 0.5, "s_max": 0.5}
    for key in ("r0", "r1", "s0", "s1"):
        assert abs(out["params"][key]) <= 0.5 + 1e-12


def test_baselines():
    out = json.loads(run("baselines").stdout)
    assert out["classical"]["value"] == 0.75
    assert out["tsirelson"]["value"] == pytest.approx(math.cos(math.pi / 8) ** 2, abs=1e-9)
    assert out["comm_complexity"]["value"] == pytest.approx((3 + math.sqrt(6)) / 6)
    assert out["pr_box"]["value"] == 1.0


def test_maps_demo():
    out = json.loads(run("maps-demo", "--alpha", "1", "--beta", "0", "--r", "0.6").stdout)
    assert out["rogers"]["p0"] == pytest.approx(0.64)
    assert out["rogers"]["pdot"] == pytest.approx(0.36)
    assert out["trig"]["p0"] == pytest.approx(math.sin(0.6) ** 2)
    assert out["trig"]["pdot"] == pytest.approx(math.cos(0.6) ** 2)
    assert out["dewitt"]["p0"] == pytest.approx(1.0)
    assert out["dewitt"]["pdot"] == 0.0


def test_csv_tables():
    proc = run("play", "--map", "dewitt", "--params", "zero", "--format", "csv")
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "ij,outcome_a,outcome_b,p"
    assert len(lines) == 1 + 4 * 9


def test_output_file(tmp_path):
    target = tmp_path / "report.json"
    run("play", "--map", "dewitt", "--params", "zero", "--output", str(target))
    out = json.loads(target.read_text())
    assert out["p_win"] == pytest.approx(0.75, abs=1e-12)


def test_check_command():
    proc = run("check", "--seed", "5")
    assert "[PASS]" in proc.stdout
    assert "all checks passed" in proc.stdout


def test_version_flag():
    proc = run("--version")
    assert proc.stdout.strip() == "0.1.0"
