import json
import subprocess
import sys

import pytest

from qtoroidal.cli import run

T1 = {"n": 2, "conductor": 2, "exps": [[0, 1], [1, 0]]}
ZETA3 = {"n": 2, "conductor": 3, "exps": [[0, 1], [2, 0]]}


@pytest.fixture
def cfg(tmp_path):
    def write(obj, name="cfg.json"):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    return write


def test_torus_describe(cfg):
    status, out = run(["torus", "describe", "--config", cfg(T1)])
    assert status == 0
    assert out["schema_version"] == 1
    assert out["radf_basis"] == [[2, 0], [0, 2]]
    assert out["N"] == [2, 2]
    assert out["radf_index"] == 4


def test_hc1_dim_and_oracle(cfg):
    path = cfg(T1)
    assert run(["hc1", "dim", "--config", path, "--r", "2,0"])[1]["dim"] == 1
    status, out = run(["hc1", "oracle", "--config", path, "--r", "0,0", "--window", "3"])
    assert status == 0 and out["bruteforce"] == out["dim"] == 2


def test_verify_jacobi(cfg):
    status, out = run(["verify", "jacobi", "--config", cfg(T1), "--d", "2", "--trials", "100", "--seed", "7"])
    assert status == 0 and out["failures"] == 0


def test_deterministic(cfg):
    args = ["torus", "verify", "--config", cfg(T1), "--trials", "50", "--seed", "123"]
    assert run(args) == run(args)


def test_bracket(cfg):
    job = {
        "torus": T1,
        "d": 2,
        "x": {"mat": [{"entries": [[0, 1], [0, 0]], "exp": [1, 0]}]},
        "y": {"mat": [{"entries": [[0, 0], [1, 0]], "exp": [-1, 0]}]},
    }
    status, out = run(["bracket", "--config", cfg(job)])
    assert status == 0
    assert out["result"]["hc1"]["terms"][0]["i"] == 1
    assert out["in_sl"]


def test_bracket_rejects_non_sl(cfg):
    job = {"torus": T1, "d": 2, "x": {"mat": [{"entries": [[1, 0], [0, 1]], "exp": [2, 0]}]}, "y": {}}
    status, out = run(["bracket", "--config", cfg(job)])
    assert status == 2 and out["error"] == "not-in-sl"


def test_fiber_commands(cfg):
    status, out = run(["fiber", "decompose", "--config", cfg(ZETA3)])
    assert status == 0
    assert [(f["dim"], f["center_dim"], f["size"]) for f in out["fibers"]] == [(9, 1, 3)]
    pts = cfg({"points": [[1, -1], [1]]}, "pts.json")
    status, out = run(["fiber", "rep", "--config", cfg(T1), "--points", pts])
    assert status == 0 and len(out["reps"]) == 2


def test_module_commands(cfg):
    modcfg = cfg({"torus": T1, "d": 2, "points": {"points": [[1], [1]]}, "rep": "natural", "window": 2})
    status, out = run(["module", "build", "--config", modcfg, "--trials", "10"])
    assert status == 0 and out["dim"] == 4
    status, out = run(["module", "vplus", "--config", modcfg])
    assert status == 0 and out["dim"] == 2 and out["dominant"]
    status, out = run(["module", "weights", "--config", modcfg])
    assert status == 0 and out["weyl_invariant"]
    status, out = run(["module", "lambda", "--config", modcfg])
    assert status == 0 and out["holds"]
    status, out = run(["module", "decompose", "--config", modcfg, "--rep", "trivial"])
    assert status == 0 and out["class_count"] == 1


@pytest.mark.parametrize(
    "argv,code",
    [
        (["torus", "describe"], "usage"),
        (["torus", "describe", "--config", "/nonexistent.json"], "io-error"),
        (["hc1", "dim", "--config", "CFG", "--r", "1"], "invalid-degree"),
        (["hc1", "dim", "--config", "CFG", "--r", "1,x"], "invalid-degree"),
        (["torus", "describe", "--config", "CFG", "--unknown"], "usage"),
        (["module", "vplus", "--config", "CFG", "--rep", "spinor"], "invalid-rep"),
        (["nonsense"], "usage"),
    ],
)
def test_input_errors_exit_2(cfg, argv, code):
    path = cfg(T1)
    status, out = run([path if a == "CFG" else a for a in argv])
    assert status == 2
    assert out["error"] == code


def test_bad_json_and_bad_torus(cfg, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert run(["torus", "describe", "--config", str(p)])[1]["error"] == "invalid-json"
    status, out = run(["torus", "describe", "--config", cfg({"n": 2, "conductor": 2, "exps": [[0, 1], [0, 0]]})])
    assert status == 2


def test_entry_point_prints_single_json(cfg):
    proc = subprocess.run(
        [sys.executable, "-m", "qtoroidal.cli", "hc1", "dim", "--config", cfg(T1), "--r", "2,0"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dim"] == 1
