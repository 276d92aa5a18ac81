import json
import subprocess
import sys
from pathlib import Path

from tbh import bratteli
from tbh.cli import main
from tbh.params import HeckeParams

SRC = str(Path(__file__).resolve().parents[1] / "src")


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_bratteli_dot_labels(tmp_path, capsys):
    out_file = tmp_path / "fig.dot"
    code, out, _ = run(
        [
            "bratteli",
            "--a", "4", "--b", "2", "--p", "4", "--q", "2", "--k", "1",
            "--format", "dot", "--output", str(out_file),
        ],
        capsys,
    )
    assert code == 0
    assert "rank 0: 1 vertices" in out
    assert "rank 1: 6 vertices" in out
    assert "rank 2: 18 vertices" in out
    dot = out_file.read_text()
    for label in ("16/1", "8/1", "2/1", "-2/1", "-8/1", "-16/1"):
        assert f'label="{label}"' in dot


def test_bratteli_k0(tmp_path, capsys):
    code, out, _ = run(
        ["bratteli", "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "0"],
        capsys,
    )
    assert code == 0
    assert "rank 1:" in out and "rank 2:" not in out


def test_bratteli_json_round_trip(tmp_path, capsys):
    out_file = tmp_path / "diagram.json"
    code, _, _ = run(
        [
            "bratteli",
            "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "1",
            "--format", "json", "--output", str(out_file),
        ],
        capsys,
    )
    assert code == 0
    parsed = bratteli.from_json(out_file.read_bytes())
    assert parsed == bratteli.build_diagram(HeckeParams(1, 1, 1, 1, 1))


def test_seminormal_single_lambda(capsys):
    code, out, _ = run(
        [
            "seminormal",
            "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "2",
            "--lambda", "2,2",
        ],
        capsys,
    )
    assert code == 0
    assert "lambda=(2,2)" in out and "simple=pass" in out


def test_seminormal_rejects_foreign_lambda(capsys):
    code, _, err = run(
        [
            "seminormal",
            "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "1",
            "--lambda", "5",
        ],
        capsys,
    )
    assert code == 3
    assert "not in P_1" in err


def test_seminormal_all_lambda(capsys):
    code, out, _ = run(
        [
            "seminormal",
            "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "1",
            "--all-lambda",
        ],
        capsys,
    )
    assert code == 0
    assert out.count("simple=pass") == 3


def test_oracle_cap_violation(capsys):
    code, _, err = run(
        ["oracle", "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "1", "--n", "1"],
        capsys,
    )
    assert code == 4
    assert "p + q" in err


def test_oracle_k0(capsys):
    code, out, _ = run(
        ["oracle", "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "0", "--n", "2"],
        capsys,
    )
    assert code == 0
    assert "spectra" in out and "pass" in out


def test_dims_output(capsys):
    code, out, _ = run(
        ["dims", "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "2", "--n", "4"],
        capsys,
    )
    assert code == 0
    assert "(2,1):2" in out
    assert "sum dim x weyl_dim_4 = 256" in out  # 4^2 * 4 * 4


def test_normalization_notice(capsys):
    code, out, err = run(
        ["dims", "--a", "2", "--b", "3", "--p", "1", "--q", "2", "--k", "0"],
        capsys,
    )
    assert code == 0
    assert "normalized" in err


def test_validation_errors(capsys):
    code, _, _ = run(["bratteli", "--a", "1", "--b", "1", "--p", "1", "--q", "1"], capsys)
    assert code == 2  # missing --k
    code, _, err = run(
        ["dims", "--a", "0", "--b", "1", "--p", "1", "--q", "1", "--k", "0"], capsys
    )
    assert code == 2
    code, _, err = run(
        ["seminormal", "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "1",
         "--lambda", "1,3"],
        capsys,
    )
    assert code == 2  # not weakly decreasing


def test_module_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "tbh.cli", "dims",
         "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "1"],
        capture_output=True,
        text=True,
        env={"PYTHONPATH": SRC, "PATH": "/usr/bin:/bin:/usr/local/bin"},
    )
    assert proc.returncode == 0
    assert "rank 2" in proc.stdout


def test_seminormal_dump(tmp_path, capsys):
    dump = tmp_path / "dumps"
    code, _, _ = run(
        [
            "seminormal",
            "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "1",
            "--lambda", "2,1", "--dump", str(dump),
        ],
        capsys,
    )
    assert code == 0
    doc = json.loads((dump / "lambda_2_1.json").read_text())
    assert doc["lambda"] == [2, 1]
    assert "x1" in doc["matrices"]
    assert doc["certificate"]["witnesses"]["1"] == [0]


def test_jobs_flag(capsys):
    code, out, _ = run(
        [
            "seminormal",
            "--a", "1", "--b", "1", "--p", "1", "--q", "1", "--k", "1",
            "--all-lambda", "--jobs", "2",
        ],
        capsys,
    )
    assert code == 0
    assert out.count("simple=pass") == 3
