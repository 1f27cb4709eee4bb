import json
import math

import pytest

from dropkit import rasterize_ball
from dropkit.cli import main, parse_mass_grid


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    lines = captured.err.strip().splitlines()
    manifest = json.loads(lines[-1]) if lines and lines[-1].startswith("{") else None
    return code, captured.out, manifest


def test_parse_mass_grid():
    grid = parse_mass_grid("1.0:2.0:0.5")
    assert list(grid) == [1.0, 1.5, 2.0]
    with pytest.raises(ValueError):
        parse_mass_grid("1:2")
    with pytest.raises(ValueError):
        parse_mass_grid("2:1:0.5")


def test_mstar_radial(capsys):
    code, out, manifest = run(capsys, "mstar", "--dim", "3", "--lambda", "1.0")
    assert code == 0
    data = json.loads(out)
    assert data["m_star"] == pytest.approx(3.512, abs=1e-3)
    assert data["d_ball"] == pytest.approx(16 * math.pi**2 / 15, rel=1e-6)
    assert manifest["command"] == "mstar"
    assert manifest["version"]


def test_mstar_bad_lambda(capsys):
    code = main(["mstar", "--dim", "3", "--lambda", "3.5"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert "lambda must be in" in captured.err


def test_mstar_mc_seed_reproducible_digest(capsys):
    args = ["mstar", "--dim", "3", "--lambda", "1.0", "--method", "mc",
            "--budget", "1e5", "--seed", "11"]
    code1, out1, man1 = run(capsys, *args)
    code2, out2, man2 = run(capsys, *args)
    assert code1 == code2 == 0
    assert man1["output_sha256"] == man2["output_sha256"]
    assert out1 == out2
    data = json.loads(out1)
    assert data["stderr"] > 0
    assert data["m_star"] == pytest.approx(3.512, rel=0.05)


def test_lemma_g_csv(capsys):
    code, out, manifest = run(capsys, "lemma-g", "--alpha-grid", "12", "--s-grid", "500")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "alpha,min_g,s1,passed"
    assert len(lines) == 13
    assert all(line.endswith("True") for line in lines[1:])


def test_lemma_g_dump_curve(tmp_path, capsys):
    path = tmp_path / "curve.csv"
    code, _, _ = run(capsys, "lemma-g", "--alpha-grid", "10", "--s-grid", "100",
                     "--dump-curve", str(path))
    assert code == 0
    rows = path.read_text().strip().splitlines()
    assert rows[0] == "alpha,s,g"
    assert len(rows) == 1 + 10 * 100


def test_binding_scan_verdicts(capsys):
    code, out, _ = run(capsys, "binding-scan", "--dim", "3", "--lambda", "1.0",
                       "--mass-grid", "3.0:3.6:0.3", "--s-grid", "400")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("m,")
    verdicts = [line.split(",")[-1] for line in lines[1:]]
    assert verdicts[0] == "strict_binding_certified"
    assert verdicts[-1] == "inconclusive"


def test_split_flip_near_critical(capsys):
    code, out, _ = run(capsys, "split", "--dim", "3", "--lambda", "1.0",
                       "--mass-grid", "3.4:3.6:0.1", "--kmax", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    by_mass = {}
    for r in rows:
        by_mass[r["m"]] = r["best_k"]
    assert by_mass[3.4] == 1
    assert by_mass[3.6] == 2


def test_nonexistence_bound_lambda_one(capsys):
    code, out, _ = run(capsys, "nonexistence-bound", "--dim", "3", "--lambda", "1.0")
    assert code == 0
    data = json.loads(out)
    assert data["mass_bound"] == pytest.approx(8.0, abs=1e-9)
    assert data["c_N"] == pytest.approx(0.25, abs=1e-10)


def test_nonexistence_bound_unsupported(capsys):
    code, out, _ = run(capsys, "nonexistence-bound", "--dim", "3", "--lambda", "1.5")
    assert code == 3
    assert out == ""


def test_necessary_from_shape_file(tmp_path, capsys):
    ball = rasterize_ball(3, 1.0, 0.1)
    path = tmp_path / "ball.txt"
    path.write_text(ball.to_runlength())
    code, out, _ = run(capsys, "necessary", "--dim", "3", "--lambda", "1.0",
                       "--shape-file", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["satisfied"] is True
    assert data["c_N"] == pytest.approx(0.25, abs=1e-10)
    assert data["moment"] == pytest.approx(ball.measure**2, rel=1e-12)


def test_necessary_missing_file(capsys):
    code, _, _ = run(capsys, "necessary", "--dim", "3", "--lambda", "1.0",
                     "--shape-file", "/nonexistent/shape.txt")
    assert code == 2


def test_optimize_requires_mass(capsys):
    with pytest.raises(SystemExit):
        main(["optimize", "--lambda", "1.0"])


def test_optimize_tiny_run(tmp_path, capsys):
    boundary = tmp_path / "boundary.csv"
    code, out, manifest = run(
        capsys, "optimize", "--lambda", "1.0", "--mass", "1.0", "--modes", "1",
        "--h", "0.08", "--max-iter", "5", "--step-min", "0.05",
        "--boundary-csv", str(boundary),
    )
    assert code == 0
    data = json.loads(out)
    assert data["energy"]["total"] > 0
    assert boundary.read_text().startswith("theta,r")
    assert manifest["seed"] == 0
