import json

import numpy as np
import pytest

from grassnorm.cli import run

from _gen import random_lambda, pair_symmetrized


@pytest.fixture
def files(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    eps = 1e-2
    return {
        "p": write("p.json", {"n": 3, "points": [[1, 0, 0, 0], [0, 1, 0, 0]]}),
        "p_star": write("p_star.json", {"n": 3, "points": [[0, 0, 1, 0], [0, 0, 0, 1]]}),
        "quadric": write("q.json", {"n": 3, "matrix": np.eye(4).tolist()}),
        "pair_a": write(
            "pair_a.json",
            {
                "p": {"n": 3, "points": [[1, 0, 0, 0], [0, 1, 0, 0]]},
                "p_star": {"n": 3, "points": [[0, 0, 1, 0], [0, 0, 0, 1]]},
            },
        ),
        "pair_b": write(
            "pair_b.json",
            {
                "p": {"n": 3, "points": [[1, 0, eps, 0], [0, 1, 0, 0]]},
                "p_star": {"n": 3, "points": [[-eps, 0, 1, 0], [0, 0, 0, 1]]},
            },
        ),
        "direction": write("d.json", {"m": 1, "n": 3, "d": [[1.0, 0.0], [0.0, 0.5]]}),
        "chart": write("b.json", {"m": 1, "n": 3, "B": [[0.25, -0.5], [1.0, 0.75]]}),
        "write": write,
    }


def invoke(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_cross_ratio_report(files, capsys):
    code, rep = invoke(
        capsys,
        ["cross-ratio", "--pair-a", files["pair_a"], "--pair-b", files["pair_b"],
         "--log-distance"],
    )
    assert code == 0
    assert rep["command"] == "cross-ratio"
    assert rep["outputs"]["trace"] == pytest.approx(1.0 + 1.0 / 1.0001)
    assert rep["outputs"]["log_distance"] == pytest.approx(-1e-4, rel=1e-3)
    assert set(rep["inputs"]) == {"pair_a", "pair_b"}
    assert all(len(v["sha256"]) == 64 for v in rep["inputs"].values())


def test_estimate_lambda_polar_and_constant(files, capsys):
    code, rep = invoke(
        capsys,
        ["estimate-lambda", "--map", f"polar:{files['quadric']}",
         "--subspace", files["p"]],
    )
    assert code == 0
    lam = np.array(rep["outputs"]["lambda"])
    np.testing.assert_allclose(lam, -np.einsum("ab,ij->abij", np.eye(2), np.eye(2)))
    assert rep["outputs"]["lambda_rank"] == 4

    code, rep = invoke(
        capsys,
        ["estimate-lambda", "--map", f"constant:{files['p_star']}",
         "--subspace", files["p"]],
    )
    assert code == 0
    assert rep["outputs"]["lambda_rank"] == 0


def test_metric_curvature_ricci_pipeline(files, capsys, tmp_path):
    ft = random_lambda(np.random.default_rng(81), 1, 3)
    lam_file = files["write"](
        "lam.json", {"m": 1, "n": 3, "lambda": ft.lam.tolist()}
    )
    code, rep = invoke(capsys, ["metric", "--lambda", lam_file])
    assert code == 0 and np.array(rep["outputs"]["g"]).shape == (2, 2, 2, 2)

    code, rep = invoke(capsys, ["curvature", "--lambda", lam_file])
    assert code == 0 and rep["outputs"]["max_abs"] > 0

    code, rep = invoke(capsys, ["ricci", "--lambda", lam_file])
    assert code == 0
    assert rep["residuals"]["ricci_asymmetry"] > 0


def test_polar_emit_variants(files, capsys):
    for emit in ("conjugate", "lambda", "metric", "curvature", "ricci", "einstein"):
        code, rep = invoke(
            capsys,
            ["polar", "--quadric", files["quadric"], "--subspace", files["p"],
             "--emit", emit],
        )
        assert code == 0, emit
    assert rep["verdicts"]["is_einstein"] is True
    assert rep["outputs"]["constant"] == 1.0


def test_einstein_command(files, capsys):
    code, rep = invoke(
        capsys, ["einstein", "--quadric", files["quadric"], "--subspace", files["p"]]
    )
    assert code == 0
    assert rep["verdicts"]["is_einstein"] is True


def test_homogeneity_verdict_false_gives_exit_one(files, capsys):
    generic = random_lambda(np.random.default_rng(82), 1, 3)
    lam_file = files["write"](
        "generic.json", {"m": 1, "n": 3, "lambda": generic.lam.tolist()}
    )
    code, rep = invoke(capsys, ["check", "homogeneity", "--lambda", lam_file])
    assert code == 1
    assert rep["verdicts"]["is_homogeneous"] is False
    assert rep["residuals"]["is_homogeneous"] > 0


def test_homogeneity_verdict_true_for_polar_tensor(files, capsys):
    lam = -np.einsum("ab,ij->abij", np.eye(2), np.eye(2))
    lam_file = files["write"]("polar_lam.json", {"m": 1, "n": 3, "lambda": lam.tolist()})
    code, rep = invoke(capsys, ["check", "homogeneity", "--lambda", lam_file])
    assert code == 0
    assert rep["verdicts"]["is_homogeneous"] is True


def test_covariant_constancy_check(files, capsys):
    code, rep = invoke(
        capsys,
        ["check", "covariant-constancy", "--map", f"polar:{files['quadric']}",
         "--subspace", files["p"], "--direction", files["direction"],
         "--eps", "1e-4"],
    )
    assert code == 0
    assert rep["verdicts"]["is_covariantly_constant"] is True
    assert rep["residuals"]["is_covariantly_constant"] <= 1e-6


def test_project_unproject_roundtrip(files, capsys, tmp_path):
    pg = files["write"](
        "pg.json", {"n": 3, "points": [[1, 0, 0.25, 1.0], [0, 1, -0.5, 0.75]]}
    )
    code, rep = invoke(
        capsys, ["project", "--subspace", pg, "--normalizer", files["p_star"]]
    )
    assert code == 0
    np.testing.assert_allclose(
        np.array(rep["outputs"]["B"]), np.array([[0.25, -0.5], [1.0, 0.75]]), atol=1e-12
    )

    code, rep = invoke(
        capsys, ["unproject", "--chart", files["chart"], "--normalizer", files["p_star"]]
    )
    assert code == 0
    points = np.array(rep["outputs"]["p"]["points"])
    np.testing.assert_allclose(
        points, np.array([[1, 0, 0.25, 1.0], [0, 1, -0.5, 0.75]]), atol=1e-12
    )


def test_flatness_command(files, capsys):
    code, rep = invoke(capsys, ["flatness", "--m", "2", "--n", "5"])
    assert code == 0
    assert rep["verdicts"]["is_flat"] is True
    assert rep["residuals"]["lambda_rank"] == 0


def test_reports_are_byte_identical_across_runs(files, capsys):
    argv = ["polar", "--quadric", files["quadric"], "--subspace", files["p"],
            "--emit", "einstein"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    second = capsys.readouterr().out
    assert first == second and first.strip()


def test_error_paths_exit_two(files, capsys):
    assert run(["cross-ratio", "--pair-a", "missing.json", "--pair-b", files["pair_b"]]) == 2
    assert run(["no-such-command"]) == 2
    assert run([]) == 2
    bad = files["write"]("badq.json", {"n": 3, "matrix": np.zeros((4, 4)).tolist()})
    assert run(["polar", "--quadric", bad, "--subspace", files["p"]]) == 2
    capsys.readouterr()


def test_tangent_subspace_reported_as_error(files, capsys):
    cone = files["write"](
        "cone.json", {"n": 3, "matrix": np.diag([1.0, -1.0, 1.0, 1.0]).tolist()}
    )
    touching = files["write"](
        "tangent_p.json", {"n": 3, "points": [[1, 1, 0, 0], [0, 0, 1, 0]]}
    )
    assert run(["polar", "--quadric", cone, "--subspace", touching]) == 2
    capsys.readouterr()
