import json
import math
import subprocess
import sys

import pytest

from trisample.cli import main


@pytest.fixture
def paw_file(tmp_path):
    path = tmp_path / "paw.edges"
    path.write_text("0 1\n0 2\n1 2\n2 3\n")
    return str(path)


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.edges"
    path.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    return str(path)


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.edges"
    path.write_text("0 1\n0 2\n1 2\n")
    return str(path)


@pytest.fixture
def path3_file(tmp_path):
    path = tmp_path / "path3.edges"
    path.write_text("0 1\n1 2\n")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_exact_paw(capsys, paw_file):
    report = run_json(capsys, "exact", paw_file)
    assert report["command"] == "exact"
    assert report["result"]["triangles"] == 1
    assert report["input"] == {"path": paw_file, "n": 4, "m": 4}


def test_exact_k4_with_profile(capsys, k4_file):
    report = run_json(capsys, "exact", k4_file, "--profile")
    assert report["result"]["triangles"] == 4
    assert report["result"]["per_vertex"] == [3, 3, 3, 3]
    assert [row[2] for row in report["result"]["per_edge"]] == [2] * 6


def test_exact_empty_file_fails(capsys, tmp_path):
    empty = tmp_path / "empty.edges"
    empty.write_text("")
    code, out, err = run_cli(capsys, "exact", str(empty))
    assert code != 0
    assert out == ""
    assert "empty input" in err


def test_estimate_optimal_k4(capsys, k4_file):
    report = run_json(capsys, "estimate", k4_file, "--sampler", "optimal", "--samples", "3", "--seed", "7")
    result = report["result"]
    assert set(result) == {"estimate", "s", "sampler", "seed", "empirical_variance", "elapsed_ms"}
    assert result["estimate"] == 4.0
    assert result["s"] == 3
    assert result["seed"] == 7


def test_estimate_triangle_free_is_zero(capsys, path3_file):
    report = run_json(capsys, "estimate", path3_file, "--sampler", "edge-degree", "--samples", "100", "--seed", "1")
    assert report["result"]["estimate"] == 0.0


def test_estimate_paw_qopt_band(capsys, paw_file):
    report = run_json(
        capsys, "estimate", paw_file, "--sampler", "qopt-uniform", "--samples", "100000", "--seed", "1"
    )
    assert 0.97 <= report["result"]["estimate"] <= 1.03


def test_estimate_optimal_triangle_free_fails(capsys, path3_file):
    code, out, err = run_cli(capsys, "estimate", path3_file, "--sampler", "optimal", "--samples", "10")
    assert code != 0
    assert out == ""
    assert "undefined" in err


def test_variance_matches_analytics(capsys, paw_file, k3_file):
    report = run_json(capsys, "variance", paw_file, "--sampler", "qopt-degree")
    assert report["result"]["analytical_variance"] == pytest.approx(5 / 27, rel=1e-12)
    assert report["result"]["difference"] == pytest.approx(0.0, abs=1e-12)
    report = run_json(capsys, "variance", paw_file, "--sampler", "edge-uniform")
    assert report["result"]["analytical_variance"] == pytest.approx(5 / 9, rel=1e-12)
    report = run_json(capsys, "variance", k3_file, "--sampler", "edge-degree")
    assert report["result"]["analytical_variance"] == pytest.approx(0.0, abs=1e-12)


def test_plan_parameter_mode(capsys):
    report = run_json(
        capsys, "plan", "--epsilon", "0.1", "--c", "1", "--n", "1000", "--upper-bound", "2", "--bound", "vertex"
    )
    assert report["result"]["s"] == 2764
    report = run_json(
        capsys, "plan", "--epsilon", "0.2", "--c", "1", "--n", "1000", "--upper-bound", "2", "--bound", "vertex"
    )
    assert report["result"]["s"] == 691


def test_plan_from_file_labels_provenance(capsys, paw_file):
    report = run_json(capsys, "plan", paw_file, "--epsilon", "0.1", "--bound", "vertex")
    result = report["result"]
    assert result["upper_bound_source"] == "oracle-derived"
    assert result["average_source"] == "oracle-derived"
    assert result["upper_bound"] == 1.0
    assert result["average"] == 0.25
    assert result["s"] == math.ceil(2 * 1 * 4.0 * math.log(4) / 0.01)


def test_plan_epsilon_out_of_range_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["plan", "--epsilon", "1.5", "--n", "100", "--upper-bound", "2"])
    assert exc.value.code == 2


def test_plan_triangle_free_fails(capsys, path3_file):
    code, out, err = run_cli(capsys, "plan", path3_file, "--epsilon", "0.1")
    assert code != 0
    assert "triangle-free" in err


def test_stream_passes(capsys, paw_file, k3_file):
    report = run_json(capsys, "stream", paw_file, "--samples", "4", "--seed", "2", "--n", "4")
    assert report["result"]["passes_used"] == 2
    assert report["result"]["peak_state_bytes"] > 0
    report = run_json(capsys, "stream", paw_file, "--samples", "4", "--seed", "2")
    assert report["result"]["passes_used"] == 3
    report = run_json(capsys, "stream", k3_file, "--samples", "1", "--seed", "0")
    assert report["result"]["estimate"] == 1.0


def test_stream_matches_in_memory_estimate(capsys, paw_file):
    stream = run_json(capsys, "stream", paw_file, "--samples", "16", "--seed", "5")
    mem = run_json(capsys, "estimate", paw_file, "--sampler", "qopt-uniform", "--samples", "16", "--seed", "5")
    assert stream["result"]["estimate"] == mem["result"]["estimate"]


def test_stream_from_stdin_requires_n():
    proc = subprocess.run(
        [sys.executable, "-m", "trisample", "stream", "-", "--samples", "2"],
        input="0 1\n0 2\n1 2\n",
        capture_output=True,
        text=True,
    )
    assert proc.returncode != 0
    assert "--n" in proc.stderr


def test_stream_from_stdin_with_n():
    proc = subprocess.run(
        [sys.executable, "-m", "trisample", "stream", "-", "--samples", "4", "--n", "3", "--seed", "1"],
        input="0 1\n0 2\n1 2\n",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    report = json.loads(proc.stdout)
    assert report["result"]["estimate"] == 1.0  # every K3 vertex gives n*z/3 = 1
    assert report["result"]["passes_used"] == 2


def test_bench_error_shrinks_with_s(capsys, paw_file):
    report = run_json(
        capsys, "bench", paw_file, "--samplers", "qopt-uniform,edge-degree",
        "--samples", "10,100,1000", "--repetitions", "40", "--seed", "3",
    )
    rows = report["result"]["rows"]
    by_kind = {}
    for row in rows:
        by_kind.setdefault(row["sampler"], []).append((row["s"], row["mean_error"]))
    for kind, entries in by_kind.items():
        errors = [e for _s, e in sorted(entries)]
        assert errors[0] >= errors[1] >= errors[2], (kind, errors)


def test_bench_optimal_has_zero_error(capsys, k4_file):
    report = run_json(
        capsys, "bench", k4_file, "--samplers", "optimal", "--samples", "10,100", "--repetitions", "5"
    )
    for row in report["result"]["rows"]:
        assert row["mean_error"] == 0.0
        assert row["error_metric"] == "relative"


def test_bench_triangle_free_reports_absolute(capsys, path3_file):
    report = run_json(
        capsys, "bench", path3_file, "--samplers", "edge-uniform", "--samples", "10", "--repetitions", "5"
    )
    row = report["result"]["rows"][0]
    assert row["error_metric"] == "absolute"
    assert row["mean_error"] == 0.0


def test_json_reports_round_trip(capsys, paw_file):
    code, out, err = run_cli(capsys, "estimate", paw_file, "--sampler", "edge-uniform", "--samples", "50")
    assert code == 0
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


def test_tsv_format(capsys, paw_file):
    code, out, err = run_cli(capsys, "exact", paw_file, "--format", "tsv")
    assert code == 0
    lines = dict(line.split("\t", 1) for line in out.strip().splitlines())
    assert lines["result.triangles"] == "1"
    code, out, err = run_cli(
        capsys, "bench", paw_file, "--samplers", "optimal", "--samples", "10",
        "--repetitions", "3", "--format", "tsv",
    )
    header, *rows = out.strip().splitlines()
    assert header.split("\t")[0] == "sampler"
    assert len(rows) == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "trisample", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    for command in ("exact", "estimate", "variance", "plan", "stream", "bench"):
        assert command in proc.stdout
