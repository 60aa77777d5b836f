"""End-to-end command-line behaviour: files, exit codes, reproducibility."""

import json

import numpy as np
import pytest

from lapnear import EdgeSet, write_edges, write_matrix_csv
from lapnear.cli import main


@pytest.fixture()
def demo_files(tmp_path):
    write_matrix_csv(np.array([[1.0, -2.0], [3.0, -4.0]]), tmp_path / "A.csv")
    write_edges(EdgeSet.complete(2), tmp_path / "E.txt")
    return tmp_path


class TestProjectCommand:
    def test_worked_demo(self, demo_files, capsys):
        out = demo_files / "L.csv"
        report = demo_files / "report.json"
        code = main(
            [
                "project",
                "--matrix", str(demo_files / "A.csv"),
                "--edges", str(demo_files / "E.txt"),
                "--out", str(out),
                "--report", str(report),
            ]
        )
        assert code == 0
        assert out.read_text() == "2,-2\n0,0\n"
        data = json.loads(report.read_text())
        assert data["objective"] == 8.0
        assert data["relaxed_objective"] == 7.0
        assert data["alpha"] == [-1.0, 0.0]
        assert data["check"]["is_valid"] is True
        assert data["inputs"]["matrix"]["sha256"]

    def test_valid_laplacian_round_trips_identically(self, tmp_path):
        src = tmp_path / "L.csv"
        write_matrix_csv(np.array([[2.0, -2.0], [-1.0, 1.0]]), src)
        write_edges(EdgeSet.complete(2), tmp_path / "E.txt")
        out = tmp_path / "out.csv"
        code = main(
            ["project", "--matrix", str(src), "--edges", str(tmp_path / "E.txt"),
             "--out", str(out)]
        )
        assert code == 0
        assert out.read_bytes() == src.read_bytes()

    def test_dimension_mismatch_is_semantic_error(self, tmp_path):
        write_matrix_csv(np.zeros((3, 3)), tmp_path / "A.csv")
        write_edges(EdgeSet(6, frozenset({(0, 5)})), tmp_path / "E.txt")
        out = tmp_path / "L.csv"
        code = main(
            ["project", "--matrix", str(tmp_path / "A.csv"),
             "--edges", str(tmp_path / "E.txt"), "--out", str(out)]
        )
        assert code == 1
        assert not out.exists(), "no partial artifacts on validation failure"

    def test_malformed_matrix_is_parse_error(self, tmp_path, capsys):
        (tmp_path / "A.csv").write_text("1,2\n3\n")
        write_edges(EdgeSet.complete(2), tmp_path / "E.txt")
        out = tmp_path / "L.csv"
        code = main(
            ["project", "--matrix", str(tmp_path / "A.csv"),
             "--edges", str(tmp_path / "E.txt"), "--out", str(out)]
        )
        assert code == 2
        assert "line 2" in capsys.readouterr().err
        assert not out.exists()

    def test_missing_file_is_parse_error(self, tmp_path):
        write_edges(EdgeSet.complete(2), tmp_path / "E.txt")
        code = main(
            ["project", "--matrix", str(tmp_path / "missing.csv"),
             "--edges", str(tmp_path / "E.txt"), "--out", str(tmp_path / "L.csv")]
        )
        assert code == 2

    def test_rerun_byte_identical(self, demo_files):
        args = [
            "project",
            "--matrix", str(demo_files / "A.csv"),
            "--edges", str(demo_files / "E.txt"),
        ]
        main(args + ["--out", str(demo_files / "L1.csv")])
        main(args + ["--out", str(demo_files / "L2.csv")])
        assert (demo_files / "L1.csv").read_bytes() == (demo_files / "L2.csv").read_bytes()


class TestOracleCommand:
    def test_prints_optimum(self, demo_files, capsys):
        code = main(
            ["oracle", "--matrix", str(demo_files / "A.csv"),
             "--edges", str(demo_files / "E.txt")]
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "optimum 8"

    def test_matches_project_report(self, demo_files, capsys):
        main(
            ["project", "--matrix", str(demo_files / "A.csv"),
             "--edges", str(demo_files / "E.txt"),
             "--out", str(demo_files / "L.csv"),
             "--report", str(demo_files / "r.json")]
        )
        main(
            ["oracle", "--matrix", str(demo_files / "A.csv"),
             "--edges", str(demo_files / "E.txt")]
        )
        printed = float(capsys.readouterr().out.split()[-1])
        reported = json.loads((demo_files / "r.json").read_text())["objective"]
        assert printed == reported

    def test_cap_is_semantic_error(self, tmp_path):
        write_matrix_csv(np.zeros((31, 31)), tmp_path / "A.csv")
        write_edges(EdgeSet.complete(31), tmp_path / "E.txt")
        code = main(
            ["oracle", "--matrix", str(tmp_path / "A.csv"),
             "--edges", str(tmp_path / "E.txt")]
        )
        assert code == 1

    def test_iteration_limit_is_numerical_error(self, demo_files):
        code = main(
            ["oracle", "--matrix", str(demo_files / "A.csv"),
             "--edges", str(demo_files / "E.txt"), "--max-iters", "1"]
        )
        assert code == 3


class TestGenerateCommand:
    def test_zero_noise_pair_identical(self, tmp_path):
        out = tmp_path / "inst"
        code = main(
            ["generate", "--n", "6", "--k", "2", "--beta", "0", "--s", "0",
             "--seed", "1", "--out-dir", str(out)]
        )
        assert code == 0
        assert (out / "A.csv").read_bytes() == (out / "Lstar.csv").read_bytes()
        params = json.loads((out / "params.json").read_text())
        assert params == {"n": 6, "k": 2, "beta": 0.0, "s": 0.0, "seed": 1}

    def test_rerun_byte_identical(self, tmp_path):
        args = ["generate", "--n", "12", "--k", "4", "--beta", "0.3", "--s", "1.5",
                "--seed", "99"]
        main(args + ["--out-dir", str(tmp_path / "a")])
        main(args + ["--out-dir", str(tmp_path / "b")])
        for name in ("A.csv", "Lstar.csv", "edges.txt", "params.json"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_bad_params_no_dir(self, tmp_path):
        out = tmp_path / "inst"
        code = main(
            ["generate", "--n", "6", "--k", "3", "--beta", "0", "--s", "0",
             "--seed", "1", "--out-dir", str(out)]
        )
        assert code == 1
        assert not out.exists()

    def test_seed_required(self, tmp_path, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["generate", "--n", "6", "--k", "2", "--beta", "0", "--s", "0",
                  "--out-dir", str(tmp_path / "x")])
        assert exc.value.code == 2


class TestSpectraCommand:
    def test_csv_output(self, tmp_path):
        write_matrix_csv(np.array([[1.0, -1.0], [-1.0, 1.0]]), tmp_path / "M.csv")
        out = tmp_path / "spec.csv"
        code = main(["spectra", "--matrix", str(tmp_path / "M.csv"), "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "re,im"
        assert len(lines) == 3
        values = sorted(float(line.split(",")[0]) for line in lines[1:])
        assert values == pytest.approx([0.0, 2.0], abs=1e-12)

    def test_rerun_byte_identical(self, tmp_path):
        write_matrix_csv(np.array([[1.0, -1.0], [-2.0, 3.0]]), tmp_path / "M.csv")
        main(["spectra", "--matrix", str(tmp_path / "M.csv"), "--out", str(tmp_path / "a.csv")])
        main(["spectra", "--matrix", str(tmp_path / "M.csv"), "--out", str(tmp_path / "b.csv")])
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


class TestExperimentCommand:
    def test_scaled_sweep(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = main(
            ["experiment", "table2", "--n", "24", "--k", "4", "--beta", "0.3",
             "--trials", "4", "--s-list", "0.5,2", "--seed", "7", "--out", str(out)]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "s,trials,ave,var"
        assert len(lines) == 3
        first = lines[1].split(",")
        assert first[0] == "0.5" and first[1] == "4"

    def test_workers_do_not_change_bytes(self, tmp_path):
        base = ["experiment", "table2", "--n", "24", "--k", "4", "--beta", "0.3",
                "--trials", "6", "--s-list", "1,3", "--seed", "11"]
        main(base + ["--out", str(tmp_path / "w1.csv"), "--workers", "1"])
        main(base + ["--out", str(tmp_path / "w8.csv"), "--workers", "8"])
        assert (tmp_path / "w1.csv").read_bytes() == (tmp_path / "w8.csv").read_bytes()


class TestBenchCommand:
    def test_csv_schema(self, tmp_path):
        out = tmp_path / "bench.csv"
        code = main(["bench", "--sizes", "60,90", "--repeats", "3", "--seed", "5",
                     "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,repeats,median_seconds,min_seconds"
        assert len(lines) == 3
        n, repeats, med, mn = lines[1].split(",")
        assert (n, repeats) == ("60", "3")
        assert 0.0 < float(mn) <= float(med)

    def test_bad_sizes_leave_no_file(self, tmp_path):
        out = tmp_path / "bench.csv"
        code = main(["bench", "--sizes", "90,60", "--repeats", "3", "--seed", "5",
                     "--out", str(out)])
        assert code == 1
        assert not out.exists()
