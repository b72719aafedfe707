"""Command-line interface: formats, exit codes, determinism."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from zipfentropy import entropy_bounds, entropy_infinite, zeta, ZipfModel
from zipfentropy.cli import main


def run_cli(*argv):
    """Invoke in-process; returns (exit_code, argv) for capsys pairing."""
    return main(list(argv))


def run_proc(*argv):
    return subprocess.run(
        [sys.executable, "-m", "zipfentropy.cli", *argv],
        capture_output=True,
        text=True,
    )


class TestEntropyCommand:
    def test_uniform_point(self, capsys):
        assert run_cli("entropy", "--s", "0", "--n", "8") == 0
        record = json.loads(capsys.readouterr().out)
        assert record["exact"] == 3.0
        assert record["method"] == "exact-sum"

    def test_fallback_region_collapses(self, capsys):
        assert run_cli("entropy", "--s", "1", "--n", "3") == 0
        record = json.loads(capsys.readouterr().out)
        assert record["lower"] == record["upper"] == record["exact"]

    def test_emitted_fields_contain_exact(self, capsys):
        assert run_cli("entropy", "--s", "1.2", "--n", "10000") == 0
        record = json.loads(capsys.readouterr().out)
        assert record["lower"] <= record["exact"] <= record["upper"]
        np.testing.assert_allclose(record["gap"], record["upper"] - record["lower"], rtol=1e-9)

    def test_csv_format(self, capsys):
        assert run_cli("entropy", "--s", "1.5", "--n", "100", "--format", "csv") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "s,N,lower,upper,exact,gap,method"
        assert len(lines) == 2

    def test_twelve_digit_round_trip(self, capsys):
        """Parsing the emitted number back reproduces the library value."""
        run_cli("entropy", "--s", "1.3", "--n", "5000")
        record = json.loads(capsys.readouterr().out)
        b = entropy_bounds(ZipfModel(1.3, 5000))
        np.testing.assert_allclose(record["lower"], b.lower, rtol=1e-11)
        np.testing.assert_allclose(record["upper"], b.upper, rtol=1e-11)


class TestSurfaceCommand:
    def test_grid_rows_n_major(self, capsys):
        code = run_cli(
            "surface", "--s-min", "1", "--s-max", "2", "--s-step", "0.5",
            "--n-list", "10,1000",
        )
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "s,N,h_mid,h_gap"
        assert len(lines) == 7
        ns = [int(line.split(",")[1]) for line in lines[1:]]
        assert ns == [10, 10, 10, 1000, 1000, 1000]

    def test_single_cell(self, capsys):
        run_cli("surface", "--s-min", "1.5", "--s-max", "1.5", "--s-step", "1",
                "--n-list", "50")
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 2


class TestInfiniteCommand:
    def test_known_row_and_finite_column(self, capsys):
        code = run_cli(
            "infinite", "--s-min", "1.5", "--s-max", "2.5", "--s-step", "0.5",
            "--n", "1000",
        )
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "s,h_infinite,h_finite_1000"
        for line in lines[1:]:
            s, h_inf, h_fin = (float(x) for x in line.split(","))
            assert h_fin <= h_inf
            if s == 2.0:
                np.testing.assert_allclose(h_inf, entropy_infinite(2.0), rtol=1e-11)

    def test_first_row_dominates(self, capsys):
        """Divergence toward s=1 makes the smallest s the largest entropy."""
        run_cli("infinite", "--s-min", "1.05", "--s-max", "3", "--s-step", "0.05")
        rows = capsys.readouterr().out.splitlines()[1:]
        values = [float(r.split(",")[1]) for r in rows]
        assert values[0] == max(values)


class TestAnalyzeCommand:
    def test_three_token_summary(self, tmp_path, capsys):
        src = tmp_path / "tiny.txt"
        src.write_text("a a b\n", encoding="utf-8")
        assert run_cli("analyze", str(src)) == 0
        captured = capsys.readouterr()
        record = json.loads(captured.out)
        assert record["total_tokens"] == 3
        assert record["distinct_types"] == 2
        assert record["s_hat"] is None
        np.testing.assert_allclose(record["p_unseen"], 1 / 3, rtol=1e-11)
        assert "warning" in captured.err

    def test_table_side_output(self, tmp_path, capsys):
        src = tmp_path / "tiny.txt"
        src.write_text("a a b\n", encoding="utf-8")
        table_path = tmp_path / "table.csv"
        assert run_cli("analyze", str(src), "--table", str(table_path)) == 0
        capsys.readouterr()
        assert table_path.read_text(encoding="utf-8") == (
            "rank,type,count,probability\n"
            "1,a,2,0.666666666667\n"
            "2,b,1,0.333333333333\n"
        )

    def test_fit_on_synthetic_corpus(self, tmp_path, capsys):
        # rank names must be alphabetic: the tokenizer drops digits
        ranks = ZipfModel(1.2, 500).sample(50000, seed=3)
        names = {r: "w" + "".join("abcdefghij"[int(d)] for d in str(r)) for r in set(ranks)}
        src = tmp_path / "zipfy.txt"
        src.write_text(" ".join(names[r] for r in ranks), encoding="utf-8")
        assert run_cli("analyze", str(src), "--min-count", "3") == 0
        record = json.loads(capsys.readouterr().out)
        assert abs(record["s_hat"] - 1.2) < 0.1

    def test_empty_file_is_domain_error(self, tmp_path):
        src = tmp_path / "empty.txt"
        src.write_text("", encoding="utf-8")
        assert run_cli("analyze", str(src)) == 3

    def test_missing_file_is_io_error(self, tmp_path):
        assert run_cli("analyze", str(tmp_path / "nope.txt")) == 4


class TestCompareCommand:
    def test_identical_inputs(self, tmp_path, capsys):
        src = tmp_path / "same.txt"
        src.write_text("x y y z\n", encoding="utf-8")
        assert run_cli("compare", str(src), str(src)) == 0
        record = json.loads(capsys.readouterr().out)
        assert record["value"] == 0.0
        assert record["measure"] == "mean-squared-log-rank"
        assert record["shared_ranks"] == 3


class TestMonkeyCommand:
    def test_token_stream(self, capsys):
        assert run_cli("monkey", "--m", "2", "--q", "0.33", "--count", "5",
                       "--seed", "7") == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 5
        assert all(set(w) <= {"a", "b"} for w in lines)

    def test_oracle_table(self, capsys):
        assert run_cli("monkey", "--m", "1", "--q", "0.5", "--oracle",
                       "--max-word-length", "3") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "rank,word,probability"
        assert lines[1].startswith("1,a,0.571428571429")

    def test_rank_table(self, capsys):
        assert run_cli("monkey", "--m", "3", "--q", "0.25", "--count", "400",
                       "--seed", "2", "--rank-table") == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "rank,type,count,probability"
        counts = [int(line.split(",")[2]) for line in lines[1:]]
        assert counts == sorted(counts, reverse=True)


class TestZetaCommand:
    def test_values_and_bounds(self, capsys):
        assert run_cli("zeta", "--s", "2") == 0
        record = json.loads(capsys.readouterr().out)
        z = zeta(2.0)
        np.testing.assert_allclose(record["zeta"], math.pi**2 / 6, rtol=1e-11)
        np.testing.assert_allclose(record["zeta_prime"], -0.9375482543158438, rtol=1e-11)
        assert record["zeta_error_bound"] <= z.abs_error_bound * 1.01


class TestExitCodes:
    def test_usage_error_is_two(self):
        assert run_proc("entropy", "--s", "1.1").returncode == 2
        assert run_proc("no-such-command").returncode == 2

    def test_domain_error_is_three(self):
        proc = run_proc("zeta", "--s", "0.5")
        assert proc.returncode == 3
        assert "error" in proc.stderr

    def test_io_error_is_four(self):
        assert run_proc("analyze", "/definitely/not/here.txt").returncode == 4


class TestDeterminism:
    def test_surface_golden_reruns_identically(self):
        argv = ["surface", "--s-min", "1", "--s-max", "2", "--s-step", "0.5",
                "--n-list", "10,1000"]
        first = run_proc(*argv)
        second = run_proc(*argv)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout

    def test_monkey_golden_reruns_identically(self):
        argv = ["monkey", "--m", "3", "--q", "0.25", "--count", "1000",
                "--seed", "11", "--rank-table"]
        first = run_proc(*argv)
        second = run_proc(*argv)
        assert first.stdout == second.stdout != ""
