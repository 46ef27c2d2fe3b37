"""Tests for the command-line frontend."""

import json

import pytest
from typer.testing import CliRunner

from parity_sumsets.cli import app
from parity_sumsets.const import (
    EXIT_BUDGET,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_OVERFLOW,
)
from parity_sumsets.theorem import read_certificate


@pytest.fixture(name="runner")
def _runner():
    """CLI runner."""
    return CliRunner()


class TestSetCommands:
    """Test oplus, delta and nabla."""

    def test_oplus(self, runner):
        """Test {1,2} ⊕ {1,2}."""
        result = runner.invoke(app, ["oplus", "1,2", "1,2"])
        assert result.exit_code == EXIT_OK
        assert result.stdout.strip() == "2,4 (size 2)"

    def test_oracle_does_not_change_output(self, runner):
        """Test --oracle only adds a check."""
        plain = runner.invoke(app, ["oplus", "1,2,3,4,5", "0,1"])
        checked = runner.invoke(app, ["oplus", "1,2,3,4,5", "0,1", "--oracle"])
        assert checked.exit_code == EXIT_OK
        assert checked.stdout == plain.stdout == "1,6 (size 2)\n"

    def test_oplus_json(self, runner):
        """Test JSON output."""
        result = runner.invoke(app, ["oplus", "1,2", "1,2", "--format", "json"])
        assert json.loads(result.stdout) == {"set": [2, 4], "size": 2}

    def test_delta_empty(self, runner):
        """Test an empty result renders as {}."""
        result = runner.invoke(app, ["delta", "1,2", "1,2"])
        assert result.stdout.strip() == "{} (size 0)"

    def test_nabla(self, runner):
        """Test {1,2,3} ∇ {1,2,3}."""
        result = runner.invoke(app, ["nabla", "1,2,3", "1,2,3", "--oracle"])
        assert result.stdout.strip() == "1,4,9 (size 3)"

    def test_nabla_zero(self, runner):
        """Test zero is an input error."""
        result = runner.invoke(app, ["nabla", "0,1", "1"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_parse_error(self, runner):
        """Test a malformed set literal."""
        result = runner.invoke(app, ["oplus", "1,a"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_csv_refused(self, runner):
        """Test CSV output outside the scan."""
        result = runner.invoke(app, ["oplus", "1", "--format", "csv"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_overflow(self, runner):
        """Test a sum beyond the 64-bit range."""
        result = runner.invoke(app, ["oplus", str(2**64 - 1), "1"])
        assert result.exit_code == EXIT_OVERFLOW


class TestVerify:
    """Test verify."""

    def test_pass(self, runner):
        """Test n=3, a=(1,2)."""
        result = runner.invoke(app, ["verify", "-n", "3", "-a", "1,2"])
        assert result.exit_code == EXIT_OK
        assert result.stdout.strip() == "size=5 n=3 PASS"

    def test_theorem2(self, runner):
        """Test n=2, a=(1), V={0,1,2}."""
        result = runner.invoke(
            app, ["verify", "-n", "2", "-a", "1", "-V", "0,1,2", "--oracle"]
        )
        assert result.exit_code == EXIT_OK
        assert result.stdout.strip() == "size=2 n=2 PASS"

    def test_even_v(self, runner):
        """Test even |V| is an input error."""
        result = runner.invoke(app, ["verify", "-n", "2", "-a", "1", "-V", "0,1"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_explore_even(self, runner):
        """Test even |V| with --explore-even."""
        result = runner.invoke(
            app, ["verify", "-n", "2", "-a", "1", "-V", "0,1", "--explore-even"]
        )
        assert result.exit_code == EXIT_OK
        assert result.stdout.strip().endswith("UNCLAIMED")

    def test_json(self, runner):
        """Test the JSON report."""
        result = runner.invoke(
            app, ["verify", "-n", "2", "-a", "1,1", "--format", "json"]
        )
        assert json.loads(result.stdout) == {
            "theorem": 1,
            "size": 2,
            "n": 2,
            "pass": True,
            "claimed": True,
        }

    def test_bad_a_list(self, runner):
        """Test a malformed a-list."""
        result = runner.invoke(app, ["verify", "-n", "2", "-a", "1,b"])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestCertify:
    """Test certify and residue-counts."""

    def test_certify_to_file(self, runner, tmp_path):
        """Test writing and re-auditing a certificate."""
        path = tmp_path / "cert.json"
        result = runner.invoke(
            app, ["certify", "-n", "3", "-a", "1,2", "--out", str(path)]
        )
        assert result.exit_code == EXIT_OK
        assert result.stdout.strip() == "alpha=0 t=3 classes=3 total=5 audit OK"
        assert read_certificate(path).total == 5

    def test_certify_to_stdout(self, runner):
        """Test the certificate goes to stdout without --out."""
        result = runner.invoke(app, ["certify", "-n", "4", "-a", "2,6"])
        assert result.exit_code == EXIT_OK
        assert '"alpha": 2' in result.stdout
        assert "audit OK" in result.stdout

    def test_residue_counts(self, runner):
        """Test F for n=3, a=(1,2)."""
        result = runner.invoke(app, ["residue-counts", "-n", "3", "-a", "1,2"])
        assert result.exit_code == EXIT_OK
        assert result.stdout.strip() == "g=1 t=3 F=3,3,3 expected=3 CONSTANT"

    def test_residue_counts_normalizes(self, runner):
        """Test the gcd is divided out first."""
        result = runner.invoke(
            app, ["residue-counts", "-n", "9", "-a", "2,2,2", "--format", "json"]
        )
        data = json.loads(result.stdout)
        assert data["g"] == 2
        assert data["F"] == [81] * 9


class TestPilzScan:
    """Test pilz-scan."""

    def test_csv(self, runner):
        """Test records and summary on stdout."""
        result = runner.invoke(app, ["pilz-scan", "-n", "2", "-u", "3", "-s", "3"])
        assert result.exit_code == EXIT_OK
        lines = result.stdout.splitlines()
        assert lines[0] == "n,set,delta_size,pass"
        assert lines[1] == "2,1,2,true"
        assert lines[2] == '2,"1,2",2,true'
        summary = json.loads("\n".join(lines[8:]))
        assert summary["min_size"] == 2
        assert summary["violations"] == []
        assert summary["lower_bound_log"] == "e"

    def test_out_file(self, runner, tmp_path):
        """Test records written to a file are byte-stable."""
        first = tmp_path / "first.csv"
        second = tmp_path / "second.csv"
        args = ["pilz-scan", "-n", "4", "-u", "6", "-s", "3"]
        runner.invoke(app, [*args, "--out", str(first)])
        runner.invoke(app, [*args, "--out", str(second), "--workers", "2"])
        assert first.read_bytes() == second.read_bytes()
        assert first.read_text().startswith("n,set,delta_size,pass\n")

    def test_json(self, runner):
        """Test JSON output."""
        result = runner.invoke(
            app, ["pilz-scan", "-n", "1", "-u", "2", "-s", "2", "--format", "json"]
        )
        data = json.loads(result.stdout)
        assert [_["set"] for _ in data["records"]] == ["1", "1,2", "2"]
        assert data["summary"]["argmin"] == ["1", "2"]

    def test_budget(self, runner):
        """Test the budget exit code."""
        result = runner.invoke(
            app, ["pilz-scan", "-n", "3", "-u", "10", "-s", "10", "--budget", "10"]
        )
        assert result.exit_code == EXIT_BUDGET


class TestOtherCommands:
    """Test cube-check, bench and sweep."""

    def test_cube_set(self, runner):
        """Test one explicit set."""
        result = runner.invoke(app, ["cube-check", "-r", "1", "--set", "(0),(1)"])
        assert result.exit_code == EXIT_OK
        assert "min_size=2" in result.stdout
        assert result.stdout.strip().endswith("PASS")

    def test_cube_trials(self, runner):
        """Test seeded random trials."""
        result = runner.invoke(
            app, ["cube-check", "-r", "2", "--trials", "50", "--seed", "3"]
        )
        assert result.exit_code == EXIT_OK
        assert "trials=50" in result.stdout

    def test_bench(self, runner):
        """Test a small timed run with the cross-check."""
        result = runner.invoke(app, ["bench", "-d", "256", "-r", "1", "--check"])
        assert result.exit_code == EXIT_OK
        assert "degree=256" in result.stdout
        assert "check OK" in result.stdout

    def test_bench_zero_degree(self, runner):
        """Test degree 0 is an input error."""
        result = runner.invoke(app, ["bench", "-d", "0"])
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_sweep(self, runner):
        """Test a small sweep."""
        result = runner.invoke(
            app, ["sweep", "--n-max", "3", "--k-max", "2", "--a-max", "3"]
        )
        assert result.exit_code == EXIT_OK
        assert result.stdout.strip() == "checked=27 failures=0 mismatches=0 PASS"

    def test_verbose(self, runner):
        """Test the global flag is accepted."""
        result = runner.invoke(app, ["--verbose", "verify", "-n", "1", "-a", "1"])
        assert result.exit_code == EXIT_OK
