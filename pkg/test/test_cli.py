"""
Tests for the hermite-zeros command line: output layout, exit codes and determinism.
"""

import json
import math

import pytest

from cli.cli import run_cli
from logger.audit_logger import clear_events


@pytest.fixture(autouse=True)
def fresh_audit_log():
    clear_events()
    yield
    clear_events()


def _run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSolve:

    def test_zero_area(self, capsys):
        code, out, _ = _run(capsys, "solve", "--m", "0")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "M=0.0"
        assert lines[1] == "theta=0.0"
        assert lines[3] == "iterations=0"

    def test_quarter_turn(self, capsys):
        code, out, _ = _run(capsys, "solve", "--m", str(math.pi / 2))
        assert code == 0
        fields = dict(line.split("=", 1) for line in out.splitlines())
        assert float(fields["theta"]) == pytest.approx(0.8317, abs=1e-4)
        assert float(fields["residual"]) <= 1e-14

    @pytest.mark.parametrize("value", ["4", "-0.1", "nan", "abc"])
    def test_out_of_domain(self, capsys, value):
        code, _, err = _run(capsys, "solve", "--m", value)
        assert code == 2
        assert "usage" in err

    def test_iteration_limit_is_a_numerical_failure(self, capsys):
        code, out, err = _run(capsys, "solve", "--m", "2.0", "--max-iter", "1")
        assert code == 1
        assert out == ""
        assert "Numerical failure" in err


class TestZeros:

    def test_exact_degree_two(self, capsys):
        code, out, _ = _run(capsys, "zeros", "--n", "2", "--method", "exact")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,j,x"
        assert len(lines) == 3
        assert lines[1].startswith("2,1,-")
        assert float(lines[2].split(",")[2]) == pytest.approx(1 / math.sqrt(2), abs=1e-14)

    def test_asymptotic_header(self, capsys):
        code, out, _ = _run(capsys, "zeros", "--n", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,j,M,theta,x"
        assert lines[2] == "3,0,0.0,0.0,0.0"

    def test_json(self, capsys):
        code, out, _ = _run(capsys, "zeros", "--n", "4", "--method", "jacobi", "--format", "json")
        assert code == 0
        records = json.loads(out)
        assert [r["j"] for r in records] == [2, 1, 1, 2]

    def test_degree_zero_has_header_only(self, capsys):
        code, out, _ = _run(capsys, "zeros", "--n", "0")
        assert code == 0
        assert out == "n,j,M,theta,x\n"

    def test_negative_degree(self, capsys):
        code, _, _ = _run(capsys, "zeros", "--n", "-1")
        assert code == 2


class TestCompare:

    def test_full_table(self, capsys):
        code, out, _ = _run(capsys, "compare", "--n-min", "1", "--n-max", "50")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n,j,x_approx,x_exact,abs_err,rel_err"
        assert len(lines) == 1 + 650

    def test_byte_identical_across_runs(self, capsys):
        _, first, _ = _run(capsys, "compare", "--n-min", "1", "--n-max", "20", "--summary")
        _, second, _ = _run(capsys, "compare", "--n-min", "1", "--n-max", "20", "--summary")
        assert first == second
        assert "# summary" in first

    def test_parity(self, capsys):
        code, out, _ = _run(capsys, "compare", "--n-min", "1", "--n-max", "50", "--parity", "even")
        assert code == 0
        assert len(out.splitlines()) == 1 + 325

    def test_writes_file_atomically(self, capsys, tmp_path):
        target = tmp_path / "tables" / "cmp.csv"
        code, out, _ = _run(capsys, "compare", "--n-min", "1", "--n-max", "6", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("n,j,x_approx")
        assert [p.name for p in target.parent.iterdir()] == ["cmp.csv"]

    def test_json_output(self, capsys):
        code, out, _ = _run(capsys, "compare", "--n-min", "3", "--n-max", "3", "--format", "json")
        assert code == 0
        assert json.loads(out)[0]["rel_err"] is None

    def test_reversed_range(self, capsys):
        code, _, err = _run(capsys, "compare", "--n-min", "5", "--n-max", "2")
        assert code == 2
        assert "--n-min" in err

    def test_summary_needs_csv(self, capsys):
        code, _, _ = _run(capsys, "compare", "--n-min", "1", "--n-max", "2", "--format", "json", "--summary")
        assert code == 2


class TestQuad:

    def test_fourth_moment(self, capsys):
        code, out, _ = _run(capsys, "quad", "--n", "5", "--integrand", "monomial", "--param", "4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# rule n=5 source=exact_nodes"
        assert lines[1] == "node,weight"
        assert len(lines) == 2 + 5 + 5
        fields = dict(line.split("=", 1) for line in lines[7:])
        assert fields["integrand"] == "x^4"
        assert float(fields["result"]) == pytest.approx(1.3293404, abs=1e-7)

    def test_odd_monomial_leaves_rel_err_empty(self, capsys):
        code, out, _ = _run(capsys, "quad", "--n", "3", "--integrand", "monomial", "--param", "1")
        assert code == 0
        assert out.splitlines()[-1] == "rel_err="

    def test_asymptotic_nodes(self, capsys):
        code, out, _ = _run(capsys, "quad", "--n", "4", "--nodes", "asymptotic", "--integrand", "cos", "--param", "1")
        assert code == 0
        assert "source=asymptotic_nodes" in out

    def test_underflowed_rule_is_a_numerical_failure(self, capsys):
        code, out, err = _run(capsys, "quad", "--n", "600", "--integrand", "monomial", "--param", "0")
        assert code == 1
        assert out == ""
        assert "Numerical failure" in err

    def test_fractional_monomial(self, capsys):
        code, _, _ = _run(capsys, "quad", "--n", "3", "--integrand", "monomial", "--param", "1.5")
        assert code == 2


class TestSpin:

    def test_spin_half(self, capsys):
        code, out, _ = _run(capsys, "spin", "--s", "1/2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "S=1/2"
        assert lines[1] == "n=1"
        assert float(lines[2].split("=")[1]) == pytest.approx(math.sqrt(3), rel=1e-15)
        assert lines[3] == "boundaries=0.0"

    def test_json(self, capsys):
        code, out, _ = _run(capsys, "spin", "--s", "1.5", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["S"] == "3/2"
        assert len(data["boundaries"]) == 3

    @pytest.mark.parametrize("spin", ["1/3", "0", "-1", "x"])
    def test_invalid_spin(self, capsys, spin):
        code, _, _ = _run(capsys, "spin", "--s", spin)
        assert code == 2


class TestParser:

    @pytest.mark.parametrize("command", ["solve", "zeros", "compare", "quad", "spin"])
    def test_help(self, capsys, command):
        code, out, _ = _run(capsys, command, "--help")
        assert code == 0
        assert "usage" in out

    def test_unknown_flag(self, capsys):
        code, _, _ = _run(capsys, "zeros", "--n", "3", "--bogus")
        assert code == 2

    def test_missing_subcommand(self, capsys):
        code, _, _ = _run(capsys)
        assert code == 2


class TestAudit:

    def test_audit_trail_on_stderr(self, capsys):
        code, _, err = _run(capsys, "zeros", "--n", "2", "--audit")
        assert code == 0
        assert "== Audit Log ==" in err
        assert "component=zeros" in err
        assert "outcome=ok" in err

    def test_audit_records_failures(self, capsys):
        code, _, err = _run(capsys, "solve", "--m", "2.0", "--max-iter", "1", "--audit")
        assert code == 1
        assert "outcome=numerical_failure" in err
