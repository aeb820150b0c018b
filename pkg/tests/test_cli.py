"""
Tests for the command-line front end.
"""

import json

import pytest

from cli import dispatch
from components.rendering import render_json
from models.output import OutputSpec
from storage.report_store import read_json_report


def run(capsys, *argv):
    status = dispatch(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestExamples:
    """Test the documented invocations"""

    def test_bernoulli_anchor(self, capsys):
        """Test that bernoulli-n prints 25550"""
        status, out, _ = run(capsys, "bernoulli-n", "--theta", "3/5", "--eps", "1/50", "--odds", "1000")
        assert status == 0
        assert "25550" in out

    def test_runs_json(self, capsys):
        """Test runs --format json"""
        status, out, _ = run(capsys, "runs", "--n", "3", "--r", "2", "--theta", "1/2", "--format", "json")
        assert status == 0
        document = json.loads(out)
        assert set(document) == {"command", "inputs", "result", "mode"}
        assert document["command"] == "runs"
        assert document["mode"] == "exact"
        assert document["result"]["prob"] == "3/8"

    def test_bayes_interval_exact(self, capsys):
        """Test bayes-interval --exact prints 3/4"""
        status, out, _ = run(capsys, "bayes-interval", "--p", "1", "--q", "0", "--l1", "1/2", "--l2", "1", "--exact")
        assert status == 0
        assert "3/4" in out

    def test_decimal_input(self, capsys):
        """Test that decimal strings are read as rationals"""
        status, out, _ = run(capsys, "bernoulli-n", "--theta", "0.6", "--eps", "0.02", "--format", "csv")
        assert status == 0
        assert "25550" in out


class TestFormats:
    """Test table, CSV and JSON rendering"""

    def test_json_round_trip(self, capsys):
        """Test that re-rendering parsed JSON reproduces it"""
        status, out, _ = run(capsys, "direct-prob", "--n-grid", "10,100", "--theta", "3/5",
                             "--eps", "1/10", "--format", "json", "--precision", "9")
        assert status == 0
        spec = OutputSpec(format="json", precision=9)
        assert render_json(json.loads(out), spec) == out.rstrip("\n")

    def test_json_round_trip_exact(self, capsys):
        """Test the round trip with rational output"""
        status, out, _ = run(capsys, "demoivre", "--n", "50", "--theta", "1/2", "--eps", "1/10",
                             "--format", "json", "--exact")
        assert status == 0
        spec = OutputSpec(format="json", exact_flag=True)
        assert render_json(json.loads(out), spec) == out.rstrip("\n")

    def test_infinite_relative_error_is_valid_json(self, capsys):
        """Test demoivre JSON when the exact probability is zero"""
        status, out, _ = run(capsys, "demoivre", "--n", "1", "--theta", "1/2", "--eps", "1/2",
                             "--no-correction", "--format", "json")
        assert status == 0
        assert "Infinity" not in out
        document = json.loads(out, parse_constant=lambda name: pytest.fail(f"non-standard constant {name}"))
        assert document["result"]["rel_error"] == "inf"

    def test_csv_header(self, capsys):
        """Test the fixed CSV columns"""
        status, out, _ = run(capsys, "direct-prob", "--n", "10", "--theta", "1/2", "--eps", "1/10",
                             "--format", "csv", "--exact")
        assert status == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,theta,eps,k_lo,k_hi,prob"
        assert lines[1] == "10,1/2,1/10,5,5,63/256"

    def test_exact_strings_in_lowest_terms(self, capsys):
        """Test num/den output under --exact"""
        status, out, _ = run(capsys, "middle-term", "--n", "4", "--format", "json", "--exact")
        assert status == 0
        assert json.loads(out)["result"]["exact"] == "3/8"

    def test_stirling_terms_json(self, capsys):
        """Test the series summary fields"""
        status, out, _ = run(capsys, "stirling-terms", "--n", "2", "--k-max", "20", "--format", "json")
        assert status == 0
        result = json.loads(out)["result"]
        assert result["terms"][0]["term"] == "1/24"
        assert result["diverges_after"] is not None
        implied = [row["implied_log_sqrt_two_pi"] for row in result["terms"]]
        best = result["min_abs_index"] - 1
        assert abs(implied[best] - result["log_sqrt_two_pi"]) < abs(implied[-1] - result["log_sqrt_two_pi"])

    def test_search_with_hoeffding(self, capsys):
        """Test the optional non-historical column"""
        status, out, _ = run(capsys, "search-n", "--theta", "1/2", "--eps", "1/10", "--target", "95/100",
                             "--hoeffding", "--format", "csv")
        assert status == 0
        assert out.splitlines()[0].endswith("hoeffding_n_nonhistorical")

    def test_trichotomy_json(self, capsys):
        """Test the report envelope"""
        status, out, _ = run(capsys, "trichotomy", "--p", "6", "--q", "4", "--eps", "1/10", "--format", "json")
        assert status == 0
        result = json.loads(out)["result"]
        assert result["direct_answer"] is None
        assert result["inverse_use_answer"]["estimate"] == "3/5"

    def test_out_file(self, capsys, tmp_path):
        """Test --out writes the rendered report"""
        path = tmp_path / "reports" / "runs.json"
        status, out, _ = run(capsys, "runs", "--n", "3", "--r", "2", "--format", "json", "--out", str(path))
        assert status == 0
        assert out == ""
        assert read_json_report(str(path))["result"]["prob"] == "3/8"


class TestExitCodes:
    """Test usage and domain errors"""

    def test_unknown_subcommand(self, capsys):
        """Test exit status 2 for an unknown subcommand"""
        status, _, err = run(capsys, "frobnicate")
        assert status == 2

    def test_malformed_rational(self, capsys):
        """Test exit status 2 and the subcommand help"""
        status, _, err = run(capsys, "runs", "--n", "3", "--r", "2", "--theta", "1/x")
        assert status == 2
        assert "usage:" in err
        assert "--theta" in err

    def test_precision_out_of_range(self, capsys):
        """Test --precision outside [1, 30]"""
        status, _, _ = run(capsys, "runs", "--n", "3", "--r", "2", "--precision", "31")
        assert status == 2

    def test_domain_error(self, capsys):
        """Test exit status 1 when r > n"""
        status, _, err = run(capsys, "runs", "--n", "2", "--r", "3")
        assert status == 1
        assert "error" in err

    def test_exact_unsupported(self, capsys):
        """Test exit status 1 when Exact mode is unavailable"""
        status, _, _ = run(capsys, "bayes-interval", "--p", "61", "--q", "0", "--exact")
        assert status == 1

    def test_odd_middle_term(self, capsys):
        """Test exit status 1 for odd n"""
        status, _, _ = run(capsys, "middle-term", "--n", "5")
        assert status == 1

    def test_not_found(self, capsys):
        """Test exit status 1 when the search limit is too small"""
        status, _, err = run(capsys, "search-n", "--theta", "1/2", "--eps", "1/100", "--n-max", "20")
        assert status == 1
        assert "best" in err

    @pytest.mark.parametrize("argv", [
        ["direct-prob", "--theta", "1/2", "--eps", "1/10"],
        ["bernoulli-n", "--theta", "3/5"],
    ])
    def test_missing_required(self, capsys, argv):
        """Test exit status 2 for missing arguments"""
        status, _, _ = run(capsys, *argv)
        assert status == 2
