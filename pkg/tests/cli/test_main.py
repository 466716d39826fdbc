"""Tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from src.cli.main import cli
from src.graph.io import (
    parse_instance,
    parse_vertex_weighted,
    serialize_instance,
    serialize_solution,
)
from src.structure.counterexample import build_counterexample, counterexample_solution

TWO_CYCLE = "scss 2 2 1 1\ns 0\nt 1\ne 0 1 2\ne 1 0 3\n"
ONE_WAY = "scss 2 1 1 1\ns 0\nt 1\ne 0 1 2\n"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def files(tmp_path):
    """Write instance text to tmp_path and return the path."""

    def write(name: str, text: str):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


class TestSolveCommand:
    """Test suite for `scss solve`."""

    def test_solve(self, runner, files):
        """Test the human-readable optimum."""
        result = runner.invoke(cli, ["solve", files("a.scss", TWO_CYCLE)])

        assert result.exit_code == 0
        assert "Cost: 5" in result.output
        assert "forward[0]: 0 1" in result.output

    def test_solve_json(self, runner, files):
        """Test the JSON outcome for one file."""
        result = runner.invoke(cli, ["solve", "--json", files("a.scss", TWO_CYCLE)])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["status"] == "solved"
        assert data["cost"] == 5

    def test_demand_shape(self, runner, files):
        """Test that k2 > 1 is a usage error."""
        path = files("a.scss", TWO_CYCLE.replace("scss 2 2 1 1", "scss 2 2 1 2"))
        result = runner.invoke(cli, ["solve", path])
        assert result.exit_code == 2

    def test_infeasible(self, runner, files):
        """Test exit code 3 for an infeasible instance."""
        result = runner.invoke(cli, ["solve", files("a.scss", ONE_WAY)])
        assert result.exit_code == 3

    def test_parse_error(self, runner, files):
        """Test exit code 2 for malformed input."""
        result = runner.invoke(cli, ["solve", files("a.scss", "scss 2 1 1\n")])

        assert result.exit_code == 2
        assert "Malformed" in result.output

    def test_batch_takes_worst_status(self, runner, files):
        """Test that a batch exits with the largest status code."""
        good = files("good.scss", TWO_CYCLE)
        bad = files("bad.scss", ONE_WAY)
        result = runner.invoke(cli, ["solve", good, bad])

        assert result.exit_code == 3
        assert "solved" in result.output

    def test_batch_with_workers(self, runner, files):
        """Test that --jobs gives the same answers."""
        paths = [files(f"{i}.scss", TWO_CYCLE) for i in range(3)]
        result = runner.invoke(cli, ["solve", "--jobs", "2", *paths])

        assert result.exit_code == 0
        assert result.output.count("solved") == 3

    def test_time_budget_from_env(self, runner, files):
        """Test that an invalid budget in the environment is a usage error."""
        result = runner.invoke(
            cli,
            ["solve", files("a.scss", TWO_CYCLE)],
            env={"SCSS_TIME_BUDGET_SECS": "-1"},
        )
        assert result.exit_code == 2


class TestOracleCommand:
    """Test suite for `scss oracle`."""

    def test_oracle(self, runner, files):
        """Test the oracle optimum of the fixture."""
        path = files("fx.scss", serialize_instance(build_counterexample()))
        result = runner.invoke(cli, ["oracle", "--json", path])

        assert result.exit_code == 0
        assert json.loads(result.output)["cost"] == 22

    def test_path_limit(self, runner, files):
        """Test exit code 4 when the path cap is hit."""
        path = files("fx.scss", serialize_instance(build_counterexample()))
        result = runner.invoke(cli, ["oracle", "--max-paths", "1", path])
        assert result.exit_code == 4

    def test_enumerate(self, runner, files):
        """Test the optima summary."""
        result = runner.invoke(cli, ["oracle", "--enumerate", files("a.scss", TWO_CYCLE)])

        assert result.exit_code == 0
        assert "1 optimal solutions of cost 5" in result.output


class TestVerifyCommand:
    """Test suite for `scss verify`."""

    def test_ok(self, runner, files):
        """Test a valid solution file."""
        instance = files("a.scss", TWO_CYCLE)
        solution = files("a.sol", "cost 5\nforward[0]: 0 1\nbackward[0]: 1 0\n")
        result = runner.invoke(cli, ["verify", instance, solution])

        assert result.exit_code == 0
        assert "OK cost 5" in result.output

    def test_cost_mismatch(self, runner, files):
        """Test exit code 5 for a wrong claimed cost."""
        instance = files("a.scss", TWO_CYCLE)
        solution = files("a.sol", "cost 4\nforward[0]: 0 1\nbackward[0]: 1 0\n")
        result = runner.invoke(cli, ["verify", instance, solution])

        assert result.exit_code == 5
        assert "cost mismatch" in result.output

    def test_missing_edge(self, runner, files):
        """Test exit code 5 when a hop has no edge."""
        instance = files("a.scss", ONE_WAY.replace("scss 2 1", "scss 3 1"))
        solution = files("a.sol", "cost 2\nforward[0]: 0 1\nbackward[0]: 1 2 0\n")
        result = runner.invoke(cli, ["verify", instance, solution])
        assert result.exit_code == 5


class TestCheckStructureCommand:
    """Test suite for `scss check-structure`."""

    def test_fixture(self, runner, files):
        """Test the verdict on the weight-22 solution."""
        instance = build_counterexample()
        path = files("fx.scss", serialize_instance(instance))
        solution = files("fx.sol", serialize_solution(counterexample_solution(instance)))
        result = runner.invoke(cli, ["check-structure", "--json", path, solution])

        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["general_reverse_compatible"] is False
        assert data["ranks"] == [2, 4]


class TestGenCommands:
    """Test suite for `scss gen`."""

    def test_random_is_deterministic(self, runner):
        """Test that the same seed prints the same instance."""
        args = ["gen", "random", "--n", "6", "--m", "12", "--wmax", "5"]
        args += ["--k1", "2", "--k2", "1", "--seed", "3"]
        first = runner.invoke(cli, args)
        second = runner.invoke(cli, args)

        assert first.exit_code == 0
        assert first.output == second.output
        assert parse_instance(first.output).graph.m == 12

    def test_random_rejects_bad_parameters(self, runner):
        """Test that m < n with --strongly-connected is a usage error."""
        args = ["gen", "random", "--n", "6", "--m", "3", "--wmax", "5"]
        args += ["--k1", "1", "--k2", "1", "--seed", "0", "--strongly-connected"]
        assert runner.invoke(cli, args).exit_code == 2

    def test_counterexample(self, runner):
        """Test the fixture generator."""
        result = runner.invoke(cli, ["gen", "counterexample"])

        assert result.exit_code == 0
        assert parse_instance(result.output) == build_counterexample()

    def test_gridtiling_writes_certificate(self, runner, tmp_path):
        """Test that -o also writes the sidecar certificate."""
        output = tmp_path / "grid.scss"
        args = ["gen", "gridtiling", "--k", "2", "--n", "2", "-o", str(output)]
        result = runner.invoke(cli, args)

        assert result.exit_code == 0
        instance = parse_instance(output.read_text())
        assert (instance.graph.n, instance.k1, instance.k2) == (80, 3, 1)
        certificate = json.loads((tmp_path / "grid.scss.cert.json").read_text())
        assert certificate["beta"] == 1186189

    def test_gridtiling_from_clique(self, runner, files, tmp_path):
        """Test reducing from a clique graph file."""
        graph = files("g.txt", "graph 2 1\ne 1 2\n")
        output = tmp_path / "grid.scss"
        result = runner.invoke(
            cli, ["gen", "gridtiling", "--k", "2", "--from-clique", graph, "-o", str(output)]
        )
        assert result.exit_code == 0
        assert output.exists()

    def test_gridtiling_needs_a_graph(self, runner):
        """Test that --n or --from-clique is required."""
        result = runner.invoke(cli, ["gen", "gridtiling", "--k", "2"])
        assert result.exit_code == 2


class TestTransformAndExport:
    """Test suite for `scss transform` and `scss export-dot`."""

    def test_ew2vw_then_vw2ew(self, runner, files, tmp_path):
        """Test converting in both directions."""
        vw_path = tmp_path / "a.vscss"
        first = runner.invoke(
            cli, ["transform", "ew2vw", files("a.scss", TWO_CYCLE), "-o", str(vw_path)]
        )
        assert first.exit_code == 0
        assert parse_vertex_weighted(vw_path.read_text()).vertex_weights == (0, 0, 2, 3)

        second = runner.invoke(cli, ["transform", "vw2ew", str(vw_path)])
        assert second.exit_code == 0
        assert parse_instance(second.output).graph.n == 6

    def test_export_dot(self, runner, files):
        """Test DOT output with a solution overlay."""
        instance = files("a.scss", TWO_CYCLE)
        solution = files("a.sol", "cost 5\nforward[0]: 0 1\nbackward[0]: 1 0\n")
        result = runner.invoke(cli, ["export-dot", instance, solution])

        assert result.exit_code == 0
        assert result.output.startswith("digraph scss {")
        assert "color=blue" in result.output
        assert "color=red" in result.output


class TestVersionCommand:
    """Test suite for `scss version`."""

    def test_version(self, runner):
        """Test the version string."""
        result = runner.invoke(cli, ["version"])
        assert result.exit_code == 0
        assert "scss-demands v0.1.0" in result.output
