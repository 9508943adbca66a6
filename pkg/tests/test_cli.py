"""Command-line interface: output formats, exit codes, determinism."""

import pytest
from click.testing import CliRunner

from rotovac.cli import EXIT_FAILURE, main


@pytest.fixture()
def runner():
    return CliRunner()


class TestSinglePointCommands:
    def test_circle_energy_prints_bare_value(self, runner):
        result = runner.invoke(main, ["circle-energy", "--radius", "1.0"])
        assert result.exit_code == 0
        assert result.output.strip() == "-0.0208333333333"

    def test_circle_energy_with_rotation(self, runner):
        result = runner.invoke(main, ["circle-energy", "--radius", "1.0", "--omega", "0.5"])
        assert result.exit_code == 0
        assert float(result.output) == pytest.approx(-1.25 / 48.0)

    def test_rect_energy_single(self, runner):
        result = runner.invoke(main, ["rect-energy", "--height", "1", "--width", "10"])
        assert result.exit_code == 0
        assert float(result.output) == pytest.approx(-0.17369177557, rel=1e-9)

    def test_rect_energy_needs_width(self, runner):
        result = runner.invoke(main, ["rect-energy", "--height", "1"])
        assert result.exit_code == 2


class TestSweepCommands:
    def test_circle_sweep_csv(self, runner):
        result = runner.invoke(
            main,
            ["circle-energy", "--omega-min", "0", "--omega-max", "0.8", "--steps", "5"],
        )
        assert result.exit_code == 0
        lines = result.output.strip().split("\n")
        assert lines[0] == "omega,energy"
        assert len(lines) == 6

    def test_tube_sweep_json(self, runner):
        result = runner.invoke(
            main,
            ["tube-sweep", "--height", "50", "--steps", "4", "--format", "json"],
        )
        assert result.exit_code == 0
        assert '"columns"' in result.output
        assert '"omega_R"' in result.output

    def test_omega_min_curve(self, runner):
        result = runner.invoke(
            main,
            ["omega-min-curve", "--l-min", "20", "--l-max", "60", "--steps", "2"],
        )
        assert result.exit_code == 0
        lines = result.output.strip().split("\n")
        assert lines[0] == "L_over_R,omega_min_R"
        assert len(lines) == 3

    def test_device_optimize_columns(self, runner):
        result = runner.invoke(
            main, ["device-optimize", "--height", "100", "--inertia", "0.0"]
        )
        assert result.exit_code == 0
        header = result.output.strip().split("\n")[0]
        assert header.split(",") == [
            "omega_x",
            "energy_at_min",
            "is_nontrivial",
            "barrier_height",
            "no_interior_minimum",
        ]


class TestFilesAndDeterminism:
    def test_output_file_written(self, runner, tmp_path):
        target = tmp_path / "sweep.csv"
        result = runner.invoke(
            main,
            ["tube-sweep", "--height", "50", "--steps", "8", "--output", str(target)],
        )
        assert result.exit_code == 0
        lines = target.read_text().strip().split("\n")
        assert lines[0] == "omega_R,E_vac_R,E_rot_R"
        assert len(lines) == 9

    def test_repeated_sweeps_byte_identical(self, runner, tmp_path):
        args = ["tube-sweep", "--height", "100", "--steps", "16"]
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        assert runner.invoke(main, args + ["--output", str(first)]).exit_code == 0
        assert runner.invoke(main, args + ["--output", str(second)]).exit_code == 0
        assert first.read_bytes() == second.read_bytes()


class TestFailureModes:
    def test_unknown_option_is_usage_error(self, runner):
        result = runner.invoke(main, ["circle-energy", "--bogus", "1"])
        assert result.exit_code == 2

    def test_unknown_command_is_usage_error(self, runner):
        result = runner.invoke(main, ["frobnicate"])
        assert result.exit_code == 2

    def test_domain_failure_exits_three(self, runner):
        result = runner.invoke(main, ["rect-energy", "--height", "-1", "--width", "1"])
        assert result.exit_code == EXIT_FAILURE

    def test_superluminal_exits_three(self, runner):
        result = runner.invoke(main, ["circle-energy", "--omega", "1.5"])
        assert result.exit_code == EXIT_FAILURE

    def test_error_message_on_stderr(self, runner):
        result = runner.invoke(
            main, ["rect-energy", "--height", "-1", "--width", "1"]
        )
        assert "error:" in result.stderr
