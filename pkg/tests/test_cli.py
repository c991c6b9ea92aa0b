"""Command-line surface: exit codes and artifacts."""

import csv
import io

import pytest
from typer.testing import CliRunner

from src.cli import app

runner = CliRunner()


def _body(path):
    lines = [line for line in path.read_text(encoding="utf-8").splitlines() if not line.startswith("#")]
    return list(csv.reader(io.StringIO("\n".join(lines))))


def test_help_lists_commands():
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    for command in ("spectrum", "wavefunction", "verify", "table", "sweep"):
        assert command in result.output


def test_table_command(tmp_path):
    out = tmp_path / "table.csv"
    result = runner.invoke(app, ["table", "--preset", "coulomb-B5", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = _body(out)
    assert rows[0] == ["n", "gamma=0", "gamma=0.1", "gamma=0.5", "gamma=1"]
    assert [float(v) for v in rows[1][1:]] == pytest.approx([12.5, 12.25125, 11.28125, 10.125], abs=1e-4)
    assert rows[5][2].endswith("*") is False and rows[5][3].endswith("*")


def test_table_output_is_reproducible(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    runner.invoke(app, ["table", "--preset", "CO", "--out", str(first)])
    runner.invoke(app, ["table", "--preset", "CO", "--out", str(second)])
    assert first.read_bytes() == second.read_bytes()


def test_verify_command_passes_at_constant_mass(tmp_path, monkeypatch):
    monkeypatch.setenv("PDM_GRID_POINTS", "2001")
    out = tmp_path / "verify.csv"
    result = runner.invoke(app, ["verify", "--gamma", "0", "--A", "1", "--B", "5", "--levels", "3",
                                 "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = _body(out)
    assert [row[rows[0].index("verdict")] for row in rows[1:]] == ["match"] * 3


def test_negative_gamma_is_a_configuration_error(tmp_path):
    out = tmp_path / "never.csv"
    result = runner.invoke(app, ["spectrum", "--gamma=-0.1", "--B", "5", "--out", str(out)])
    assert result.exit_code == 1
    assert "error:" in result.output
    assert not out.exists()


def test_molecular_units_need_reduced_mass(tmp_path):
    result = runner.invoke(app, ["spectrum", "--units", "molecular", "--B", "25", "--out", str(tmp_path / "x.csv")])
    assert result.exit_code == 1


def test_config_file_with_flag_override(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("B = 5\ngamma = 0.1\nlevels = 2\n")
    out = tmp_path / "spectrum.csv"
    result = runner.invoke(app, ["spectrum", "--config", str(config), "--levels", "4", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = _body(out)
    assert len(rows) == 5
    assert float(rows[1][rows[0].index("E")]) == pytest.approx(-12.25125)


def test_wavefunction_command(tmp_path, monkeypatch):
    monkeypatch.setenv("PDM_WAVEFUNCTION_POINTS", "101")
    out = tmp_path / "phi.csv"
    result = runner.invoke(app, ["wavefunction", "--gamma", "0.5", "--B", "5", "--n", "0",
                                 "--measure", "dz", "--out", str(out)])
    assert result.exit_code == 0, result.output
    text = out.read_text(encoding="utf-8")
    assert "# measure = dz" in text
    assert len(_body(out)) == 102


def test_sweep_command(tmp_path):
    out = tmp_path / "sweep.csv"
    result = runner.invoke(app, ["sweep", "--preset", "CO", "--gamma-max", "1", "--steps", "11", "--out", str(out)])
    assert result.exit_code == 0, result.output
    rows = _body(out)
    assert rows[0] == ["gamma", "E - V_min"]
    assert len(rows) == 12
