"""End-to-end CLI runs against temporary directories."""

import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest
from scipy.optimize import brentq

from lateralvdw import (
    TwoAtomSystem,
    lateral_force_closed_form,
    lateral_force_shape,
    resonant_force_on_a,
    resonant_force_on_b,
)
from lateralvdw.cli import main


def read_table(path):
    meta = {}
    with open(path, encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    data_lines = []
    for line in lines:
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            meta[key.strip()] = value.strip()
        elif line:
            data_lines.append(line)
    rows = list(csv.reader(data_lines))
    header, body = rows[0], rows[1:]
    return meta, header, body


def column(header, body, name):
    idx = header.index(name)
    return np.array([float(row[idx]) for row in body])


def test_force_curve_default_peak_location(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["force-curve", "--no-timestamp"]) == 0
    meta, header, body = read_table(tmp_path / "force_curve.csv")
    assert meta["verb"] == "force-curve"
    r = column(header, body, "r")
    f_x = column(header, body, "F_x")
    # First local maximum with positive lateral force.
    peak_r = None
    for i in range(1, len(r) - 1):
        if f_x[i] > 0.0 and f_x[i] >= f_x[i - 1] and f_x[i] >= f_x[i + 1]:
            peak_r = r[i]
            break
    assert peak_r is not None
    assert abs(peak_r - 632e-9) <= 10e-9


def test_force_curve_single_row_equals_library(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["force-curve", "--points", "1", "--r-min", "4e-7", "--no-timestamp"]) == 0
    _, header, body = read_table(tmp_path / "force_curve.csv")
    assert len(body) == 1
    system = TwoAtomSystem.cs_rb(4e-7)
    assert column(header, body, "r")[0] == 4e-7
    assert column(header, body, "xi")[0] == pytest.approx(system.xi, rel=1e-15)
    assert column(header, body, "F_x")[0] == pytest.approx(
        lateral_force_closed_form(system, 1.0), rel=1e-15
    )
    assert column(header, body, "F_z_A")[0] == pytest.approx(
        resonant_force_on_a(system, 1.0).force[2], rel=1e-15
    )
    assert column(header, body, "F_z_B")[0] == pytest.approx(
        resonant_force_on_b(system, 1.0).force[2], rel=1e-15
    )
    assert column(header, body, "F_x_shape")[0] == pytest.approx(
        resonant_force_on_a(system, 1.0).shape_factor[0], rel=1e-15
    )


def test_csv_and_json_carry_identical_numbers(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    args = ["force-curve", "--points", "20", "--no-timestamp"]
    assert main(args + ["--format", "csv", "--output", "out.csv"]) == 0
    assert main(args + ["--format", "json", "--output", "out.json"]) == 0
    _, header, body = read_table(tmp_path / "out.csv")
    payload = json.loads((tmp_path / "out.json").read_text())
    assert len(payload["rows"]) == len(body)
    for json_row, csv_row in zip(payload["rows"], body):
        for name, text in zip(header, csv_row):
            assert json_row[name] == float(text)


def test_output_is_byte_deterministic(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    args = ["velocity", "--points", "30", "--no-timestamp"]
    assert main(args + ["--output", "a.csv"]) == 0
    assert main(args + ["--output", "b.csv"]) == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_emission_spectrum_columns_and_symmetry(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["emission-spectrum", "--phi-points", "32", "--no-timestamp"]) == 0
    meta, header, body = read_table(tmp_path / "emission_spectrum.csv")
    assert header == ["phi", "R", "R_normalized"]
    for key in ("f1", "f2", "f3", "xi"):
        assert key in meta
    rates = column(header, body, "R")
    normalized = column(header, body, "R_normalized")
    assert normalized.max() == pytest.approx(1.0, rel=1e-12)
    # phi -> -phi symmetry on the equispaced grid (index n-k mirrors k).
    n = len(rates)
    for k in range(1, n // 2):
        assert rates[k] == pytest.approx(rates[n - k], rel=1e-12)
    # Stronger emission opposite the lateral push at the default separation.
    assert rates[n // 2] > rates[0]


def test_emission_spectrum_symmetric_at_force_zero(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    wavelength = 852e-9
    xi_zero = brentq(lateral_force_shape, 3.7, 4.6)
    r_zero = xi_zero * wavelength / (2.0 * math.pi)
    assert main(
        ["emission-spectrum", "--r", repr(r_zero), "--phi-points", "16", "--no-timestamp"]
    ) == 0
    _, header, body = read_table(tmp_path / "emission_spectrum.csv")
    rates = column(header, body, "R")
    assert rates[0] == pytest.approx(rates[8], rel=1e-9)


def test_velocity_scales_with_duration(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    base_args = ["velocity", "--points", "5", "--no-timestamp"]
    assert main(base_args + ["--output", "v1.csv"]) == 0
    assert main(base_args + ["--delta-t", "0.02", "--output", "v2.csv"]) == 0
    _, header, body1 = read_table(tmp_path / "v1.csv")
    _, _, body2 = read_table(tmp_path / "v2.csv")
    v1 = column(header, body1, "v")
    v2 = column(header, body2, "v")
    assert np.allclose(v2, 2.0 * v1, rtol=1e-12)


def test_velocity_flips_with_handedness(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    base_args = ["velocity", "--points", "5", "--no-timestamp"]
    assert main(base_args + ["--output", "r.csv"]) == 0
    assert main(base_args + ["--handedness", "left", "--output", "l.csv"]) == 0
    _, header, body_r = read_table(tmp_path / "r.csv")
    _, _, body_l = read_table(tmp_path / "l.csv")
    assert np.allclose(
        column(header, body_l, "v"), -column(header, body_r, "v"), rtol=1e-12
    )


def test_velocity_default_matches_reference_magnitude(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["velocity", "--points", "1", "--r-min", "1e-7", "--no-timestamp"]) == 0
    _, header, body = read_table(tmp_path / "velocity.csv")
    speed = abs(column(header, body, "v")[0])
    assert 600e-9 <= speed <= 1000e-9


def test_validate_passes_and_reports(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(["validate", "--no-timestamp"]) == 0
    meta, header, body = read_table(tmp_path / "validation_report.csv")
    assert meta["all_passed"] == "true"
    assert header == ["name", "passed", "achieved_error", "tolerance", "detail"]
    assert len(body) == 5
    passed_idx = header.index("passed")
    tolerance_idx = header.index("tolerance")
    for row in body:
        assert row[passed_idx] == "true"
        assert float(row[tolerance_idx]) > 0.0
    out = capsys.readouterr().out
    assert out.count("pass") == 5


def test_validate_perturbed_fails_with_exit_one(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["validate", "--f3-scale", "1.000001", "--no-timestamp"]) == 1
    meta, header, body = read_table(tmp_path / "validation_report.csv")
    assert meta["all_passed"] == "false"
    name_idx = header.index("name")
    passed_idx = header.index("passed")
    failed = {row[name_idx] for row in body if row[passed_idx] == "false"}
    assert failed == {"bracket-identity", "recoil-force-identity"}


def test_config_file_applies_and_flags_win(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# sweep\npoints = 3\nr_min = 5e-7\nr_max = 7e-7\ntimestamp = false\n"
    )
    assert main(["force-curve", "--config", "run.cfg"]) == 0
    _, header, body = read_table(tmp_path / "force_curve.csv")
    assert len(body) == 3
    assert column(header, body, "r")[0] == 5e-7
    assert main(["force-curve", "--config", "run.cfg", "--points", "2"]) == 0
    _, _, body = read_table(tmp_path / "force_curve.csv")
    assert len(body) == 2


def test_config_errors_exit_two(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    bad = tmp_path / "bad.cfg"
    bad.write_text("unknown_setting = 1\n")
    assert main(["force-curve", "--config", "bad.cfg"]) == 2
    bad.write_text("points = many\n")
    assert main(["force-curve", "--config", "bad.cfg"]) == 2
    bad.write_text("points 3\n")
    assert main(["force-curve", "--config", "bad.cfg"]) == 2
    assert main(["force-curve", "--config", "missing.cfg"]) == 2
    assert "error" in capsys.readouterr().err


def test_invalid_sweeps_exit_two(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["force-curve", "--r-min", "-1e-7"]) == 2
    assert main(["force-curve", "--r-min", "2e-6", "--r-max", "1e-6"]) == 2
    assert main(["force-curve", "--points", "0"]) == 2
    assert main(["emission-spectrum", "--phi-points", "4"]) == 2
    assert main(["velocity", "--p1", "1.5"]) == 2
    assert main(["velocity", "--delta-t", "0"]) == 2


def test_usage_errors_exit_two(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(["no-such-verb"]) == 2
    assert main(["force-curve", "--format", "xml"]) == 2
    capsys.readouterr()


def test_unwritable_output_exits_two(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    missing_dir = tmp_path / "nope" / "out.csv"
    assert main(["force-curve", "--points", "2", "--output", str(missing_dir)]) == 2
    assert "error" in capsys.readouterr().err


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "lateralvdw", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "lateralvdw" in proc.stdout
