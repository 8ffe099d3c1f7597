#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: test_cli.py
# Pathname: /path/to/ideal4/src/tests/
# Description: End-to-end tests for the ideal4 command line
# -----------------------------------------------------------------------------

import io
import json
import math

import pandas as pd
import pytest

from src.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main
from src.elliptic import HALF_SQUARE_MODULUS, SQRT_HALF, jacobi_minor
from src.verify import ReportDocument


@pytest.fixture
def run(config_file, capsys, monkeypatch):
    """Invoke main() with the test configuration; returns (code, stdout, stderr)"""
    monkeypatch.setenv("IDEAL4_THREADS", "1")

    def _run(*argv):
        code = main(["--config", config_file, *argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


def _single_line(err: str) -> str:
    lines = err.splitlines()
    assert len(lines) == 1, err
    assert lines[0].startswith("ideal4: error:")
    return lines[0]


# --- elliptic -----------------------------------------------------------------

def test_elliptic_values(run):
    code, out, _ = run("elliptic", "sn", "0", "0.5")
    assert code == EXIT_PASS
    assert out == "0\n"

    K = HALF_SQUARE_MODULUS.quarter_period
    code, out, _ = run("elliptic", "sd", repr(K), repr(SQRT_HALF))
    assert code == EXIT_PASS
    assert float(out) == pytest.approx(math.sqrt(2.0), abs=1e-12)

    code, out, _ = run("elliptic", "cn", "0.7", "0.3")
    assert float(out) == pytest.approx(jacobi_minor("cn", 0.7, 0.3), rel=1e-14)


def test_elliptic_amplitude(run):
    code, out, _ = run("elliptic", "am", "0.5", "0.5")
    assert code == EXIT_PASS
    assert 0.0 < float(out) < 0.5


def test_elliptic_pole(run):
    code, out, err = run("elliptic", "ns", "0", "0.5")
    assert code == EXIT_FAIL
    assert out == ""
    assert "pole" in _single_line(err)


@pytest.mark.parametrize("argv", [
    ("elliptic", "xy", "0.5", "0.5"),
    ("elliptic", "sn", "0.5", "1.0"),
    ("elliptic", "sn", "0.5", "0"),
    ("elliptic", "sn", "zero", "0.5"),
])
def test_elliptic_usage_errors(run, argv):
    code, _, err = run(*argv)
    assert code == EXIT_USAGE
    _single_line(err)


# --- delta --------------------------------------------------------------------

def test_delta_on_cylinder(run):
    code, out, _ = run("delta", "--family", "a", "--point", "0,0.1,0.1")
    assert code == EXIT_PASS
    result = json.loads(out)
    assert result["delta"] == pytest.approx(1.0, abs=1e-12)
    assert result["bound"] == pytest.approx(1.0, abs=1e-12)
    assert result["is_ideal"]
    assert result["case_tag"] == "lambda_zero"


def test_delta_on_minimal_product(run):
    code, out, _ = run("delta", "--family", "L1", "--point", "0,1,0")
    assert code == EXIT_PASS
    result = json.loads(out)
    assert result["delta"] == pytest.approx(0.0, abs=1e-12)
    assert result["bound"] == pytest.approx(0.0, abs=1e-12)
    assert result["case_tag"] == "three_distinct"


def test_delta_on_hyperplane(run):
    code, out, _ = run("delta", "--family", "hyperplane", "--point=-0.5,0.2,0.3")
    assert code == EXIT_PASS
    result = json.loads(out)
    for key in ("delta", "tau", "inf_K", "mean_sq", "bound", "slack"):
        assert result[key] == pytest.approx(0.0, abs=1e-14), key


def test_delta_on_control_graph(run):
    code, out, _ = run("delta", "--family", "graph", "--coeffs", "1,2,7", "--point", "0,0,0")
    assert code == EXIT_PASS
    result = json.loads(out)
    assert result["delta"] == pytest.approx(84.0)
    assert result["bound"] == pytest.approx(100.0)
    assert not result["is_ideal"]
    assert result["case_tag"] is None


@pytest.mark.parametrize("argv", [
    ("delta", "--family", "b", "--point=0,0,0"),
    ("delta", "--family", "a", "--point", "0,0"),
    ("delta", "--family", "torus", "--point", "0,0,0"),
    ("delta", "--family", "a"),
])
def test_delta_usage_errors(run, argv):
    code, out, err = run(*argv)
    assert code == EXIT_USAGE
    assert out == ""
    _single_line(err)


# --- verify -------------------------------------------------------------------

def test_verify_with_structure(run):
    code, out, _ = run("verify", "--family", "a", "--grid", "3x3x3")
    assert code == EXIT_PASS
    document = ReportDocument.from_json(out)
    assert document.status == "PASS"
    assert document.summary["points"] == 27
    assert document.summary["max_gauss_residual"] <= 1e-6


def test_verify_default_grid(run):
    code, out, _ = run("verify", "--family", "c", "--no-structure")
    assert code == EXIT_PASS
    document = ReportDocument.from_json(out)
    assert document.summary["points"] == 512
    assert document.summary["case_tags"] == {"two_equal": 512}
    assert document.grid["shape"] == [8, 8, 8]


def test_verify_control_graph_fails(run):
    code, out, _ = run("verify", "--family", "graph", "--coeffs", "1,2,7", "--grid", "4x4x4", "--no-structure")
    assert code == EXIT_FAIL
    assert json.loads(out)["status"] == "FAIL"


def test_verify_rejects_bad_parameter(run):
    code, out, err = run("verify", "--family", "b", "--a", "1.5")
    assert code == EXIT_USAGE
    assert out == ""
    assert "parameter_error" in _single_line(err)


def test_verify_rejects_range_outside_domain(run):
    code, _, err = run("verify", "--family", "b", "--t-range=-1:1", "--grid", "2x2x2", "--no-structure")
    assert code == EXIT_USAGE
    assert "domain_error" in _single_line(err)


def test_verify_writes_report_file(run, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run("verify", "--family", "L1", "--grid", "2x2x2", "--rows", "--output", str(path))
    assert code == EXIT_PASS
    assert out == ""
    document = ReportDocument.from_json(path.read_text(encoding="utf-8"))
    assert document.schema_version == 1
    assert document.family == "L1"
    assert len(document.rows) == 8


def test_verify_is_reproducible(run, tmp_path):
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    for path in paths:
        run("verify", "--family", "b", "--grid", "3x3x3", "--no-structure", "--output", str(path))
    assert paths[0].read_bytes() == paths[1].read_bytes()


# --- mesh ---------------------------------------------------------------------

def test_mesh_header_and_rows(run):
    code, out, _ = run("mesh", "--family", "a", "--grid", "2x2x2")
    assert code == EXIT_PASS
    lines = out.splitlines()
    assert lines[0] == "t,u,v,x1,x2,x3,x4"
    assert len(lines) == 9
    assert "\r" not in out


def test_mesh_single_node_sits_at_midpoint(run):
    code, out, _ = run("mesh", "--family", "a", "--grid", "1x1x1")
    assert code == EXIT_PASS
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame.iloc[0]) == pytest.approx([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0], abs=1e-15)


def test_mesh_with_verdict(run):
    code, out, _ = run("mesh", "--family", "b", "--grid", "2x2x2", "--with-verdict")
    assert code == EXIT_PASS
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame.columns) == ["t", "u", "v", "x1", "x2", "x3", "x4", "delta", "slack"]
    assert (frame["slack"].abs() <= 1e-6 * frame["delta"].abs().clip(lower=1.0)).all()


def test_mesh_elliptic_radius(run):
    code, out, _ = run("mesh", "--family", "c", "--a", "2", "--grid", "4x3x3")
    assert code == EXIT_PASS
    frame = pd.read_csv(io.StringIO(out))
    for row in frame.itertuples():
        sd = jacobi_minor("sd", 2.0 * row.t, SQRT_HALF)
        assert row.x1 ** 2 + row.x2 ** 2 + row.x3 ** 2 == pytest.approx(sd * sd / 4.0, abs=1e-12)


def test_mesh_file_is_byte_identical(run, tmp_path):
    paths = [tmp_path / "first.csv", tmp_path / "second.csv"]
    for path in paths:
        assert run("mesh", "--family", "L2", "--grid", "3x3x2", "--output", str(path))[0] == EXIT_PASS
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_mesh_errors(run, tmp_path):
    code, _, err = run("mesh", "--family", "a", "--grid", "0x2x2")
    assert code == EXIT_USAGE
    _single_line(err)

    code, _, err = run("mesh", "--family", "a", "--grid", "2x2")
    assert code == EXIT_USAGE
    _single_line(err)

    missing = tmp_path / "missing" / "mesh.csv"
    code, _, err = run("mesh", "--family", "a", "--grid", "2x2x2", "--output", str(missing))
    assert code == EXIT_USAGE
    _single_line(err)


# --- catalog and global handling ----------------------------------------------

def test_catalog_list(run):
    code, out, _ = run("catalog-list")
    assert code == EXIT_PASS
    listing = json.loads(out)
    assert len(listing) == 7
    assert {entry["family"] for entry in listing} == {"a", "b", "c", "L1", "L2", "hyperplane", "graph"}


def test_missing_command(run):
    code, _, err = run()
    assert code == EXIT_USAGE
    _single_line(err)


def test_unknown_option(run):
    code, _, err = run("catalog-list", "--bogus")
    assert code == EXIT_USAGE
    _single_line(err)


def test_invalid_thread_environment(run, monkeypatch):
    monkeypatch.setenv("IDEAL4_THREADS", "abc")
    code, _, err = run("catalog-list")
    assert code == EXIT_USAGE
    assert "IDEAL4_THREADS" in _single_line(err)
