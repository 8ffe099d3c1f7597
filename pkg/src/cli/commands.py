#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: commands.py
# Pathname: /path/to/ideal4/src/cli/
# Description: Command-line front end: verification scans, delta at a point,
#              elliptic function values, mesh export and the family list
# -----------------------------------------------------------------------------

import sys
import json
import logging
import argparse
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from src.core.config_manager import APP_NAME, APP_VERSION, ConfigManager, setup_logging
from src.core.error_manager import ErrorManager
from src.core.errors import (
    ConfigurationError,
    DomainError,
    Ideal4Error,
    ParameterError,
)
from src.catalog.registry import FamilyParams, build_family, list_families
from src.elliptic import MINOR_FUNCTIONS, jacobi_amplitude, jacobi_minor
from src.geom.immersion import ChartPoint, GridSpec, ImmersionMap
from src.verify.checks import chen_check
from src.verify.report import build_report
from src.verify.scan import ScanRunner

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

DEFAULT_GRID = "8x8x8"
DEFAULT_SHRINK = 0.02
MESH_COLUMNS = ["t", "u", "v", "x1", "x2", "x3", "x4"]
ELLIPTIC_FUNCTIONS = MINOR_FUNCTIONS + ("am",)

# Errors caused by what the user typed
USAGE_ERRORS = (ParameterError, DomainError, ConfigurationError)


class UsageError(Exception):
    """Raised instead of argparse's exit so every diagnostic is a single line"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_floats(text: str, count: Optional[int] = None) -> Tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}")
    if count is not None and len(values) != count:
        raise UsageError(f"expected {count} comma-separated numbers, got {text!r}")
    return values


def _parse_range(text: str) -> Tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"range must look like lo:hi, got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise UsageError(f"range must look like lo:hi, got {text!r}")
    if not lo < hi:
        raise UsageError(f"range needs lo < hi, got {text!r}")
    return lo, hi


def _add_family_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", required=True, help="Family tag (see catalog-list)")
    parser.add_argument("--a", type=float, default=None, help="Family parameter a")
    parser.add_argument("--coeffs", type=str, default=None,
                        help="Graph coefficients c1,c2,c3 for c1 t^2 + c2 u^2 + c3 v^2")


def _add_grid_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--grid", default=DEFAULT_GRID, help="Grid shape NtxNuxNv")
    for axis in ("t", "u", "v"):
        parser.add_argument(f"--{axis}-range", default=None,
                            help=f"Override the {axis} range as lo:hi (use --{axis}-range=lo:hi for negative lo)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ideal4", description=f"{APP_NAME} - delta(2) invariant of hypersurfaces in E^4")
    parser.add_argument("--config", type=str, default="config/config.json", help="Path to configuration file")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {APP_VERSION}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    verify = sub.add_parser("verify", help="Scan a family on a grid and write a JSON report")
    _add_family_options(verify)
    _add_grid_options(verify)
    verify.add_argument("--tol", type=float, default=None, help="Ideality tolerance")
    verify.add_argument("--output", default=None, help="Report path (standard output if omitted)")
    verify.add_argument("--rows", action="store_true", help="Include per-point rows in the report")
    verify.add_argument("--no-structure", action="store_true", help="Skip Gauss/Codazzi residuals")

    delta = sub.add_parser("delta", help="Print delta, tau, inf K, H^2 and the bound at one point")
    _add_family_options(delta)
    delta.add_argument("--point", required=True, help="Chart point t,u,v (use --point=-1,0,0 for negative t)")

    elliptic = sub.add_parser("elliptic", help="Evaluate a Jacobi elliptic function")
    elliptic.add_argument("function", help=f"One of {', '.join(ELLIPTIC_FUNCTIONS)}")
    elliptic.add_argument("u", type=float, help="Argument")
    elliptic.add_argument("k", type=float, help="Modulus in (0, 1)")

    mesh = sub.add_parser("mesh", help="Write grid positions as CSV")
    _add_family_options(mesh)
    _add_grid_options(mesh)
    mesh.add_argument("--output", default=None, help="CSV path (standard output if omitted)")
    mesh.add_argument("--with-verdict", action="store_true", help="Add delta and slack columns")

    sub.add_parser("catalog-list", help="List the available families")
    return parser


class Ideal4App:
    """Runs one CLI command against the loaded configuration"""

    def __init__(self, config_path: str = "config/config.json", verbose: bool = False):
        self.config_manager = ConfigManager(config_path)
        self.config = self.config_manager.config
        setup_logging(self.config, verbose)
        self.logger = logging.getLogger("Ideal4App")
        self.error_manager = ErrorManager(self.config)

    def _family(self, args) -> Tuple[FamilyParams, ImmersionMap]:
        coeffs = _parse_floats(args.coeffs) if args.coeffs is not None else None
        return build_family(args.family, args.a, coeffs)

    def _grid(self, args, params: FamilyParams, imm: ImmersionMap) -> GridSpec:
        box = params.safe_domain.shrink(DEFAULT_SHRINK)
        for axis, name in enumerate(("t_range", "u_range", "v_range")):
            text = getattr(args, name)
            if text is not None:
                box = box.replace_axis(axis, *_parse_range(text))
        grid = GridSpec(GridSpec.parse_shape(args.grid), box)
        if grid.size == 0:
            raise ConfigurationError(f"Grid {args.grid} has no nodes")
        for _, p in grid.points():
            if not imm.domain.contains(p):
                raise DomainError(f"Grid node {p} lies outside the domain of {imm.name}")
        return grid

    def _write(self, text: str, path: Optional[str]) -> None:
        if path is None:
            sys.stdout.write(text)
            return
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        self.logger.info(f"Wrote {path}")

    def cmd_verify(self, args) -> int:
        params, imm = self._family(args)
        grid = self._grid(args, params, imm)
        verify_config = self.config_manager.section("verify")
        tol = args.tol if args.tol is not None else float(verify_config.get("tolerance", 1e-6))
        structure_tol = float(verify_config.get("structure_tolerance", 1e-6))
        include_structure = bool(verify_config.get("include_structure", True)) and not args.no_structure

        runner = ScanRunner(self.config_manager.thread_count(), self.error_manager, include_structure,
                            float(verify_config.get("structure_step", 1e-4)))
        report = runner.run(imm, grid, tol)
        document = build_report(params, report, structure_tol, include_rows=args.rows)
        self._write(document.to_json(), args.output)
        self.logger.info(f"verify {params.family}: {document.status} in {report.wall_time:.2f} s")
        return EXIT_PASS if document.passed else EXIT_FAIL

    def cmd_delta(self, args) -> int:
        _, imm = self._family(args)
        point = ChartPoint.of(_parse_floats(args.point, 3))
        tol = float(self.config_manager.get("verify", "tolerance", 1e-6))
        verdict = chen_check(imm, point, tol)
        result = {
            "delta": verdict.delta,
            "tau": verdict.tau,
            "inf_K": verdict.inf_K,
            "mean_sq": verdict.mean_sq,
            "bound": verdict.bound,
            "slack": verdict.slack,
            "eigen_triple": list(verdict.eigen_triple),
            "is_ideal": verdict.is_ideal,
            "case_tag": verdict.case_tag,
        }
        sys.stdout.write(json.dumps(result, sort_keys=True) + "\n")
        return EXIT_PASS

    def cmd_elliptic(self, args) -> int:
        name = args.function
        if name not in ELLIPTIC_FUNCTIONS:
            raise UsageError(f"unknown function {name!r}; expected one of {', '.join(ELLIPTIC_FUNCTIONS)}")
        if not 0.0 < args.k < 1.0:
            raise UsageError(f"modulus must lie in (0, 1), got {args.k!r}")
        if name == "am":
            value = jacobi_amplitude(args.u, args.k)
        else:
            value = jacobi_minor(name, args.u, args.k)
        sys.stdout.write(f"{value:.15g}\n")
        return EXIT_PASS

    def cmd_mesh(self, args) -> int:
        params, imm = self._family(args)
        grid = self._grid(args, params, imm)
        tol = float(self.config_manager.get("verify", "tolerance", 1e-6))
        rows: List[Dict] = []
        for _, p in grid.points():
            x = imm.position(p)
            row = {"t": p.t, "u": p.u, "v": p.v, "x1": x[0], "x2": x[1], "x3": x[2], "x4": x[3]}
            if args.with_verdict:
                verdict = chen_check(imm, p, tol)
                row["delta"] = verdict.delta
                row["slack"] = verdict.slack
            rows.append(row)
        columns = MESH_COLUMNS + (["delta", "slack"] if args.with_verdict else [])
        frame = pd.DataFrame(rows, columns=columns)
        text = frame.to_csv(index=False, lineterminator="\n")
        self._write(text, args.output)
        self.logger.info(f"mesh {params.family}: {len(rows)} rows")
        return EXIT_PASS

    def cmd_catalog_list(self, args) -> int:
        sys.stdout.write(json.dumps(list_families(), sort_keys=True, indent=2) + "\n")
        return EXIT_PASS

    def run(self, args) -> int:
        handlers = {
            "verify": self.cmd_verify,
            "delta": self.cmd_delta,
            "elliptic": self.cmd_elliptic,
            "mesh": self.cmd_mesh,
            "catalog-list": self.cmd_catalog_list,
        }
        return handlers[args.command](args)


def _diagnostic(message: str) -> None:
    sys.stderr.write(f"ideal4: error: {' '.join(str(message).split())}\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the command and map failures to exit codes

    0: PASS / success, 1: FAIL or numerical failure such as a pole, 2: usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: verify, delta, elliptic, mesh or catalog-list")
        app = Ideal4App(args.config, args.verbose)
        return app.run(args)
    except UsageError as e:
        _diagnostic(e)
        return EXIT_USAGE
    except USAGE_ERRORS as e:
        _diagnostic(f"{e.code}: {e}")
        return EXIT_USAGE
    except Ideal4Error as e:
        _diagnostic(f"{e.code}: {e}")
        return EXIT_FAIL
    except OSError as e:
        _diagnostic(f"cannot write output: {e}")
        return EXIT_USAGE
