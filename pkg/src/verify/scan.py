#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: scan.py
# Pathname: /path/to/ideal4/src/verify/
# Description: Grid scans of an immersion with a worker-thread pool; per-point
#              failures go to the error manager
# -----------------------------------------------------------------------------

import os
import time
import queue
import logging
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from src.core.error_manager import ErrorManager
from src.core.errors import ConfigurationError, Ideal4Error, ParameterError
from src.geom.immersion import ChartPoint, GridSpec, ImmersionMap
from src.geom.structure import DEFAULT_STEP, codazzi_residual, gauss_residual
from src.verify.checks import DEFAULT_TOLERANCE, IdealityVerdict, chen_check


@dataclass(frozen=True)
class PointRecord:
    """Outcome at one grid node; verdict is None when the point failed"""
    index: Tuple[int, int, int]
    point: ChartPoint
    verdict: Optional[IdealityVerdict] = None
    gauss_residual: Optional[float] = None
    codazzi_residual: Optional[float] = None
    error_code: Optional[str] = None
    error_message: Optional[str] = None
    exception: Optional[Exception] = field(default=None, repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.verdict is not None

    def to_row(self) -> Dict:
        row = {
            "index": list(self.index),
            "point": [self.point.x1, self.point.x2, self.point.x3],
        }
        if self.verdict is not None:
            row.update({
                "delta": self.verdict.delta,
                "bound": self.verdict.bound,
                "slack": self.verdict.slack,
                "pattern_residual": self.verdict.pattern_residual,
                "eigen_triple": list(self.verdict.eigen_triple),
                "case_tag": self.verdict.case_tag,
                "is_ideal": self.verdict.is_ideal,
                "type_number": self.verdict.type_number,
            })
        if self.gauss_residual is not None:
            row["gauss_residual"] = self.gauss_residual
        if self.codazzi_residual is not None:
            row["codazzi_residual"] = self.codazzi_residual
        if self.error_code is not None:
            row["error_code"] = self.error_code
            row["error_message"] = self.error_message
        return row


@dataclass
class ScanReport:
    grid: GridSpec
    tolerance: float
    records: List[PointRecord]
    wall_time: float = 0.0
    include_structure: bool = True
    error_ids: List[int] = field(default_factory=list, repr=False)
    summary_cache: Optional[Dict] = field(default=None, repr=False)

    def summary(self) -> Dict:
        """Extrema and case counts, reduced in grid index order"""
        if self.summary_cache is not None:
            return self.summary_cache
        ok = [r for r in self.records if r.ok]
        cases: Dict[str, int] = {}
        for r in ok:
            tag = r.verdict.case_tag or "none"
            cases[tag] = cases.get(tag, 0) + 1

        def extreme(values) -> Optional[float]:
            values = list(values)
            return max(values) if values else None

        summary = {
            "points": len(self.records),
            "failures": len(self.records) - len(ok),
            "ideal_points": sum(1 for r in ok if r.verdict.is_ideal),
            "max_abs_slack": extreme(abs(r.verdict.slack) for r in ok),
            "max_relative_slack": extreme(r.verdict.relative_slack for r in ok),
            "min_slack": min((r.verdict.slack for r in ok), default=None),
            "max_pattern_residual": extreme(r.verdict.pattern_residual for r in ok),
            "max_gauss_residual": extreme(r.gauss_residual for r in ok if r.gauss_residual is not None),
            "max_codazzi_residual": extreme(r.codazzi_residual for r in ok if r.codazzi_residual is not None),
            "case_tags": dict(sorted(cases.items())),
        }
        self.summary_cache = summary
        return summary

    def passed(self, structure_tolerance: float = DEFAULT_TOLERANCE) -> bool:
        """All points evaluated, equality and pattern within tolerance, structure residuals within theirs"""
        s = self.summary()
        if s["failures"] or not s["points"]:
            return False
        if s["max_relative_slack"] > self.tolerance or s["max_pattern_residual"] > self.tolerance:
            return False
        if self.include_structure:
            for key in ("max_gauss_residual", "max_codazzi_residual"):
                if s[key] is None or s[key] > structure_tolerance:
                    return False
        return True


class ScanRunner:
    """Evaluates chen_check (and optionally structure residuals) over a grid"""

    def __init__(self, threads: Union[int, str] = 1, error_manager: Optional[ErrorManager] = None,
                 include_structure: bool = True, structure_step: float = DEFAULT_STEP):
        self.logger = logging.getLogger("ScanRunner")
        self.threads = self._resolve_threads(threads)
        self.error_manager = error_manager or ErrorManager()
        self.include_structure = include_structure
        self.structure_step = structure_step

    @staticmethod
    def _resolve_threads(threads: Union[int, str]) -> int:
        """Worker count; "auto" means one per CPU"""
        if threads == "auto":
            return max(1, os.cpu_count() or 1)
        if isinstance(threads, bool) or not isinstance(threads, int) or threads < 1:
            raise ConfigurationError(f"Scan needs at least one thread or \"auto\", got {threads!r}")
        return threads

    def _evaluate(self, imm: ImmersionMap, index, point: ChartPoint, tol: float) -> PointRecord:
        try:
            verdict = chen_check(imm, point, tol)
            gauss = codazzi = None
            if self.include_structure:
                gauss = gauss_residual(imm, point, self.structure_step)
                codazzi = codazzi_residual(imm, point, self.structure_step)
            return PointRecord(index, point, verdict, gauss, codazzi)
        except Ideal4Error as e:
            self.error_manager.report_exception("ScanRunner", e, severity="warning",
                                                metadata={"index": list(index), "immersion": imm.name})
            return PointRecord(index, point, error_code=e.code, error_message=str(e), exception=e)

    def _worker(self, imm: ImmersionMap, tasks: queue.Queue, results: Dict, tol: float) -> None:
        while True:
            try:
                slot, index, point = tasks.get_nowait()
            except queue.Empty:
                return
            try:
                results[slot] = self._evaluate(imm, index, point, tol)
            except Exception as e:
                self.logger.error(f"Unexpected error at {point}: {e}")
                self.error_manager.report_error("ScanRunner", "scan_worker_error",
                                                f"Unexpected error at {point}: {e}", severity="error")
                results[slot] = PointRecord(index, point, error_code="scan_worker_error", error_message=str(e))
            finally:
                tasks.task_done()

    def run(self, imm: ImmersionMap, grid: GridSpec, tol: float = DEFAULT_TOLERANCE) -> ScanReport:
        """Scan the grid

        Raises:
            ConfigurationError: empty grid
            Ideal4Error: every point failed (the error of the first node is re-raised)
        """
        if not tol > 0.0:
            raise ParameterError(f"Tolerance must be positive, got {tol!r}")
        if grid.size == 0:
            raise ConfigurationError(f"Grid {grid.shape} has no nodes")

        started = time.perf_counter()
        tasks: queue.Queue = queue.Queue()
        nodes = list(grid.points())
        for slot, (index, point) in enumerate(nodes):
            tasks.put((slot, index, point))

        results: Dict[int, PointRecord] = {}
        workers = [
            threading.Thread(target=self._worker, args=(imm, tasks, results, tol), daemon=True)
            for _ in range(min(self.threads, len(nodes)))
        ]
        error_ids: List[int] = []

        def collect(error: Dict) -> None:
            if error["source"] == "ScanRunner":
                error_ids.append(error["id"])

        self.error_manager.register_callback(collect)
        try:
            for w in workers:
                w.start()
            for w in workers:
                w.join()
        finally:
            self.error_manager.unregister_callback(collect)

        records = [results[slot] for slot in range(len(nodes))]
        wall_time = time.perf_counter() - started
        self.logger.info(f"Scanned {imm.name} on {grid.shape} with {len(workers)} threads in {wall_time:.2f} s")

        if all(not r.ok for r in records):
            self.logger.error(f"All {len(records)} grid points of {imm.name} failed")
            if isinstance(records[0].exception, Ideal4Error):
                raise records[0].exception
            raise Ideal4Error(f"All grid points failed; first: {records[0].error_message}")
        return ScanReport(grid, tol, records, wall_time, self.include_structure, sorted(error_ids))


def scan(imm: ImmersionMap, grid: GridSpec, tol: float = DEFAULT_TOLERANCE, threads: Union[int, str] = 1,
         include_structure: bool = True, structure_step: float = DEFAULT_STEP,
         error_manager: Optional[ErrorManager] = None) -> ScanReport:
    runner = ScanRunner(threads, error_manager, include_structure, structure_step)
    return runner.run(imm, grid, tol)
