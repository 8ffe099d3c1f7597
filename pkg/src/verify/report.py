#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: report.py
# Pathname: /path/to/ideal4/src/verify/
# Description: Versioned JSON report document for verification scans
# -----------------------------------------------------------------------------

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from src.core.config_manager import APP_VERSION
from src.catalog.registry import FamilyParams
from src.verify.scan import ScanReport

SCHEMA_VERSION = 1
PASS = "PASS"
FAIL = "FAIL"


@dataclass
class ReportDocument:
    """Scan outcome as written to disk; holds no timestamps so reruns are byte-identical"""
    tool_version: str
    family: str
    params: Dict[str, Any]
    grid: Dict[str, Any]
    tolerance: float
    structure_tolerance: float
    summary: Dict[str, Any]
    status: str
    rows: Optional[List[Dict[str, Any]]] = None
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        if self.rows is None:
            data.pop("rows")
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportDocument":
        return cls(
            tool_version=data["tool_version"],
            family=data["family"],
            params=dict(data["params"]),
            grid=dict(data["grid"]),
            tolerance=float(data["tolerance"]),
            structure_tolerance=float(data["structure_tolerance"]),
            summary=dict(data["summary"]),
            status=data["status"],
            rows=data.get("rows"),
            schema_version=int(data.get("schema_version", SCHEMA_VERSION)),
        )

    def to_json(self) -> str:
        # json emits the shortest round-trip repr of every float
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    @property
    def passed(self) -> bool:
        return self.status == PASS


def build_report(params: FamilyParams, report: ScanReport, structure_tolerance: float,
                 include_rows: bool = False, tool_version: str = APP_VERSION) -> ReportDocument:
    status = PASS if report.passed(structure_tolerance) else FAIL
    return ReportDocument(
        tool_version=tool_version,
        family=params.family,
        params=params.to_dict(),
        grid=report.grid.to_dict(),
        tolerance=report.tolerance,
        structure_tolerance=structure_tolerance,
        summary=dict(report.summary(), include_structure=report.include_structure),
        status=status,
        rows=[r.to_row() for r in report.records] if include_rows else None,
    )
