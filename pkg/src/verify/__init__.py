"""Ideality verdicts, structure checks and grid scans"""

from src.verify.checks import (
    CASE_TAGS,
    IdealityVerdict,
    PatternAssignment,
    case_classifier,
    chen_check,
    classify_assignment,
    equality_pattern,
    isometry_check,
    noncongruence_witness,
    ode_residual,
    rigidity_prerequisite,
    type_number,
)
from src.verify.scan import PointRecord, ScanReport, ScanRunner, scan
from src.verify.report import ReportDocument, build_report

__all__ = [
    "CASE_TAGS", "IdealityVerdict", "PatternAssignment", "PointRecord", "ReportDocument",
    "ScanReport", "ScanRunner", "build_report", "case_classifier", "chen_check",
    "classify_assignment", "equality_pattern", "isometry_check", "noncongruence_witness",
    "ode_residual", "rigidity_prerequisite", "scan", "type_number",
]
