"""Exact identity catalogue, sign-claim grids and numeric scans."""

from .identities import (IdentityCase, IdentityResult, TranscriptionError, build_phi_b1, identity_cases,
                         identity_suite, transcription_audit)
from .inequalities import ALPHA_GRID, DENSE_ALPHA_GRID, InequalityCase, InequalityOutcome, inequality_suite
from .scans import (CaseScanReport, ExceptionReport, ScanRecord, ScanSummary, case_scan, exception_check,
                    exhaustive_scan, scan_graphs, write_csv)

__all__ = [
    "IdentityCase", "IdentityResult", "TranscriptionError", "build_phi_b1", "identity_cases",
    "identity_suite", "transcription_audit",
    "ALPHA_GRID", "DENSE_ALPHA_GRID", "InequalityCase", "InequalityOutcome", "inequality_suite",
    "CaseScanReport", "ExceptionReport", "ScanRecord", "ScanSummary", "case_scan", "exception_check",
    "exhaustive_scan", "scan_graphs", "write_csv",
]
