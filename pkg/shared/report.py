"""
Case records and per-(suite, n, root) verification reports, plus the JSON,
CSV and text renderers used by the CLI.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional
import csv
import io
import json
import logging

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["suite", "n", "root_exponent", "case_id", "pass", "detail"]


@dataclass
class CaseResult:
    """One exact-equality check; detail carries the rendered sides on failure"""
    case_id: str
    params: Dict[str, Any]
    passed: bool
    detail: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "case_id": self.case_id,
            "params": self.params,
            "pass": self.passed,
            "detail": self.detail,
        }


def make_case(family: str, n: int, passed: bool, detail: Optional[str] = None, **params) -> CaseResult:
    """
    Build a case with the stable id "<family>/n=<n>/<key>=<value>/...".

    Parameters keep their keyword order, so ids never depend on hashing.
    """
    case_id = "/".join([family, f"n={n}"] + [f"{k}={v}" for k, v in params.items()])
    if not passed:
        logger.warning(f"Check failed: {case_id} {detail or ''}")
    return CaseResult(case_id=case_id, params=dict(params), passed=bool(passed), detail=detail)


def compare_case(family: str, n: int, lhs, rhs, **params) -> CaseResult:
    """Exact comparison of two rendered-able values; detail only on mismatch"""
    passed = lhs == rhs
    detail = None if passed else f"lhs={lhs} rhs={rhs}"
    return make_case(family, n, passed, detail, **params)


@dataclass
class VerificationReport:
    tool_version: str
    n: int
    root_exponent: int
    suite: str
    cases: List[CaseResult] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def passed(self) -> int:
        return sum(1 for case in self.cases if case.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def summary(self) -> Dict[str, int]:
        return {
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tool_version": self.tool_version,
            "n": self.n,
            "root_exponent": self.root_exponent,
            "suite": self.suite,
            "cases": [case.to_dict() for case in self.cases],
            "summary": self.summary,
        }


def exit_code_for(reports: List[VerificationReport]) -> int:
    return 0 if all(report.failed == 0 for report in reports) else 1


def render_json(reports: List[VerificationReport], tool_version: str) -> str:
    document = {
        "tool_version": tool_version,
        "exit_code": exit_code_for(reports),
        "reports": [report.to_dict() for report in reports],
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def render_csv(reports: List[VerificationReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        for case in report.cases:
            detail = (case.detail or "").replace("ω", "w").replace("ζ", "z")
            writer.writerow([
                report.suite,
                report.n,
                report.root_exponent,
                case.case_id,
                "true" if case.passed else "false",
                detail,
            ])
    return buffer.getvalue()


def render_text(reports: List[VerificationReport]) -> str:
    lines = []
    header = f"{'suite':<10} {'n':>3} {'t':>3} {'total':>6} {'passed':>6} {'failed':>6}"
    lines.append(header)
    lines.append("-" * len(header))
    for report in reports:
        lines.append(
            f"{report.suite:<10} {report.n:>3} {report.root_exponent:>3} "
            f"{report.total:>6} {report.passed:>6} {report.failed:>6}"
        )
    failures = [(report, case) for report in reports for case in report.cases if not case.passed]
    if failures:
        lines.append("")
        lines.append("FAILED CASES")
        for report, case in failures:
            lines.append(f"  [{report.suite} t={report.root_exponent}] {case.case_id}: {case.detail or ''}")
    lines.append("")
    lines.append("RESULT: " + ("PASS" if not failures else f"FAIL ({len(failures)} cases)"))
    return "\n".join(lines) + "\n"


def render_reports(reports: List[VerificationReport], fmt: str, tool_version: str) -> str:
    if fmt == "json":
        return render_json(reports, tool_version)
    if fmt == "csv":
        return render_csv(reports)
    if fmt == "text":
        return render_text(reports)
    raise ValueError(f"unknown report format: {fmt}")
