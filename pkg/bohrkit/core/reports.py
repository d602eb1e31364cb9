"""
BOHRKIT Reports Module

Verification reports: per-inequality sweep results, order-independent
merging, and byte-stable CSV/JSON output.
"""

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

from .errors import ReportError, ValidationError
from ..utils.logger import get_logger


logger = get_logger('bohrkit.reports')

STATUSES = ('pass', 'fail', 'degenerate')
FORMATS = ('csv', 'json')

CSV_COLUMNS = [
    'inequality_id', 'family', 'seed', 'samples', 'grid',
    'min_margin', 'slack', 'status', 'violations',
]

SLACK_CLOSED = 1e-9
SLACK_RANDOM = 1e-7


@dataclass(frozen=True, order=True)
class Violation:
    """An input whose margin fell below −slack."""
    fingerprint: str
    margin: float
    location: str = ""  # e.g. "t=0.785398,r=0.5"

    def to_dict(self) -> Dict[str, Any]:
        return {'fingerprint': self.fingerprint, 'margin': self.margin, 'location': self.location}


@dataclass
class VerificationReport:
    """
    Result of checking one inequality over a grid of inputs.

    min_margin is the minimum of RHS − LHS over every evaluated point.
    The report fails iff min_margin < −slack. Reports built with
    asserted=False are findings: they carry a status but never fail a run.
    """
    inequality_id: str
    slack: float
    family: str = ""
    grid: Dict[str, int] = field(default_factory=dict)
    samples: int = 1
    seed: int = 0
    min_margin: float = math.inf
    violations: List[Violation] = field(default_factory=list)
    degenerate: bool = False
    asserted: bool = True
    details: Dict[str, Any] = field(default_factory=dict)

    def record(self, margin: float, fingerprint: str = "", location: str = "") -> None:
        """Fold one evaluated margin into the report."""
        margin = float(margin)
        if math.isnan(margin):
            raise ValidationError(f"NaN margin for {self.inequality_id} at {location or fingerprint}", field="margin")
        if margin < self.min_margin:
            self.min_margin = margin
        if margin < -self.slack:
            self.violations.append(Violation(fingerprint, margin, location))

    @property
    def status(self) -> str:
        if self.min_margin < -self.slack:
            return 'fail'
        if self.degenerate:
            return 'degenerate'
        return 'pass'

    @property
    def is_failure(self) -> bool:
        return self.asserted and self.status == 'fail'

    @property
    def grid_label(self) -> str:
        return ";".join(f"{k}={v}" for k, v in sorted(self.grid.items()))

    def to_row(self) -> Dict[str, str]:
        return {
            'inequality_id': self.inequality_id,
            'family': self.family,
            'seed': str(self.seed),
            'samples': str(self.samples),
            'grid': self.grid_label,
            'min_margin': repr(float(self.min_margin)),
            'slack': repr(float(self.slack)),
            'status': self.status,
            'violations': str(len(self.violations)),
        }

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'inequality_id': self.inequality_id,
            'family': self.family,
            'seed': self.seed,
            'samples': self.samples,
            'grid': dict(sorted(self.grid.items())),
            'min_margin': float(self.min_margin),
            'slack': float(self.slack),
            'status': self.status,
            'asserted': self.asserted,
            'violations': [v.to_dict() for v in sorted(self.violations)],
            'details': {k: self.details[k] for k in sorted(self.details)},
        }
        return data


def _worst_first(report: VerificationReport):
    return (report.min_margin, json.dumps(report.to_dict(), sort_keys=True, default=str))


def merge_reports(reports: Sequence[VerificationReport]) -> VerificationReport:
    """
    Combine per-sample reports of one inequality.

    Associative and order-independent: minimum margin, violations sorted,
    samples summed, degenerate only when every part is, details taken from
    the worst part.
    """
    if not reports:
        raise ValidationError("Nothing to merge", field="reports")
    ids = {r.inequality_id for r in reports}
    if len(ids) != 1:
        raise ValidationError(f"Cannot merge reports of different inequalities: {sorted(ids)}", field="reports")

    worst = min(reports, key=_worst_first)
    return VerificationReport(
        inequality_id=worst.inequality_id,
        slack=max(r.slack for r in reports),
        family=worst.family,
        grid=dict(worst.grid),
        samples=sum(r.samples for r in reports),
        seed=min(r.seed for r in reports),
        min_margin=min(r.min_margin for r in reports),
        violations=sorted(v for r in reports for v in r.violations),
        degenerate=all(r.degenerate for r in reports),
        asserted=any(r.asserted for r in reports),
        details=dict(worst.details),
    )


def render_report(reports: Iterable[VerificationReport], fmt: str = 'csv') -> str:
    """Serialize reports to CSV or JSON text."""
    reports = list(reports)
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator='\n')
        writer.writeheader()
        for report in reports:
            writer.writerow(report.to_row())
        return buffer.getvalue()
    if fmt == 'json':
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    raise ValidationError(f"Invalid format: {fmt}. Valid: {', '.join(FORMATS)}", field="format")


def render_table(headers: Sequence[str], rows: Iterable[Sequence[Any]], fmt: str = 'csv') -> str:
    """Serialize a constants table; floats keep full repr precision."""
    rows = [[repr(float(c)) if isinstance(c, float) else c for c in row] for row in rows]
    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(headers)
        writer.writerows(rows)
        return buffer.getvalue()
    if fmt == 'json':
        return json.dumps([dict(zip(headers, row)) for row in rows], indent=2) + "\n"
    raise ValidationError(f"Invalid format: {fmt}. Valid: {', '.join(FORMATS)}", field="format")


def _write_text(text: str, name: str, seed: int, fmt: str, directory: Optional[Path]) -> Path:
    directory = Path(directory) if directory else Path.cwd()
    path = directory / f"{name}-{seed}.{fmt}"
    try:
        directory.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    except OSError as e:
        raise ReportError(f"Cannot write report: {e}", path=str(path))
    logger.info("Report written to %s", path)
    return path


def write_report(
    reports: Iterable[VerificationReport],
    command: str,
    seed: int,
    fmt: str = 'csv',
    directory: Optional[Path] = None
) -> Path:
    """
    Write `<command>-<seed>.<fmt>` into directory.

    Returns:
        Path of the written file
    """
    return _write_text(render_report(reports, fmt), command, seed, fmt, directory)


def write_table(
    headers: Sequence[str],
    rows: Iterable[Sequence[Any]],
    command: str,
    seed: int = 0,
    fmt: str = 'csv',
    directory: Optional[Path] = None
) -> Path:
    """Write a constants table as `<command>-<seed>.<fmt>`."""
    return _write_text(render_table(headers, rows, fmt), command, seed, fmt, directory)
