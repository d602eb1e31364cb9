"""
BOHRKIT Shared Command Options

Run options shared by every computing subcommand, and the code that turns
results into a console table plus one report file per run.
"""

import argparse
from pathlib import Path
from typing import Any, List, Sequence

from ..core.config import Config
from ..core.reports import FORMATS, VerificationReport, write_report, write_table
from ..core.run_config import FAMILY_NAMES, RunConfig
from ..utils.formatters import Formatter


def run_options() -> argparse.ArgumentParser:
    """Parent parser with the sweep and output flags."""
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group('run options')
    group.add_argument('--seed', type=int, help='Root seed for sampled families (default: sweep.seed)')
    group.add_argument('--samples', type=int, help='Family size (default: sweep.samples)')
    group.add_argument('--workers', type=int, help='Worker threads; output does not depend on it')
    group.add_argument('--tol', type=float, help='Numerical tolerance (default: numerics.tol)')
    group.add_argument('--format', choices=FORMATS, help='Report format (default: csv)')
    group.add_argument('--output-dir', dest='output_dir', help='Report directory (default: $BOHRKIT_OUTPUT_DIR or cwd)')
    return parent


def add_family_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--family', choices=FAMILY_NAMES, help='Test-function family')
    parser.add_argument('--D', dest='D', type=int, help='Truncation degree (default: series.degree)')
    parser.add_argument('--d', dest='d', type=int, help='Matrix dimension')
    parser.add_argument('--poly-degree', dest='poly_degree', type=int, help='Degree of random polynomials (default: 6)')


def build_run_config(args: argparse.Namespace, config: Config) -> RunConfig:
    return RunConfig.from_namespace(args, config)


def output_directory(args: argparse.Namespace, config: Config) -> Path:
    explicit = getattr(args, 'output_dir', None)
    return Path(explicit).expanduser() if explicit else config.output_dir


def display_status(report: VerificationReport) -> str:
    """Status shown on the console; unasserted reports are findings."""
    return report.status if report.asserted else 'finding'


def emit_table(
    headers: Sequence[str],
    rows: List[Sequence[Any]],
    run: RunConfig,
    args: argparse.Namespace,
    config: Config,
    formatter: Formatter
) -> int:
    """Print a constants table and write it as `<command>-<seed>.<fmt>`."""
    path = write_table(headers, rows, run.report_name, run.seed, run.output, output_directory(args, config))
    if not getattr(args, 'quiet', False):
        print(formatter.simple_table(list(headers), [list(row) for row in rows]))
        print()
        print(formatter.info(f"Report written to {path}"))
    return 0


def emit_reports(
    reports: List[VerificationReport],
    run: RunConfig,
    args: argparse.Namespace,
    config: Config,
    formatter: Formatter
) -> int:
    """
    Print a summary, write the report file and return the exit code.

    Returns:
        1 if any asserted report failed, else 0
    """
    path = write_report(reports, run.report_name, run.seed, run.output, output_directory(args, config))
    failed = [r for r in reports if r.is_failure]

    if not getattr(args, 'quiet', False):
        rows = [
            [r.inequality_id, r.family, r.samples, r.min_margin, r.slack,
             len(r.violations), formatter.status_icon(display_status(r))]
            for r in reports
        ]
        print(formatter.simple_table(
            ['inequality', 'family', 'samples', 'min_margin', 'slack', 'violations', 'status'], rows
        ))
        print()
        print(formatter.info(f"Report written to {path}"))

    if failed:
        names = ", ".join(r.inequality_id for r in failed)
        print(formatter.error(f"Verification failed: {names}"))
        return 1
    return 0
