"""
BOHRKIT Verify CLI Commands

`bohrkit verify <target>` runs one inequality over a seeded family and
writes a report; the exit status is 1 when an asserted check fails.
"""

import argparse

from .common import add_family_options, build_run_config, emit_reports, run_options
from ..core.config import Config
from ..core.run_config import PSI_CHOICES, VERIFY_TARGETS
from ..modules.inequalities import run_verification
from ..utils.formatters import Formatter


def register_verify_commands(subparsers: argparse._SubParsersAction) -> None:
    """Register verify."""
    verify = subparsers.add_parser(
        'verify',
        parents=[run_options()],
        help='Verify an inequality over a test family',
        description='Numerically verify one inequality and write a report'
    )
    verify.add_argument('target', choices=VERIFY_TARGETS, help='Inequality to verify')
    verify.add_argument('--N', dest='N', type=int, nargs='+', help='Orders N (Rogosinski, Parseval, Abel)')
    verify.add_argument('--r', type=float, help='Single radius instead of the r-grid')
    verify.add_argument('--r-grid', dest='r_grid', type=int, help='Number of radii (default: verify.r_grid)')
    verify.add_argument('--t-grid', dest='t_grid', type=int, help='Number of angles (default: verify.t_grid)')
    verify.add_argument('--slack', type=float, help='Override the family slack')
    verify.add_argument('--alpha', help='Complex alpha of the refined Bohr function, |alpha| < 1')
    verify.add_argument('--psi', choices=PSI_CHOICES, help='Schwarz function of the refined Bohr function')
    verify.add_argument('--uncoupled', action='store_true', help='Also run the uncoupled Rogosinski sweep (finding)')
    add_family_options(verify)


def handle_verify_command(args: argparse.Namespace, config: Config, formatter: Formatter) -> int:
    """Run the target and emit its reports."""
    run = build_run_config(args, config)
    reports = run_verification(run)
    return emit_reports(reports, run, args, config, formatter)
