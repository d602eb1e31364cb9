"""
BOHRKIT Radius CLI Commands

Family Bohr radii, the convexity constant A_{p,N} and the bound chains
that tie them together.
"""

import argparse
from typing import List

from .common import add_family_options, build_run_config, emit_reports, emit_table, run_options
from ..core.config import Config
from ..core.errors import ValidationError
from ..core.reports import VerificationReport
from ..core.run_config import RunConfig
from ..modules.radii import (
    NormedSpace,
    RadiusParams,
    check_bound_chains,
    complex_reference_estimates,
    estimate_A_pN,
    family_radius_profile,
    lq_witness_radius,
    profile_ordering_check,
)
from ..modules.series import FamilySpec
from ..utils.formatters import Formatter
from ..utils.logger import get_logger


logger = get_logger('bohrkit.commands')


def register_radius_commands(subparsers: argparse._SubParsersAction) -> None:
    """Register radius, convexity and chains."""
    parent = run_options()

    radius = subparsers.add_parser('radius', parents=[parent], help='Family estimates of r_p <= R_pN <= r~_p')
    radius.add_argument('--p', type=float, nargs='+', default=[1.0], help='Exponents p >= 1')
    radius.add_argument('--N', dest='N', type=int, nargs='+', default=[1], help='Orders N >= 1')
    add_family_options(radius)

    for name, help_text in (
        ('convexity', 'Sampled upper estimate of A_{p,N}'),
        ('chains', 'Check the bound chains between A_{p,N}, R_{p,N} and r_p'),
    ):
        cmd = subparsers.add_parser(name, parents=[parent], help=help_text)
        cmd.add_argument('--p', type=float, nargs='+', default=[2.0], help='Exponents p >= 2')
        cmd.add_argument('--N', dest='N', type=int, nargs='+', default=[1], help='Orders N >= 1')
        cmd.add_argument('--space', choices=['complex', 'lq'], help='Target space (default: complex)')
        cmd.add_argument('--q', type=float, help='Exponent of l_q^d (default: max(2, 2 * largest p))')
        cmd.add_argument('--phase-convention', dest='phase_convention',
                         choices=['power_phase', 'common_phase'], help='Rotation of the tail (default: power_phase)')
        cmd.add_argument('--theta-grid', dest='theta_grid', type=int, help='Phase grid (default: numerics.theta_grid)')
        add_family_options(cmd)
        if name == 'chains':
            cmd.add_argument('--a', type=float, nargs='+', help='Witness parameters for the l_q radius estimate')


def handle_radius_command(args: argparse.Namespace, config: Config, formatter: Formatter) -> int:
    """Route radius, convexity and chains."""
    run = build_run_config(args, config)

    if run.command == 'radius':
        return _handle_radius(run, args, config, formatter)
    elif run.command == 'convexity':
        return _handle_convexity(run, args, config, formatter)
    return _handle_chains(run, args, config, formatter)


def _family(run: RunConfig, dim: int = 1) -> FamilySpec:
    return FamilySpec(
        name=run.family or 'mobius',
        samples=run.samples,
        seed=run.seed,
        dim=dim,
        degree=run.D,
        poly_degree=run.poly_degree,
        grid=run.boundary_grid,
    )


def _space(run: RunConfig) -> NormedSpace:
    return NormedSpace(run.space, run.lq_exponent, run.dim_for(scalar=False))


def _handle_radius(run, args, config, formatter) -> int:
    family = _family(run, run.dim_for(scalar=True))
    rows = []
    for p in run.p_grid:
        for N in run.N_grid:
            profile = family_radius_profile(family, RadiusParams(p, N, run.tol), run.workers)
            rows.append([
                p, N, profile.r_p.value, profile.R_pN.value, profile.r_tilde.value,
                profile.R_pN.kind, profile.R_pN.bracket_width,
            ])
    headers = ['p', 'N', 'r_p', 'R_pN', 'r_tilde', 'kind', 'bracket_width']
    return emit_table(headers, rows, run, args, config, formatter)


def _handle_convexity(run, args, config, formatter) -> int:
    space = _space(run)
    rows = []
    for p in run.p_grid:
        for N in run.N_grid:
            est = estimate_A_pN(p, N, space, run.phase_convention, run.samples, run.seed,
                                run.theta_grid, run.tol, run.workers)
            rows.append([p, N, space.label, est.phase_convention, est.lambda_upper,
                         est.samples, est.skipped, est.degenerate])
    headers = ['p', 'N', 'space', 'convention', 'A_upper', 'samples', 'skipped', 'degenerate']
    return emit_table(headers, rows, run, args, config, formatter)


def _handle_chains(run, args, config, formatter) -> int:
    """
    For ℂ the radii come from closed forms where known and from the family
    otherwise, and the family ordering r_p ≤ R_pN ≤ r~_p is checked too.
    For ℓ_q^d the witness radius at the largest a stands in for both radii.
    """
    space = _space(run)
    if run.space == 'lq' and not run.lq_exponent > max(run.p_grid):
        raise ValidationError(
            f"--q must exceed every --p for the l_q witness; got q = {run.lq_exponent:g}, "
            f"largest p = {max(run.p_grid):g}",
            field="q"
        )
    reports: List[VerificationReport] = []
    for p in run.p_grid:
        for N in run.N_grid:
            A_est = estimate_A_pN(p, N, space, run.phase_convention, run.samples, run.seed,
                                  run.theta_grid, run.tol, run.workers)
            if run.space == 'complex':
                family = _family(run)
                R_est, rp_est = complex_reference_estimates(p, N, family, run.tol, run.workers)
                profile = family_radius_profile(family, RadiusParams(p, N, run.tol), run.workers)
                ordering = profile_ordering_check(profile, run.effective_slack(family.name), family.name)
                ordering.seed = run.seed
                ordering.family = f"{family.name};p={p:g}"
                ordering.grid = {'N': N}
                reports.append(ordering)
            else:
                R_est = rp_est = lq_witness_radius(p, run.lq_exponent, max(run.a_grid), run.tol)
            chain = check_bound_chains(p, N, A_est, R_est, rp_est, space=space.label)
            chain.family = f"{space.label};p={p:g}"
            chain.grid = {'N': N}
            reports.append(chain)
            logger.info("chains p=%g N=%d: A=%r R=%r r_p=%r", p, N, A_est.lambda_upper, R_est.value, rp_est.value)
    return emit_reports(reports, run, args, config, formatter)
