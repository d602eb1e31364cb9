"""
BOHRKIT Constants CLI Commands

Tables of ξ_p, the roots r*_N and the ℓ_q² witness radius.
"""

import argparse

from .common import build_run_config, emit_table, run_options
from ..core.config import Config
from ..core.errors import PreconditionError
from ..modules.radii import lq_witness, lq_witness_radius, lq_witness_sup, rstar, xi_argmin, xi_p
from ..utils.formatters import Formatter
from ..utils.logger import get_logger


logger = get_logger('bohrkit.commands')


def register_constants_commands(subparsers: argparse._SubParsersAction) -> None:
    """Register xi, rstar and lq-witness."""
    parent = run_options()

    xi = subparsers.add_parser('xi', parents=[parent], help='Table of xi_p over a p-grid')
    xi.add_argument('--p', type=float, nargs='+', default=[1.0, 1.5, 2.0, 3.0], help='Exponents p >= 1')

    star = subparsers.add_parser('rstar', parents=[parent], help='Root r*_N of Psi_{p,N} over a (p, N) grid')
    star.add_argument('--p', type=float, nargs='+', default=[1.0], help='Exponents p >= 1')
    star.add_argument('--N', dest='N', type=int, nargs='+', default=[1], help='Orders N >= 1')

    witness = subparsers.add_parser('lq-witness', parents=[parent], help='Radius bound of the l_q^2 witness')
    witness.add_argument('--p', type=float, nargs='+', default=[1.0], help='Exponents p >= 1')
    witness.add_argument('--q', type=float, default=2.0, help='Exponent q of l_q^2, q > p')
    witness.add_argument('--N', dest='N', type=int, nargs='+', default=[1], help='Orders N >= 1')
    witness.add_argument('--a', type=float, nargs='+', help='Witness parameters in (0, 1)')


def handle_constants_command(args: argparse.Namespace, config: Config, formatter: Formatter) -> int:
    """Route xi, rstar and lq-witness."""
    run = build_run_config(args, config)

    if run.command == 'xi':
        return _handle_xi(run, args, config, formatter)
    elif run.command == 'rstar':
        return _handle_rstar(run, args, config, formatter)
    return _handle_lq_witness(run, args, config, formatter)


def _handle_xi(run, args, config, formatter) -> int:
    rows = []
    for p in run.p_grid:
        argmin = xi_argmin(p, run.tol, run.grid_points)
        rows.append([p, xi_p(p, run.tol, run.grid_points), argmin])
    return emit_table(['p', 'xi_p', 'argmin_a'], rows, run, args, config, formatter)


def _handle_rstar(run, args, config, formatter) -> int:
    """
    A single (p, N) propagates the precondition error; on a grid the
    offending rows are marked and the rest computed.
    """
    single = len(run.p_grid) == 1 and len(run.N_grid) == 1
    rows = []
    for p in run.p_grid:
        xi = xi_p(p, run.tol, run.grid_points)
        for N in run.N_grid:
            try:
                rows.append([p, N, xi, rstar(p, N, run.tol, run.grid_points), ''])
            except PreconditionError as e:
                if single:
                    raise
                logger.warning("rstar(%g, %d): %s", p, N, e)
                rows.append([p, N, xi, None, 'xi_p >= N'])
    return emit_table(['p', 'N', 'xi_p', 'rstar', 'note'], rows, run, args, config, formatter)


def _handle_lq_witness(run, args, config, formatter) -> int:
    q = run.lq_exponent
    rows = []
    for p in run.p_grid:
        for N in run.N_grid:
            for a in run.a_grid:
                bound = lq_witness(p, q, N, a)
                bisected = lq_witness_radius(p, q, a, run.tol).value
                rows.append([p, q, N, a, bound, bisected, lq_witness_sup(q, a)])
    headers = ['p', 'q', 'N', 'a', 'radius_bound', 'bisection', 'sup_norm']
    return emit_table(headers, rows, run, args, config, formatter)
