"""
BOHRKIT CLI - Main Entry Point

Bohr-radius constants and numerical verification of Bohr and Rogosinski
type inequalities for scalar and operator-valued holomorphic functions.
"""

import argparse
import os
import sys
from typing import List, Optional

# Add package to path if running directly
if __name__ == '__main__':
    sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bohrkit import __version__
from bohrkit.core.config import Config
from bohrkit.core.errors import BohrkitError, ConfigurationError
from bohrkit.utils.formatters import Colors, Formatter
from bohrkit.utils.logger import get_logger, run_context, setup_logging

from bohrkit.commands.constants_commands import register_constants_commands, handle_constants_command
from bohrkit.commands.radius_commands import register_radius_commands, handle_radius_command
from bohrkit.commands.verify_commands import register_verify_commands, handle_verify_command
from bohrkit.commands.config_commands import register_config_commands, handle_config_command


EXIT_USAGE = 2

HANDLERS = {
    'xi': handle_constants_command,
    'rstar': handle_constants_command,
    'lq-witness': handle_constants_command,
    'radius': handle_radius_command,
    'convexity': handle_radius_command,
    'chains': handle_radius_command,
    'verify': handle_verify_command,
    'config': handle_config_command,
}


def create_parser() -> argparse.ArgumentParser:
    """Create the main argument parser."""
    parser = argparse.ArgumentParser(
        prog='bohrkit',
        description='BOHRKIT - Bohr radius constants and inequality verification',
        epilog='Run "bohrkit <command> --help" for more information on a command.',
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    parser.add_argument('--version', '-V', action='version', version=f'BOHRKIT v{__version__}')
    parser.add_argument('--verbose', '-v', action='count', default=0, help='Increase verbosity (use -vv for debug)')
    parser.add_argument('--quiet', '-q', action='store_true', help='Only print errors')
    parser.add_argument('--no-color', action='store_true', help='Disable colored output')
    parser.add_argument('--config', '-c', type=str, help='Path to config file')

    subparsers = parser.add_subparsers(
        dest='command',
        title='commands',
        description='Available commands',
        metavar='<command>'
    )

    register_constants_commands(subparsers)
    register_radius_commands(subparsers)
    register_verify_commands(subparsers)
    register_config_commands(subparsers)

    return parser


def _log_level(args: argparse.Namespace, config: Config) -> str:
    if args.verbose == 1:
        return 'INFO'
    if args.verbose >= 2:
        return 'DEBUG'
    if args.quiet:
        return 'ERROR'
    return config.general.log_level


def _run_label(args: argparse.Namespace, config: Config) -> str:
    """`<report name>#<seed>`, e.g. `verify-bohr#7`; config commands have no seed."""
    name = args.command
    target = getattr(args, 'target', None)
    if target:
        name = f"{name}-{target}"
    if args.command == 'config':
        return name
    seed = getattr(args, 'seed', None)
    return f"{name}#{config.sweep.seed if seed is None else seed}"


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point.

    Returns:
        0 pass, 1 verification failure, 2 usage error, 3 non-convergence
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else 0

    try:
        config = Config.load(args.config)
    except ConfigurationError as e:
        print(f"{Colors.RED}Configuration error: {e}{Colors.RESET}", file=sys.stderr)
        return e.exit_code

    use_color = not (args.no_color or os.environ.get('NO_COLOR') or not config.general.color_output)
    if not use_color:
        Colors.disable()

    log_dir = config.log_dir if config.general.log_to_file else None
    setup_logging(_log_level(args, config), log_dir=log_dir, use_color=use_color)
    logger = get_logger('bohrkit')

    if not args.command:
        parser.print_help()
        return 0

    formatter = Formatter(use_color=use_color)

    try:
        with run_context(_run_label(args, config)):
            return HANDLERS[args.command](args, config, formatter)

    except KeyboardInterrupt:
        print(f"\n{Colors.YELLOW}Interrupted.{Colors.RESET}")
        return 130

    except BohrkitError as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"{Colors.RED}{e.to_user_message()}{Colors.RESET}", file=sys.stderr)
        return e.exit_code


def cli():
    """Entry point for console script."""
    sys.exit(main())


if __name__ == '__main__':
    cli()
