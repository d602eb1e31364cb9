"""
BOHRKIT Config CLI Commands

Command handlers for configuration management.
"""

import argparse
import json

from ..core.config import SECTIONS, Config
from ..utils.formatters import Formatter, format_number
from ..utils.validators import validate_config_key


def register_config_commands(subparsers: argparse._SubParsersAction) -> None:
    """Register config subcommands."""
    config = subparsers.add_parser(
        'config',
        help='Configuration management',
        description='View and modify BOHRKIT defaults'
    )

    config_sub = config.add_subparsers(dest='config_command', help='Config commands')

    show = config_sub.add_parser('show', help='Show current configuration')
    show.add_argument('key', nargs='?', help='Specific key to show')
    show.add_argument('--json', action='store_true', help='Output as JSON')

    get = config_sub.add_parser('get', help='Get a config value')
    get.add_argument('key', help='Configuration key (section.setting)')

    set_cmd = config_sub.add_parser('set', help='Set a config value')
    set_cmd.add_argument('key', help='Configuration key (section.setting)')
    set_cmd.add_argument('value', help='Value to set')

    reset = config_sub.add_parser('reset', help='Reset configuration')
    reset.add_argument('--all', action='store_true', help='Reset all settings')
    reset.add_argument('key', nargs='?', help='Specific key to reset')

    config_sub.add_parser('path', help='Show config file path')


def handle_config_command(args: argparse.Namespace, config: Config, formatter: Formatter) -> int:
    """Handle config commands."""
    cmd = getattr(args, 'config_command', None) or 'show'

    if cmd == 'show':
        return _handle_show(args, formatter, config)
    elif cmd == 'get':
        return _handle_get(args, formatter, config)
    elif cmd == 'set':
        return _handle_set(args, formatter, config)
    elif cmd == 'reset':
        return _handle_reset(args, formatter, config)
    elif cmd == 'path':
        print(config.config_path)
        return 0
    print(formatter.error(f"Unknown config command: {cmd}"))
    return 2


def _handle_show(args: argparse.Namespace, formatter: Formatter, config: Config) -> int:
    key = getattr(args, 'key', None)
    as_json = getattr(args, 'json', False)

    if key:
        validate_config_key(key, SECTIONS)
        value = config.get(key)
        print(json.dumps({key: value}, indent=2) if as_json else f"{key} = {value}")
        return 0

    data = config.to_dict()
    if as_json:
        print(json.dumps(data, indent=2))
        return 0

    print(formatter.bold(f"BOHRKIT configuration ({config.config_path})"))
    print()
    for section, values in data.items():
        print(f"  {formatter.info('[' + section + ']')}")
        print(formatter.key_value(values, indent=2))
    print()
    return 0


def _handle_get(args: argparse.Namespace, formatter: Formatter, config: Config) -> int:
    validate_config_key(args.key, SECTIONS)
    print(format_number(config.get(args.key)))
    return 0


def _handle_set(args: argparse.Namespace, formatter: Formatter, config: Config) -> int:
    validate_config_key(args.key, SECTIONS)
    config.set(args.key, args.value)
    config.save()
    print(formatter.success(f"Set {args.key} = {config.get(args.key)}"))
    return 0


def _handle_reset(args: argparse.Namespace, formatter: Formatter, config: Config) -> int:
    if getattr(args, 'all', False):
        config.reset()
        config.save()
        print(formatter.success("All configuration reset to defaults."))
        return 0

    key = getattr(args, 'key', None)
    if not key:
        print(formatter.warning("Specify --all or a key to reset"))
        return 2

    validate_config_key(key, SECTIONS)
    default = config.get_default(key)
    config.set(key, default)
    config.save()
    print(formatter.success(f"Reset {key} to default: {default}"))
    return 0
