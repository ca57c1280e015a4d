"""
app.py - Command-line application for lpbetti.

This module builds the argparse parser. Each module in lpbetti.commands
registers its handler with the `command` decorator; importing the package
registers them all.
"""

import argparse
import logging
from typing import Callable, Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)

# Exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_ENGINE = 3

Argument = Tuple[Tuple[str, ...], dict]

# name -> (handler, help text, arguments)
COMMANDS: Dict[str, Tuple[Callable, str, List[Argument]]] = {}


def arg(*flags, **kwargs) -> Argument:
    """An argparse argument spec: flags and keyword arguments for add_argument."""
    return flags, kwargs


def command(name: str, help_text: str, *arguments: Argument):
    """Registers `handler(args) -> exit code` as the subcommand `name`."""
    def decorator(handler):
        COMMANDS[name] = (handler, help_text, list(arguments))
        return handler
    return decorator


# Arguments shared by every subcommand
POSET = arg('poset', help='Poset file, or the name of a bundled poset (e.g. v.poset)')
SLOTS = arg('-n', dest='n', required=True, help='Number of letterplace slots (n >= 1)')
WORKERS = arg('--workers', default='1', help='Worker processes for per-multidegree work (default: 1)')


def build_parser() -> argparse.ArgumentParser:
    """Parser with one subparser per registered command."""
    from . import commands  # noqa: F401  (registers the handlers)

    parser = argparse.ArgumentParser(
        prog='run.py',
        description='Betti numbers of letterplace ideals L(n,P) of finite posets')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log at DEBUG level')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name, (handler, help_text, arguments) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text, description=help_text)
        for flags, kwargs in arguments:
            sub.add_argument(*flags, **kwargs)
        sub.set_defaults(handler=handler)
    return parser


def dispatch(args: argparse.Namespace) -> int:
    logger.debug("Running command %s", args.command)
    return args.handler(args)


def main(argv: Optional[List[str]] = None) -> int:
    """Parses argv and runs the selected command; returns the exit code."""
    args = build_parser().parse_args(argv)
    return dispatch(args)
