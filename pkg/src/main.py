"""poisson2 - Poisson cohomology of planar germs f(1+h)Dx^Dy
Main entry point for the command line.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

# Add this directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from command import natural
from command_factory import CommandFactory
from errors import DomainError, InputError
from formatting import dumps, render_text
from utils import Config, logger, setup_logging

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subcommand per registered command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), help="report format (default from config: text)")
    common.add_argument("--config", help="JSON configuration file")
    common.add_argument("--jobs", type=natural, help="worker threads for oracle rows")
    common.add_argument("--verbose", action="store_true", help="log progress (INFO)")
    common.add_argument("--debug", action="store_true", help="log every degree (DEBUG)")

    parser = argparse.ArgumentParser(
        prog="poisson2",
        description="Exact Poisson cohomology and normal forms of germs f(1+h)Dx^Dy.",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for name in CommandFactory.get_available_commands():
        command = CommandFactory.get_command(name)
        subparser = subparsers.add_parser(name, help=command.help, parents=[common])
        command.add_arguments(subparser)
    return parser


def _log_level(args: argparse.Namespace, config: Config) -> int:
    if args.debug:
        return logging.DEBUG
    if args.verbose:
        return logging.INFO
    return getattr(logging, str(config.get("log_level", "WARNING")).upper(), logging.WARNING)


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    config = Config(args.config)
    setup_logging(_log_level(args, config), config.get("log_file"))

    command = CommandFactory.get_command(args.command)
    try:
        payload = command.run(args, config)
    except InputError as e:
        logger.debug(f"{args.command}: {e}")
        print(f"poisson2 {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        logger.debug(f"{args.command}: {e}")
        print(f"poisson2 {args.command}: {e}", file=sys.stderr)
        return EXIT_DOMAIN

    output_format = args.format or config.get("format", "text")
    print(dumps(payload) if output_format == "json" else render_text(payload))
    return command.exit_code(payload)


if __name__ == "__main__":
    sys.exit(main())
