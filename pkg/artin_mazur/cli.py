"""
Main entry point and CLI for artin-mazur.
"""

import json
import logging
import sys

from .args import parse_args
from .commands import register_all_commands
from .data_loader import ExperimentConfig, load_map_config
from .output import emit

# Sub-commands that run without --map
MAPLESS_COMMANDS = ('check',)


def setup_logging(args):
    """
    Configure logging based on arguments.

    Args:
        args: Parsed arguments namespace
    """
    if args.dev:
        level = logging.DEBUG
    else:
        level = logging.INFO

    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(message)s"
    )

    logging.getLogger().setLevel(level)


def build_experiment(parsed_args):
    """
    Validate the map and collect command parameters.

    Args:
        parsed_args: Parsed arguments namespace

    Returns:
        ExperimentConfig
    """
    if parsed_args.command in MAPLESS_COMMANDS and parsed_args.map is None:
        map_spec = None
    else:
        map_spec = load_map_config(parsed_args.map)
    params = {
        'order': parsed_args.order,
        'mesh': parsed_args.mesh,
        'eps': parsed_args.eps,
        'n_max': parsed_args.n_max,
        'beta': parsed_args.beta,
        'pseudo_orbit': parsed_args.pseudo_orbit,
    }
    if parsed_args.json:
        output = 'json'
    elif parsed_args.csv:
        output = 'csv'
    else:
        output = 'text'
    return ExperimentConfig(map_spec, parsed_args.command, params, output, parsed_args.seed)


def main(args=None):
    """
    Main entry point for the artin-mazur CLI.

    Args:
        args: Optional list of command-line arguments

    Returns:
        CommandResult of the sub-command; exits with status 1 on errors or
        failed cross-checks
    """
    parsed_args = parse_args(args)
    setup_logging(parsed_args)

    if parsed_args.dev:
        logging.debug('Development mode activated.')

    commands = register_all_commands()
    try:
        config = build_experiment(parsed_args)
        result = commands[config.command](config)
    except (ValueError, OSError, json.JSONDecodeError) as e:
        logging.error(f"{parsed_args.command}: {e}")
        sys.exit(1)

    emit(result, config.output)
    if not result.passed:
        logging.error(f"{parsed_args.command}: cross-checks failed.")
        sys.exit(1)
    return result


if __name__ == '__main__':
    main()
