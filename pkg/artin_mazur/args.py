"""
Command-line argument parser configuration.
"""

import argparse
import sys

from .utils import to_fraction

COMMANDS = {
    'zeta': 'Rational zeta function, counts and radius of convergence',
    'count': 'Periodic point counts by every available method',
    'entropy': 'Entropy estimate compared with periodic growth',
    'shadow': 'Shadow a pseudo-orbit read from a CSV file',
    'cover': 'Build and verify a Markov cover',
    'check': 'Run the acceptance checks at desk scale',
}


def fraction_type(value):
    """
    Parse a positive rational command-line value.

    Args:
        value: '1/8', '0.125' or '2^-3'

    Returns:
        Fraction

    Raises:
        ArgumentTypeError if not a positive rational
    """
    try:
        f = to_fraction(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    if f <= 0:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return f


def positive_int(value):
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer")
    return n


def _add_common_arguments(parser):
    # Map
    parser.add_argument('--map', type=str, default=None,
                        help='Map config JSON file, or a built-in map name '
                             '(fibonacci, full2, full3, circle2, circle3, cat, torus2)')

    # Orders and scales
    parser.add_argument('--order', type=positive_int, default=8,
                        help='Number of periodic counts N_1..N_order (default 8)')
    parser.add_argument('--mesh', type=fraction_type, default=None,
                        help='Markov cover mesh, e.g. 1/8 (default 1/(4k) for circle maps)')
    parser.add_argument('--eps', type=fraction_type, default=None,
                        help='Separation scale for entropy estimates, e.g. 2^-6')
    parser.add_argument('--n-max', dest='n_max', type=positive_int, default=None,
                        help='Largest n of the entropy ladder')
    parser.add_argument('--beta', type=fraction_type, default=None,
                        help='Shadowing distance (default a safe value for the map)')
    parser.add_argument('--pseudo-orbit', dest='pseudo_orbit', type=str, default=None,
                        help='CSV file with the pseudo-orbit to shadow')

    # Output
    output = parser.add_mutually_exclusive_group()
    output.add_argument('--json', action='store_true', default=False,
                        help='Print machine-readable JSON')
    output.add_argument('--csv', action='store_true', default=False,
                        help='Print the result table as CSV')
    parser.add_argument('--seed', type=int, default=0,
                        help='Seed for randomised checks (default 0)')

    # Development
    parser.add_argument('--dev', action='store_true', default=False,
                        help='Debug logging')


def create_parser(script_name='artin-mazur'):
    """
    Create the argument parser with one sub-command per experiment.

    Args:
        script_name: Name of the script (used in help text)

    Returns:
        ArgumentParser instance
    """
    parser = argparse.ArgumentParser(
        prog=script_name,
        description="Periodic points, zeta functions and entropy of expanding maps",
    )
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for name, help_text in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text, description=help_text)
        _add_common_arguments(sub)
    return parser


def parse_args(args=None):
    """
    Parse command-line arguments.

    Args:
        args: List of argument strings. If None, uses sys.argv

    Returns:
        Parsed arguments namespace
    """
    script_name = 'artin-mazur' if not sys.argv[0] else sys.argv[0].split('/')[-1]
    parser = create_parser(script_name)
    return parser.parse_args(args)
