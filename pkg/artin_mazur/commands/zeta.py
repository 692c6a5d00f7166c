"""
zeta sub-command: the rational zeta function of a map and its cross-checks.
"""

import logging
from fractions import Fraction

import pandas as pd

from ..config import NUMERIC_CONFIG
from ..cover import build_cover, zeta_via_cover
from ..expmap import toral_count
from ..output import CommandResult
from ..sft import count_periodic_bruteforce, count_periodic_trace
from ..utils import format_number
from ..zetafn import (
    CountSequence,
    check_recurrence,
    counts_from_zeta,
    fit_rational_zeta,
    primitive_orbit_counts,
    radius_and_entropy,
    zeta_from_sft,
)

# Counts used for the rational fit of toral maps
TORAL_FIT_ORDER = 8


def default_mesh(fmap):
    """1/(4k) for circle maps, cylinders of depth 4 for shifts."""
    if fmap.kind == 'circle':
        return Fraction(1, 4 * fmap.k)
    return Fraction(1, 16)


def _zeta_and_direct_counts(config):
    spec = config.map_spec
    order = config.params['order']
    if spec.kind == 'sft':
        S = spec.subshift()
        zeta = zeta_from_sft(S.transition)
        if S.k ** order <= NUMERIC_CONFIG['bruteforce_limit']:
            direct = [count_periodic_bruteforce(S, n) for n in range(1, order + 1)]
            return zeta, 'trace', direct, 'bruteforce'
        return zeta, 'trace', [count_periodic_trace(S, n) for n in range(1, order + 1)], 'trace'

    if spec.kind == 'circle':
        fmap = spec.expanding_map()
        mesh = config.params.get('mesh') or default_mesh(fmap)
        zeta = zeta_via_cover(build_cover(fmap, mesh))
        return zeta, 'cover', [fmap.count_periodic(n) for n in range(1, order + 1)], 'exact'

    fit_order = max(order, TORAL_FIT_ORDER)
    counts = CountSequence(tuple(toral_count(spec.matrix, n) for n in range(1, fit_order + 1)))
    zeta = fit_rational_zeta(counts)
    if not check_recurrence(counts, zeta):
        raise ValueError(f"Rational fit {zeta} does not reproduce the toral counts")
    return zeta, 'toral', list(counts)[:order], 'toral'


def cmd_zeta(config):
    """
    Zeta function with its counts, primitive orbits and radius of convergence.

    Subshifts use 1/det(I - zA), circle maps the Markov cover formula and
    toral maps a rational fit of the determinant counts. The expansion of
    the zeta function is compared with a direct count source.
    """
    spec = config.map_spec
    order = config.params['order']
    logging.info(f"Computing zeta function of '{spec.name}' ...")
    zeta, method, direct, direct_method = _zeta_and_direct_counts(config)
    series = counts_from_zeta(zeta, order)
    agree = list(series.counts) == list(direct)
    if not agree:
        logging.error(f"Zeta expansion {series.counts} disagrees with {direct_method} {direct}.")
    radius = radius_and_entropy(zeta)
    primitive = primitive_orbit_counts(series)
    logging.info(f"Computing zeta function of '{spec.name}' ... done.")

    table = pd.DataFrame(
        {
            'n': list(range(1, order + 1)),
            f'N_n ({method})': list(series.counts),
            f'N_n ({direct_method})': list(direct),
            'primitive_orbits': list(primitive),
        }
    )
    lower, upper = radius.entropy_bounds
    data = {
        'map': spec.describe(),
        'zeta': str(zeta),
        'zeta_text': zeta.to_text(),
        'method': method,
        'counts': {method: list(series.counts), direct_method: list(direct)},
        'agree': agree,
        'rho': radius.rho,
        'rho_bracket': [radius.rho_lower, radius.rho_upper],
        'periodic_entropy': radius.periodic_entropy,
        'entropy_bracket': [lower, upper],
    }
    lines = [
        f"map: {spec.name} ({spec.kind})",
        f"zeta [{method}]: {zeta}",
        f"  {zeta.to_text()}",
        f"counts [{method}]: {', '.join(str(c) for c in series.counts)}",
        f"counts [{direct_method}]: {', '.join(str(c) for c in direct)}",
        f"agreement: {'yes' if agree else 'NO'}",
        f"radius: {format_number(radius.rho, 12)} "
        f"in [{format_number(radius.rho_lower, 12)}, {format_number(radius.rho_upper, 12)}]",
        f"periodic entropy: {format_number(radius.periodic_entropy, 12)}",
    ]
    return CommandResult('zeta', data, table, lines, passed=agree)
