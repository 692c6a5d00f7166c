"""
count sub-command: periodic point counts by every available method.
"""

import logging

from ..config import NUMERIC_CONFIG
from ..cover import build_cover, count_periodic_via_cover
from ..expmap import periodic_points, toral_count
from ..output import CommandResult, counts_table
from ..sft import count_periodic_bruteforce, count_periodic_trace
from .zeta import default_mesh

# Largest period set enumerated point by point
ENUMERATION_LIMIT = 10 ** 5


def count_columns(spec, order, mesh=None):
    """
    Periodic counts N_1..N_order keyed by method tag.

    Methods that would exceed their enumeration guard stop early, so their
    column may be shorter than order.
    """
    columns = {}
    if spec.kind == 'sft':
        S = spec.subshift()
        columns['trace'] = [count_periodic_trace(S, n) for n in range(1, order + 1)]
        columns['bruteforce'] = [
            count_periodic_bruteforce(S, n)
            for n in range(1, order + 1)
            if S.k ** n <= NUMERIC_CONFIG['bruteforce_limit']
        ]
        if S.has_dead_ends():
            logging.warning("   Transition matrix has dead ends; no cover count.")
            return columns
    elif spec.kind == 'toral':
        columns['toral'] = [toral_count(spec.matrix, n) for n in range(1, order + 1)]

    fmap = spec.expanding_map()
    if spec.kind != 'toral':
        cover = build_cover(fmap, mesh or default_mesh(fmap))
        columns['cover'] = [count_periodic_via_cover(cover, p) for p in range(1, order + 1)]
    if spec.kind == 'circle':
        columns['exact'] = [fmap.count_periodic(n) for n in range(1, order + 1)]
    if spec.kind != 'sft':
        enumerated = []
        for n in range(1, order + 1):
            if fmap.count_periodic(n) > ENUMERATION_LIMIT:
                break
            enumerated.append(len(periodic_points(fmap, n)))
        columns['bruteforce'] = enumerated
    return columns


def cmd_count(config):
    """Side-by-side counts; passes when every row agrees across methods."""
    spec = config.map_spec
    order = config.params['order']
    logging.info(f"Counting periodic points of '{spec.name}' up to n = {order} ...")
    columns = count_columns(spec, order, config.params.get('mesh'))
    table = counts_table(columns, order)
    agree = bool(table['agree'].all())
    if not agree:
        rows = table.loc[~table['agree'], 'n'].tolist()
        logging.error(f"Count methods disagree at n = {rows}.")
    logging.info(f"Counting periodic points of '{spec.name}' up to n = {order} ... done.")

    data = {'map': spec.describe(), 'counts': columns, 'agree': agree}
    lines = [
        f"map: {spec.name} ({spec.kind})",
        f"methods: {', '.join(columns)}",
        f"agreement: {'yes' if agree else 'NO'}",
    ]
    return CommandResult('count', data, table, lines, passed=agree)
