"""
cover sub-command: build a Markov cover, dump it and verify it.
"""

import logging

from ..cover import build_cover, count_periodic_via_cover, verify_cover
from ..output import CommandResult, cover_table
from .zeta import default_mesh


def cmd_cover(config):
    spec = config.map_spec
    if spec.kind == 'toral':
        logging.error("Markov covers are built for circle maps and subshifts only.")
        raise ValueError("cover does not support toral maps")
    order = config.params['order']
    fmap = spec.expanding_map()
    mesh = config.params.get('mesh') or default_mesh(fmap)
    cover = build_cover(fmap, mesh)
    report = verify_cover(cover)
    via_cover = [count_periodic_via_cover(cover, p) for p in range(1, order + 1)]
    direct = [fmap.count_periodic(p) for p in range(1, order + 1)]
    counts_agree = via_cover == direct

    data = {
        'map': spec.describe(),
        'mesh': mesh,
        'rectangles': [str(rect) for rect in cover.rectangles],
        'transition': [list(row) for row in cover.transition.rows],
        'family_sizes': [len(family) for family in cover.families.index_sets],
        'report': report.to_dict(),
        'counts': {'cover': via_cover, 'trace' if spec.kind == 'sft' else 'exact': direct},
        'counts_agree': counts_agree,
    }
    lines = [f"map: {spec.name} ({spec.kind})", f"mesh: {mesh}", cover.to_text(), ""]
    lines.extend(
        f"{name.replace('_', ' ')}: {'pass' if ok else 'FAIL'}"
        for name, ok in report.to_dict().items()
        if isinstance(ok, bool) and name != 'passed'
    )
    lines.append(f"counts [cover]: {', '.join(str(c) for c in via_cover)}")
    lines.append(f"counts agree: {'yes' if counts_agree else 'NO'}")
    return CommandResult(
        'cover', data, cover_table(cover), lines, passed=report.passed and counts_agree
    )
