"""
entropy sub-command: entropy estimate against the growth of periodic counts.
"""

import logging
from fractions import Fraction

import numpy as np

from ..config import NUMERIC_CONFIG
from ..enttool import entropy_estimate, preimage_entropy_bound, verify_theorem2
from ..exactmat import is_irreducible
from ..output import CommandResult
from ..sft import ShiftMap, sft_entropy
from ..utils import format_number

# Sample points for the preimage bound
PREIMAGE_SAMPLES = 16


def default_eps(fmap):
    """eps = 1 on shift spaces, 2^-6 elsewhere."""
    return Fraction(1) if isinstance(fmap, ShiftMap) else Fraction(1, 64)


def sample_points(fmap, seed, size=PREIMAGE_SAMPLES):
    """Seeded sample of grid points of the map's space."""
    points, _ = fmap.grid(Fraction(1, 64))
    rng = np.random.default_rng(seed)
    chosen = rng.choice(len(points), size=min(size, len(points)), replace=False)
    return [points[i] for i in sorted(chosen)]


def cmd_entropy(config):
    """
    Entropy estimate, periodic growth rate and the log-degree bound.

    Passes when the growth report passes and the lower edge of the
    estimate stays below the preimage bound within tolerance.
    """
    spec = config.map_spec
    order = config.params['order']
    fmap = spec.expanding_map()
    eps = config.params.get('eps') or default_eps(fmap)
    n_max = config.params.get('n_max') or 8

    counts = [fmap.count_periodic(n) for n in range(1, order + 1)]
    estimate = entropy_estimate(fmap, range(1, n_max + 1), [eps])
    report = verify_theorem2(fmap, counts, estimate)
    bound = preimage_entropy_bound(fmap, sample_points(fmap, config.seed))
    within_bound = estimate.lower <= bound * (1 + NUMERIC_CONFIG['overlap_tolerance'])
    if not within_bound:
        logging.error(f"Entropy lower edge {estimate.lower:.4f} exceeds log-degree {bound:.4f}.")

    data = {
        'map': spec.describe(),
        'eps': eps,
        'report': report.to_dict(),
        'preimage_bound': bound,
        'within_preimage_bound': within_bound,
        'dropped_n': list(estimate.dropped),
    }
    lines = [
        f"map: {spec.name} ({spec.kind})",
        f"entropy [{estimate.method}]: {format_number(estimate.value)} "
        f"in [{format_number(estimate.lower)}, {format_number(estimate.upper)}] at eps = {eps}",
        f"periodic growth [{'trace' if spec.kind == 'sft' else 'exact'}]: "
        f"{format_number(report.periodic_slope)}",
        f"preimage bound: {format_number(bound)}",
        f"overlap: {'pass' if report.overlap else 'FAIL'}",
        f"sandwich constant: {format_number(report.sandwich_constant)}",
    ]
    if report.submultiplicative is not None:
        lines.append(f"submultiplicativity: {'pass' if report.submultiplicative else 'FAIL'}")

    if spec.kind == 'sft' and is_irreducible(spec.matrix):
        value, uncertainty = sft_entropy(spec.subshift())
        data['perron_entropy'] = value
        data['perron_uncertainty'] = uncertainty
        lines.insert(1, f"entropy [exact]: {value:.4f} +/- {uncertainty:.1e}")

    return CommandResult(
        'entropy', data, report.table, lines, passed=report.passed and within_bound
    )
