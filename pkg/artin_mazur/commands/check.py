"""
check sub-command: desk-scale acceptance checks for all modules.
"""

import logging
import math
import time
from fractions import Fraction

import numpy as np

from ..config import BUILTIN_MAPS, NUMERIC_CONFIG
from ..cover import build_cover, count_periodic_via_cover, zeta_via_cover
from ..data_loader import validate_map_config
from ..enttool import (
    entropy_estimate,
    least_squares_slope,
    preimage_entropy_bound,
    verify_theorem2,
)
from ..exactmat import SignedIntMatrix, perron_bounds
from ..expmap import make_circle_map, periodic_points, toral_count
from ..output import CommandResult, check_table
from ..sft import (
    SubshiftOfFiniteType,
    count_periodic_bruteforce,
    count_periodic_trace,
)
from ..shadow import find_periodic, make_pseudo_orbit, max_alpha_for_beta, shadow_finite
from ..zetafn import (
    CountSequence,
    RationalFunction,
    counts_from_zeta,
    primitive_orbit_counts,
    radius_and_entropy,
    zeta_from_sft,
    zeta_modulus_bounds_check,
)
from .entropy import default_eps, sample_points

GOLDEN = (1 + math.sqrt(5)) / 2


def check_sft_zeta(context):
    fib = zeta_from_sft(SignedIntMatrix([[1, 1], [1, 0]]))
    ok = fib == RationalFunction.from_coefficients([1], [1, -1, -1])
    for k in range(1, 6):
        full = zeta_from_sft(SignedIntMatrix.ones(k))
        ok &= full == RationalFunction.from_coefficients([1], [1, -k])
    return ok, f"fibonacci zeta {fib}"


def check_trace_bruteforce(context):
    rng = context['rng']
    sequences = []
    for _ in range(200):
        dim = int(rng.integers(1, 5))
        S = SubshiftOfFiniteType(SignedIntMatrix(rng.integers(0, 2, size=(dim, dim)).tolist()))
        n = int(rng.integers(1, 9))
        trace = [count_periodic_trace(S, m) for m in range(1, n + 1)]
        if trace[-1] != count_periodic_bruteforce(S, n):
            return False, f"mismatch for {S.transition.rows} at n = {n}"
        sequences.append(CountSequence(tuple(trace)))
    context['trace_sequences'] = sequences
    return True, "200 random matrices agree"


def check_circle_cover(context):
    for k in (2, 3):
        fmap = make_circle_map(k)
        expected = RationalFunction.from_coefficients([1, -1], [1, -k])
        for m in (4 * k, 8 * k):
            cover = build_cover(fmap, Fraction(1, m))
            if zeta_via_cover(cover) != expected:
                return False, f"k = {k}, m = {m}: zeta {zeta_via_cover(cover)}"
            counts = [count_periodic_via_cover(cover, p) for p in range(1, 11)]
            if counts != [k ** p - 1 for p in range(1, 11)]:
                return False, f"k = {k}, m = {m}: counts {counts}"
        oracle = [len(periodic_points(fmap, p)) for p in range(1, 11)]
        if oracle != [k ** p - 1 for p in range(1, 11)]:
            return False, f"k = {k}: enumeration {oracle}"
    return True, "(1 - z)/(1 - kz) for k = 2, 3"


def check_toral_counts(context):
    M = SignedIntMatrix([[2, 1], [1, 1]])
    zeta = RationalFunction.from_coefficients([1, -2, 1], [1, -3, 1])
    direct = [toral_count(M, n) for n in range(1, 13)]
    ok = list(counts_from_zeta(zeta, 12).counts) == direct
    return ok, f"N_12 = {direct[-1]}"


def check_radius(context):
    zeta = RationalFunction.from_coefficients([1], [1, -1, -1])
    radius = radius_and_entropy(zeta)
    lower, upper = perron_bounds(SignedIntMatrix([[1, 1], [1, 0]]))
    ok = abs(radius.rho - 1 / GOLDEN) < 1e-9
    ok &= abs(radius.periodic_entropy - math.log(GOLDEN)) < 1e-9
    inside = float(lower) - 1e-9 <= 1 / radius.rho <= float(upper) + 1e-9
    ok &= float(upper - lower) < 1e-6 and inside
    return bool(ok), f"rho = {radius.rho:.12f}"


def check_shadowing(context):
    rng = context['rng']
    fmap = make_circle_map(2)
    beta = Fraction(1, 1000)
    alpha = max_alpha_for_beta(fmap, beta)
    for trial in range(200):
        x = Fraction(float(rng.random()))
        points = [x]
        for _ in range(99):
            jump = Fraction(float(rng.uniform(-0.9, 0.9))) * alpha
            points.append(fmap.exact(fmap.apply(points[-1]) + jump))
        certificate = shadow_finite(fmap, make_pseudo_orbit(fmap, points, alpha), beta)
        z = certificate.point
        for p in points:
            if fmap.distance(z, p) >= beta:
                return False, f"trial {trial}: independent re-check failed"
            z = fmap.apply(z)
    for p in range(1, 9):
        q = 2 ** p - 1
        j = int(rng.integers(0, q))
        seed = float(Fraction(j, q)) + float(rng.uniform(-1, 1)) * 1e-7 / 2 ** p
        if find_periodic(fmap, seed % 1.0, p) != Fraction(j, q):
            return False, f"find_periodic missed {j}/{q}"
    return True, "200 pseudo-orbits shadowed; periods 1..8 recovered"


def _circle_estimate(context):
    if 'circle_estimate' not in context:
        fmap = make_circle_map(2)
        context['circle_estimate'] = entropy_estimate(fmap, range(1, 15), [Fraction(1, 64)])
    return context['circle_estimate']


def check_entropy_growth(context):
    fmap = make_circle_map(2)
    slope = least_squares_slope(range(6, 13), [math.log(2 ** n - 1) for n in range(6, 13)])
    ok = abs(slope - math.log(2)) < 0.01 * math.log(2)
    estimate = _circle_estimate(context)
    ok &= estimate.lower <= 1.1 * math.log(2) and estimate.upper >= 0.9 * math.log(2)
    report = verify_theorem2(fmap, [2 ** n - 1 for n in range(1, 13)], estimate)
    ok &= report.passed
    return bool(ok), f"slope {slope:.4f}, estimate [{estimate.lower:.4f}, {estimate.upper:.4f}]"


def check_bounds(context):
    rng = context['rng']
    counts = CountSequence(tuple(2 ** n for n in range(1, 21)))
    radii = rng.uniform(0, 0.45, size=50)
    angles = rng.uniform(0, 2 * math.pi, size=50)
    samples = [complex(r * math.cos(a), r * math.sin(a)) for r, a in zip(radii, angles)]
    ok = zeta_modulus_bounds_check(counts, 2, samples)

    tolerance = NUMERIC_CONFIG['overlap_tolerance']
    for name, config in BUILTIN_MAPS.items():
        fmap = validate_map_config(config, name=name).expanding_map()
        if not fmap.is_expanding:
            logging.info(f"   Skipping non-expanding map '{name}'.")
            continue
        if name == 'circle2':
            estimate = _circle_estimate(context)
        else:
            eps = default_eps(fmap) if fmap.kind == 'sft' else Fraction(1, 8)
            estimate = entropy_estimate(fmap, range(1, 7), [eps])
        bound = preimage_entropy_bound(fmap, sample_points(fmap, context['seed']))
        if estimate.lower > bound * (1 + tolerance):
            return False, f"{name}: estimate {estimate.lower:.4f} above bound {bound:.4f}"

    for sequence in context.get('trace_sequences', []):
        primitive_orbit_counts(sequence)
    return bool(ok), "modulus bounds, log-degree bounds and Mobius counts hold"


CHECKS = [
    (1, 'exact zeta identities', check_sft_zeta),
    (2, 'trace against brute force', check_trace_bruteforce),
    (3, 'circle zeta via cover', check_circle_cover),
    (4, 'toral counts', check_toral_counts),
    (5, 'radius and entropy', check_radius),
    (6, 'shadowing and periodic points', check_shadowing),
    (7, 'entropy against periodic growth', check_entropy_growth),
    (8, 'bound suite', check_bounds),
]


def cmd_check(config):
    """Run every acceptance check; passes only when all of them pass."""
    context = {'rng': np.random.default_rng(config.seed), 'seed': config.seed}
    results = []
    for number, name, check in CHECKS:
        logging.info(f"Check {number}: {name} ...")
        start = time.perf_counter()
        try:
            ok, detail = check(context)
        except ValueError as e:
            ok, detail = False, f"error: {e}"
        elapsed = time.perf_counter() - start
        if not ok:
            logging.warning(f"   Check {number} failed: {detail}")
        logging.info(f"Check {number}: {name} ... done.")
        results.append(
            {
                'criterion': number,
                'name': name,
                'passed': bool(ok),
                'seconds': round(elapsed, 2),
                'detail': detail,
            }
        )
    table = check_table(results)
    passed = bool(table['passed'].all())
    lines = [f"{int(table['passed'].sum())} of {len(results)} checks passed"]
    data = {'checks': [{k: v for k, v in r.items() if k != 'seconds'} for r in results]}
    return CommandResult('check', data, table, lines, passed=passed)
