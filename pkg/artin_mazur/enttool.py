"""
Topological entropy from (n, eps)-separated and spanning sets.

Separated and spanning sets are built greedily on a uniform grid of the
phase space, giving certified lower and upper bounds for s_n(eps). Exact
values are used where the combinatorics is known (full shifts, partition
refinements of circle maps).
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import pandas as pd

from .config import NUMERIC_CONFIG
from .expmap import CircleMap, preimage_separation_bound
from .regions import Arc
from .sft import ShiftMap, shift_separated_count


@dataclass(frozen=True)
class SeparatedSetResult:
    """Greedy bounds lower_s_n <= s_n(eps) <= upper_s_n on a grid."""

    n: int
    eps: Fraction
    witness: np.ndarray = field(repr=False)
    lower_s_n: int
    upper_s_n: int
    spacing: Fraction


@dataclass(frozen=True)
class EntropyEstimate:
    """Slope estimate of h(f) with the interval spanned by both bounds."""

    value: float
    lower: float
    upper: float
    eps: Fraction
    n_values: tuple
    lower_counts: tuple
    upper_counts: tuple
    dropped: tuple = ()
    method: str = 'estimate'

    @property
    def interval(self):
        return self.lower, self.upper

    def count_table(self):
        return pd.DataFrame(
            {
                'n': list(self.n_values),
                'lower_s_n': list(self.lower_counts),
                'upper_s_n': list(self.upper_counts),
            }
        )


@dataclass(frozen=True)
class EntropyGrowthReport:
    """Periodic growth rate of N_n compared with an entropy estimate."""

    periodic_slope: float
    estimate: EntropyEstimate
    overlap: bool
    sandwich_constant: float
    sandwich: bool
    submultiplicative: bool
    table: pd.DataFrame = field(repr=False)

    @property
    def passed(self):
        return self.overlap and self.sandwich and self.submultiplicative is not False

    def to_dict(self):
        return {
            'periodic_slope': self.periodic_slope,
            'entropy_estimate': self.estimate.value,
            'entropy_interval': list(self.estimate.interval),
            'entropy_method': self.estimate.method,
            'overlap': self.overlap,
            'sandwich_constant': self.sandwich_constant,
            'sandwich': self.sandwich,
            'submultiplicative': self.submultiplicative,
            'passed': self.passed,
        }


def least_squares_slope(xs, ys):
    """Slope of the least-squares line through (xs, ys)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if len(xs) < 2 or len(xs) != len(ys):
        raise ValueError(f"A slope needs at least two paired points, got {len(xs)}")
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def _bowen_row(map, orbits, index):
    """d_n from grid point index to every grid point."""
    return map.distance_array(orbits, orbits[:, index:index + 1]).max(axis=0)


def is_separated(map, points, n, eps):
    """True if distinct points pairwise have d_n > eps."""
    orbits = map.orbit_array(np.asarray(points), n)
    for i in range(len(points) - 1):
        if not (_bowen_row(map, orbits, i)[i + 1:] > float(eps)).all():
            return False
    return True


def greedy_separated(map, n, eps, resolution=None):
    """
    Greedy (n, eps)-separated and (n, eps/2)-spanning sets on a grid.

    Grid points are inserted in index order. A point joins the separated
    witness when its d_n to every witness exceeds eps; the spanning pass
    picks uncovered points until every grid point lies within eps/2. The
    number of spanning picks bounds s_n(eps) from above.

    Args:
        map: ExpandingMapInstance with a vectorised grid
        n: Number of iterates in d_n
        eps: Separation distance
        resolution: Grid spacing (default min{eps/8, 2^-12})

    Returns:
        SeparatedSetResult

    Raises:
        ValueError if the grid spacing is not below eps/4
    """
    eps = Fraction(eps)
    if n < 1 or eps <= 0:
        raise ValueError(f"greedy_separated needs n >= 1 and eps > 0, got n={n}, eps={eps}")
    if resolution is None:
        resolution = min(eps / 8, Fraction(1, 2 ** NUMERIC_CONFIG['grid_exponent']))
    points, spacing = map.grid(resolution)
    if spacing >= eps / 4:
        logging.error(f"Grid spacing {spacing} is not below eps/4 = {eps / 4}.")
        raise ValueError(f"Grid spacing {spacing} too coarse for eps = {eps}")
    return _greedy_on_grid(map, points, spacing, n, eps)


def _greedy_on_grid(map, points, spacing, n, eps):
    orbits = map.orbit_array(points, n)
    limit = float(eps)

    available = np.ones(len(points), dtype=bool)
    witnesses = []
    while available.any():
        i = int(np.flatnonzero(available)[0])
        witnesses.append(i)
        available &= _bowen_row(map, orbits, i) > limit

    uncovered = np.ones(len(points), dtype=bool)
    picks = []
    while uncovered.any():
        i = int(np.flatnonzero(uncovered)[0])
        picks.append(i)
        uncovered &= _bowen_row(map, orbits, i) > limit / 2

    if not is_separated(map, points[witnesses], n, eps):
        raise ValueError(f"Greedy witness set is not ({n}, {eps})-separated")
    covered = np.zeros(len(points), dtype=bool)
    for i in picks:
        covered |= _bowen_row(map, orbits, i) <= limit / 2
    if not covered.all():
        raise ValueError("Spanning picks do not cover the grid")
    if len(witnesses) > len(picks):
        raise ValueError(f"Separated count {len(witnesses)} exceeds spanning count {len(picks)}")

    logging.debug(f"   n={n}: {len(witnesses)} separated, {len(picks)} spanning")
    return SeparatedSetResult(n, eps, points[witnesses], len(witnesses), len(picks), spacing)


def _entropy_grid(map, eps, n_max):
    """Grid refined from eps/8 towards eps lambda^(n_max-1)/8 within the point limit."""
    limit = 2 ** NUMERIC_CONFIG['max_grid_exponent']
    target = eps * Fraction(map.lam) ** (n_max - 1) / 8
    resolution = eps / 8
    points, spacing = map.grid(resolution)
    while resolution > target:
        finer, finer_spacing = map.grid(resolution / 2)
        if len(finer) > limit:
            break
        resolution /= 2
        points, spacing = finer, finer_spacing
    return points, spacing


def entropy_estimate(map, n_ladder, eps_ladder):
    """
    Least-squares entropy estimate from separated-set growth.

    Uses the smallest eps of the ladder. Full shifts are counted exactly;
    other maps run greedy_separated on one shared grid, and only those n
    whose Bowen balls are resolved by the grid enter the fit.

    Args:
        map: Expanding map (circle, toral or shift)
        n_ladder: Increasing iterate counts
        eps_ladder: Decreasing separation distances

    Returns:
        EntropyEstimate; value is the slope of log lower_s_n and the
        interval runs between that and the slope of log upper_s_n
    """
    n_ladder = sorted(int(n) for n in n_ladder)
    eps_ladder = [Fraction(e) for e in eps_ladder]
    if not n_ladder or not eps_ladder:
        raise ValueError("entropy_estimate needs nonempty ladders")
    if any(a <= b for a, b in zip(eps_ladder, eps_ladder[1:])):
        raise ValueError(f"eps ladder must be decreasing, got {[str(e) for e in eps_ladder]}")
    if not map.is_expanding:
        raise ValueError(f"{map!r} is not expanding; entropy_estimate needs an expanding map")
    eps = eps_ladder[-1]
    logging.info(f"Estimating entropy at eps = {eps} ...")

    if isinstance(map, ShiftMap) and map.S.is_full:
        results = [shift_separated_count(map.S, n, eps) for n in n_ladder]
        if all(exact for _, exact in results):
            counts = tuple(count for count, _ in results)
            slope = 0.0
            if len(set(counts)) > 1:
                slope = least_squares_slope(n_ladder, np.log(counts))
            logging.info(f"Estimating entropy at eps = {eps} ... done.")
            return EntropyEstimate(
                slope, slope, slope, eps, tuple(n_ladder), counts, counts, method='exact'
            )

    points, spacing = _entropy_grid(map, eps, n_ladder[-1])
    rate = Fraction(map.lam)
    fitted = [n for n in n_ladder if spacing < eps * rate ** (n - 1) / 4]
    dropped = tuple(n for n in n_ladder if n not in fitted)
    if dropped:
        logging.warning(f"   Grid spacing {spacing} does not resolve n = {list(dropped)}; dropped")
    if len(fitted) < 2:
        logging.error(f"Only {len(fitted)} ladder points are resolved at spacing {spacing}.")
        raise ValueError("entropy_estimate needs at least two resolved ladder points")

    results = [_greedy_on_grid(map, points, spacing, n, eps) for n in fitted]
    lower_counts = tuple(r.lower_s_n for r in results)
    upper_counts = tuple(r.upper_s_n for r in results)
    lower_slope = least_squares_slope(fitted, np.log(lower_counts))
    upper_slope = least_squares_slope(fitted, np.log(upper_counts))
    logging.info(f"   Found slopes {lower_slope:.4f} (separated) and {upper_slope:.4f} (spanning).")
    logging.info(f"Estimating entropy at eps = {eps} ... done.")
    return EntropyEstimate(
        lower_slope,
        min(lower_slope, upper_slope),
        max(lower_slope, upper_slope),
        eps,
        tuple(fitted),
        lower_counts,
        upper_counts,
        dropped,
    )


def cover_count(map, arcs, n):
    """
    Number of nonempty cells of the refinement A v f^-1 A v ... v f^-(n-1) A.

    Cells are traced by exact backward pullback of the partition arcs and
    counted by itinerary, keeping only pieces of positive length.

    Args:
        map: CircleMap
        arcs: Partition of the circle into closed arcs (Arc or (lo, hi))
        n: Refinement depth (n >= 1)

    Returns:
        Number of distinct itineraries
    """
    if not isinstance(map, CircleMap):
        raise ValueError(f"cover_count needs a circle map, got {map!r}")
    if n < 1:
        raise ValueError(f"cover_count needs n >= 1, got {n}")
    partition = []
    for arc in arcs:
        if isinstance(arc, Arc):
            partition.append(arc)
        elif isinstance(arc, (tuple, list)) and len(arc) == 2:
            partition.append(Arc.from_endpoints(*arc))
        else:
            raise ValueError(f"Partition element {arc!r} is not an arc")

    guard = NUMERIC_CONFIG['tree_guard']
    pieces = [((a,), arc) for a, arc in enumerate(partition) if arc.length > 0]
    for _ in range(n - 1):
        refined = []
        for itinerary, region in pieces:
            for a, arc in enumerate(partition):
                for preimage in map.preimage_region(region):
                    refined.extend(
                        ((a,) + itinerary, piece)
                        for piece in arc.intersection(preimage)
                        if piece.length > 0
                    )
        if len(refined) > guard:
            raise ValueError(f"Refinement tracks {len(refined)} pieces, above {guard}")
        pieces = refined
    return len({itinerary for itinerary, _ in pieces})


def preimage_entropy_bound(map, samples):
    """log of the largest preimage count over the samples, an upper bound for h(f)."""
    max_count, _ = preimage_separation_bound(map, samples)
    return math.log(max_count)


def preimage_separated_set(map, x, n):
    """
    All f^n-preimages of x; they are pairwise (n, gap)-separated for any gap
    below the smallest one-step preimage distance.
    """
    if n < 0:
        raise ValueError(f"preimage_separated_set needs n >= 0, got {n}")
    if map.degree ** n > NUMERIC_CONFIG['bruteforce_limit']:
        raise ValueError(f"{map.degree}^{n} preimages exceed the enumeration limit")
    layer = [map.exact(x)]
    for _ in range(n):
        layer = [branch.preimage for y in layer for branch in map.branches(y)]
    return layer


def preimage_spanning_bound(map, n, eps):
    """degree^n times the size of an eps-spanning grid of the space."""
    points, _ = map.grid(Fraction(eps))
    return map.degree ** n * len(points)


def _submultiplicative_full_shift(S, limit=5):
    for n1 in range(1, limit + 1):
        for n2 in range(1, limit + 1):
            joint, _ = shift_separated_count(S, n1 + n2, 1)
            left, _ = shift_separated_count(S, n1, Fraction(1, 2))
            right, _ = shift_separated_count(S, n2, Fraction(1, 2))
            if joint > left * right:
                logging.warning(f"   s_{n1 + n2}(1) = {joint} exceeds {left} * {right}")
                return False
    return True


def verify_theorem2(map, counts, estimate, tail=None, tolerance=None):
    """
    Compare the growth rate of periodic counts with an entropy estimate.

    Args:
        map: The map the counts belong to
        counts: Exact N_1..N_m (CountSequence or sequence of ints)
        estimate: EntropyEstimate for the same map
        tail: Fraction of the last points used for the periodic slope
        tolerance: Relative tolerance of the overlap check

    Returns:
        EntropyGrowthReport; failures are report fields, never raised
    """
    tail = NUMERIC_CONFIG['slope_tail'] if tail is None else tail
    tolerance = NUMERIC_CONFIG['overlap_tolerance'] if tolerance is None else tolerance
    counts = [int(c) for c in counts]
    m = len(counts)
    start = m - max(2, math.ceil(m * tail))
    indices = [n for n in range(max(start, 0) + 1, m + 1) if counts[n - 1] > 0]
    if len(indices) >= 2:
        periodic_slope = least_squares_slope(indices, [math.log(counts[n - 1]) for n in indices])
    else:
        periodic_slope = 0.0

    lower, upper = estimate.interval
    overlap = lower * (1 - tolerance) - 1e-12 <= periodic_slope <= upper * (1 + tolerance) + 1e-12

    lower_by_n = dict(zip(estimate.n_values, estimate.lower_counts))
    upper_by_n = dict(zip(estimate.n_values, estimate.upper_counts))
    ratios = [counts[n - 1] / lower_by_n[n] for n in lower_by_n if n <= m]
    sandwich_constant = min(ratios) if ratios else None
    sandwich = sandwich_constant is not None and sandwich_constant > 0

    submultiplicative = None
    if isinstance(map, ShiftMap) and map.S.is_full:
        submultiplicative = _submultiplicative_full_shift(map.S)

    log_counts = [math.log(c) if c > 0 else math.nan for c in counts]
    table = pd.DataFrame(
        {
            'n': list(range(1, m + 1)),
            'N_n': counts,
            'lower_s_n': [lower_by_n.get(n) for n in range(1, m + 1)],
            'upper_s_n': [upper_by_n.get(n) for n in range(1, m + 1)],
            'log-slope': [math.nan] + [b - a for a, b in zip(log_counts, log_counts[1:])],
        }
    )
    if not overlap:
        logging.warning(
            f"   Periodic slope {periodic_slope:.4f} misses entropy interval "
            f"[{lower:.4f}, {upper:.4f}]"
        )
    return EntropyGrowthReport(
        periodic_slope, estimate, overlap, sandwich_constant, sandwich, submultiplicative, table
    )
