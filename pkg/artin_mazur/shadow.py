"""
Pseudo-orbit shadowing and periodic-point detection for expanding maps.

A finite alpha-pseudo-orbit is shadowed by pulling its last point back
through the inverse branches that pass through each earlier point. The
shadow is certified by forward iteration in exact arithmetic.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .config import NUMERIC_CONFIG
from .expmap import branch_through


@dataclass(frozen=True)
class PseudoOrbit:
    """Points x_0..x_n with d(f(x_i), x_(i+1)) <= max_jump < alpha."""

    points: tuple
    alpha: Fraction
    max_jump: Fraction

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class ShadowCertificate:
    """A true orbit point and its per-step distances to the pseudo-orbit."""

    point: object
    beta: Fraction
    errors: tuple

    @property
    def max_error(self):
        return max(self.errors) if self.errors else 0

    def to_records(self):
        return [{'i': i, 'error': float(e)} for i, e in enumerate(self.errors)]


def max_alpha_for_beta(map, beta):
    """
    Largest jump alpha for which every alpha-pseudo-orbit has a beta-shadow.

    Args:
        map: ExpandingMapInstance
        beta: Shadowing distance, 0 < beta < r

    Returns:
        min{r - beta, (1 - lambda)/lambda * beta} reduced by the safety factor
    """
    beta = Fraction(beta)
    if not 0 < beta < map.r:
        logging.error(f"beta = {float(beta)} must lie in (0, r = {float(map.r)}).")
        raise ValueError(f"max_alpha_for_beta needs 0 < beta < r, got {float(beta)}")
    bound = min(map.r - beta, (1 - map.lam) / map.lam * beta)
    return NUMERIC_CONFIG['alpha_safety'] * bound


def make_pseudo_orbit(map, points, alpha=None):
    """
    Validate a point sequence as an alpha-pseudo-orbit.

    Args:
        map: ExpandingMapInstance
        points: Sequence of at least one point (floats are converted exactly)
        alpha: Jump bound; defaults to 1.01 times the largest jump, or a tiny
            positive value for a true orbit

    Returns:
        PseudoOrbit

    Raises:
        ValueError if some jump is not below alpha
    """
    points = tuple(map.exact(x) for x in points)
    if not points:
        raise ValueError("A pseudo-orbit needs at least one point")
    jumps = [map.distance(map.apply(a), b) for a, b in zip(points, points[1:])]
    max_jump = max(jumps, default=Fraction(0))
    if alpha is None:
        alpha = max_jump * Fraction(101, 100) if max_jump > 0 else Fraction(1, 10 ** 15)
    alpha = Fraction(alpha)
    if max_jump >= alpha:
        logging.error(f"Pseudo-orbit jump {float(max_jump)} is not below alpha {float(alpha)}.")
        raise ValueError(f"Jump {float(max_jump)} violates alpha = {float(alpha)}")
    return PseudoOrbit(points, alpha, max_jump)


def shadow_finite(map, po, beta):
    """
    Shadow a finite pseudo-orbit by backward pullback.

    y_n = x_n and y_(k-1) = g_k(y_k), g_k being the inverse branch at
    f(x_(k-1)) through x_(k-1). Each step satisfies
    d(y_(k-1), x_(k-1)) <= lambda (alpha + beta); the result is re-verified
    by iterating y_0 forward.

    Args:
        map: ExpandingMapInstance
        po: PseudoOrbit with alpha <= max_alpha_for_beta(map, beta)
        beta: Shadowing distance

    Returns:
        ShadowCertificate

    Raises:
        ValueError if the hypotheses fail or a check does not hold
    """
    if not map.is_expanding:
        raise ValueError(f"{map!r} is not expanding; shadowing is unavailable")
    beta = Fraction(beta)
    alpha_max = max_alpha_for_beta(map, beta)
    if po.alpha > alpha_max:
        logging.error(f"alpha = {float(po.alpha)} exceeds {float(alpha_max)} for beta.")
        raise ValueError(f"Pseudo-orbit alpha {float(po.alpha)} is too large for beta")

    step_bound = map.lam * (po.alpha + beta)
    y = po.points[-1]
    for k in range(len(po.points) - 1, 0, -1):
        previous = po.points[k - 1]
        y = branch_through(map, previous)(y)
        error = map.distance(y, previous)
        if error > step_bound:
            logging.error(f"Step {k - 1}: error {float(error)} exceeds lambda(alpha+beta).")
            raise ValueError(f"Backward step {k - 1} left the contraction bound")

    errors = []
    z = y
    for x in po.points:
        errors.append(map.distance(z, x))
        z = map.apply(z)
    if any(e >= beta for e in errors):
        logging.error(f"Forward verification failed: max error {float(max(errors))}.")
        raise ValueError("Shadow verification failed")
    return ShadowCertificate(y, beta, tuple(errors))


def default_tau(map):
    """min{eps/4, c/8} for the map's expansivity constant eps."""
    return min(map.expansivity_eps / 4, map.c / 8)


def find_periodic(map, x, p, tau=None):
    """
    Locate the periodic point of period p that shadows the orbit of x.

    The periodic pseudo-orbit x_i = f^(i mod p)(x) over N p steps, with
    lambda^(N p) below the shadowing resolution, is shadowed and the shadow
    snapped to the nearest exact point of period p.

    Closeness is checked against tau at steps 0 <= j < p only. At step p
    the seed's orbit has already jumped by d(f^p(x), x) < alpha, so that
    step is checked against alpha + tau (decision 6 in DESIGN.md).

    Args:
        map: ExpandingMapInstance
        x: Seed with d(f^p(x), x) < max_alpha_for_beta(map, tau)
        p: Period
        tau: Closeness bound, below eps/2 (default min{eps/4, c/8})

    Returns:
        Exact point z with f^p(z) = z, d(f^j x, f^j z) < tau for 0 <= j < p
        and d(f^p x, f^p z) < alpha + tau

    Raises:
        ValueError if the seed is too far from periodic or verification fails
    """
    if p < 1:
        raise ValueError(f"find_periodic needs p >= 1, got {p}")
    if tau is None:
        tau = default_tau(map)
    tau = Fraction(tau)
    if tau >= map.expansivity_eps / 2:
        raise ValueError(f"tau = {float(tau)} must be below eps/2")
    x = map.exact(x)
    alpha = max_alpha_for_beta(map, tau)
    segment = map.orbit(x, p)
    closing_jump = map.distance(map.apply(segment[-1]), x)
    if closing_jump >= alpha:
        logging.error(f"d(f^{p}(x), x) = {float(closing_jump)} is not below {float(alpha)}.")
        raise ValueError(f"Seed is not close enough to periodic for tau = {float(tau)}")

    resolution = min(NUMERIC_CONFIG['shadow_resolution'], 1 / (4 * map.degree ** p))
    repeats = max(1, math.ceil(math.log(resolution) / (p * math.log(map.lam))))
    points = segment * repeats + [x]
    certificate = shadow_finite(map, make_pseudo_orbit(map, points, alpha), tau)
    z = map.snap_periodic(certificate.point, p)

    if map.iterate(z, p) != z:
        raise ValueError(f"Snapped point {z} is not periodic with period {p}")
    zs = map.orbit(z, p + 1)
    xs = map.orbit(x, p + 1)
    for j in range(p):
        if map.distance(xs[j], zs[j]) >= tau:
            raise ValueError(f"Periodic point leaves the tau-neighbourhood at step {j}")
    if map.distance(xs[p], zs[p]) >= alpha + tau:
        raise ValueError("Periodic point drifts from the seed at step p")
    logging.debug(f"   find_periodic: period {p} point {z} after {repeats} repeats")
    return z
