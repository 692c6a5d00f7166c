"""
Markov covers, codings and the signed periodic-point count.

Covers are built for circle maps (closed rational arcs) and for shift
spaces (cylinders). From a cover we derive the intersecting families I_r,
the signed transition matrices B^(r) and the alternating trace formula
N_p = sum_r (-1)^(r-1) tr((B^(r))^p), whose determinant form is the
rational zeta function of the map.
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .config import NUMERIC_CONFIG
from .exactmat import SignedIntMatrix
from .expmap import CircleMap
from .regions import Arc, Cylinder, covers_circle, family_intersects
from .sft import ShiftMap, admissible_words, is_admissible
from .shadow import make_pseudo_orbit, max_alpha_for_beta, shadow_finite
from .zetafn import counts_from_zeta, zeta_from_signed_family


@dataclass(frozen=True, eq=False)
class MarkovCover:
    """
    Ordered rectangles R_0..R_(k-1) of an expanding map with their
    transition matrix A_ij = 1 iff f(int R_i) meets int R_j.
    """

    map: object
    rectangles: tuple
    transition: SignedIntMatrix = field(default=None)

    def __post_init__(self):
        if not self.rectangles:
            raise ValueError("A cover needs at least one rectangle")
        if self.transition is None:
            rows = [
                [int(self.map.image_meets(source, target)) for target in self.rectangles]
                for source in self.rectangles
            ]
            object.__setattr__(self, 'transition', SignedIntMatrix(rows))

    @classmethod
    def from_arcs(cls, map, arcs):
        """
        Cover from hand-chosen arcs given as Arc objects or (lo, hi) pairs.

        Unlike build_cover, which refuses m = 2k arcs, no diameter check is
        made here. The signed counts are only meaningful when every arc is
        smaller than min{eps, c/2}: the four quarter arcs of the doubling
        map give 2, 4, 8, 16, ... instead of 2^p - 1. Run verify_cover first.
        """
        if not isinstance(map, CircleMap):
            raise ValueError("from_arcs needs a circle map")
        rectangles = tuple(
            arc if isinstance(arc, Arc) else Arc.from_endpoints(*arc) for arc in arcs
        )
        return cls(map, rectangles)

    @property
    def size(self):
        return len(self.rectangles)

    @property
    def diameter_bound(self):
        return min(self.map.expansivity_eps, self.map.c / 2)

    @cached_property
    def families(self):
        return intersecting_families(self)

    def to_text(self):
        """Rectangles, the transition matrix and the I_r families as text."""
        lines = [f"rectangles {self.size}"]
        lines.extend(f"R{i} {rect}" for i, rect in enumerate(self.rectangles))
        lines.append("transition")
        lines.append(str(self.transition))
        for r, family in enumerate(self.families.index_sets, start=1):
            lines.append(f"I{r} " + ' '.join('{' + ','.join(map(str, s)) + '}' for s in family))
        return '\n'.join(lines)


@dataclass(frozen=True)
class IntersectingFamilies:
    """I_r with their matrices A^(r), B^(r) for r = 1..L."""

    index_sets: tuple
    A: tuple
    B: tuple

    @property
    def L(self):
        return len(self.index_sets)


@dataclass(frozen=True)
class CoverReport:
    """Outcome of each Markov cover condition."""

    diameter: bool
    closure_of_interior: bool
    disjoint_interiors: bool
    markov: bool
    covers_space: bool
    messages: tuple = ()

    @property
    def passed(self):
        return all(
            (
                self.diameter,
                self.closure_of_interior,
                self.disjoint_interiors,
                self.markov,
                self.covers_space,
            )
        )

    def to_dict(self):
        return {
            'diameter': self.diameter,
            'closure_of_interior': self.closure_of_interior,
            'disjoint_interiors': self.disjoint_interiors,
            'markov': self.markov,
            'covers_space': self.covers_space,
            'passed': self.passed,
            'messages': list(self.messages),
        }


def cylinder_cover(S_map, depth):
    """Partition of a shift space into the admissible cylinders of a given depth."""
    if not isinstance(S_map, ShiftMap):
        raise ValueError("cylinder_cover needs a shift map")
    if depth < 1:
        raise ValueError(f"Cylinder depth must be >= 1, got {depth}")
    words = admissible_words(S_map.S, depth)
    return MarkovCover(S_map, tuple(Cylinder(w) for w in words))


def build_cover(map, mesh):
    """
    Uniform Markov cover of a circle map or a shift space.

    Circle maps get m = k * ceil(1/(k mesh)) arcs [i/m, (i+1)/m]; m is a
    multiple of k so every arc image is a union of arcs. Shift spaces get
    the cylinders of depth max(1, ceil(log2(1/mesh))).

    Args:
        map: CircleMap or ShiftMap
        mesh: Target rectangle size

    Returns:
        MarkovCover

    Raises:
        ValueError if the rectangles would not be smaller than min{eps, c/2}
    """
    mesh = Fraction(mesh)
    if mesh <= 0:
        raise ValueError(f"Cover mesh must be positive, got {mesh}")
    logging.info(f"Building Markov cover with mesh {mesh} ...")
    if isinstance(map, CircleMap):
        m = map.k * math.ceil(1 / (map.k * mesh))
        rectangles = tuple(Arc(Fraction(i, m), Fraction(1, m)) for i in range(m))
        diameter = Fraction(1, m)
    elif isinstance(map, ShiftMap):
        depth = max(1, math.ceil(math.log2(1 / mesh)))
        rectangles = tuple(Cylinder(w) for w in admissible_words(map.S, depth))
        diameter = Fraction(2, 2 ** depth)
    else:
        raise ValueError(f"Markov covers are built for circle maps and shifts, not {map!r}")
    bound = min(map.expansivity_eps, map.c / 2)
    if diameter >= bound:
        logging.error(f"Rectangle diameter {diameter} is not below {float(bound)}.")
        raise ValueError(f"Mesh {mesh} gives rectangles of diameter {diameter} >= {float(bound)}")
    cover = MarkovCover(map, rectangles)
    logging.info(f"   Found {cover.size} rectangles.")
    logging.info(f"Building Markov cover with mesh {mesh} ... done.")
    return cover


def verify_cover(cover):
    """
    Check the Markov cover conditions exactly.

    Diameters below min{eps, c/2}, rectangles equal to the closure of their
    interior, disjoint interiors, the Markov property
    f(int R_i) meets int R_j => int R_j inside f(int R_i), and a union equal
    to the whole space. Failures are reported, never raised.

    Returns:
        CoverReport
    """
    rects = cover.rectangles
    fmap = cover.map
    messages = []

    bound = cover.diameter_bound
    wide = [i for i, rect in enumerate(rects) if rect.diameter >= bound]
    if wide:
        messages.append(f"rectangles {wide} have diameter >= {float(bound)}")

    if isinstance(fmap, ShiftMap):
        thin = [i for i, rect in enumerate(rects) if not is_admissible(fmap.S, rect.word)]
    else:
        thin = [i for i, rect in enumerate(rects) if rect.length <= 0]
    if thin:
        messages.append(f"rectangles {thin} have empty interior")

    overlapping = [
        (i, j)
        for i, j in itertools.combinations(range(len(rects)), 2)
        if rects[i].interior_intersects(rects[j])
    ]
    if overlapping:
        messages.append(f"interiors overlap for pairs {overlapping}")

    non_markov = [
        (i, j)
        for i, source in enumerate(rects)
        for j, target in enumerate(rects)
        if fmap.image_meets(source, target) and not fmap.image_contains(source, target)
    ]
    if non_markov:
        messages.append(f"Markov property fails for pairs {non_markov}")

    if isinstance(fmap, ShiftMap):
        depth = max(rect.depth for rect in rects)
        covered = all(
            any(rect.word == word[: rect.depth] for rect in rects)
            for word in admissible_words(fmap.S, depth)
        )
    else:
        covered = covers_circle(rects)
    if not covered:
        messages.append("rectangles do not cover the space")

    for message in messages:
        logging.warning(f"   Cover check: {message}")
    return CoverReport(
        diameter=not wide,
        closure_of_interior=not thin,
        disjoint_interiors=not overlapping,
        markov=not non_markov,
        covers_space=covered,
        messages=tuple(messages),
    )


def _closed_family_meets(cover, indices):
    rects = [cover.rectangles[i] for i in indices]
    if isinstance(cover.map, ShiftMap):
        return all(a.compatible(b) for a, b in itertools.combinations(rects, 2))
    return family_intersects(rects)


def _permutation_sign(perm):
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def intersecting_families(cover):
    """
    Intersecting families I_r and the signed matrices A^(r), B^(r).

    I_r lists the index sets s_1 < ... < s_r whose closed rectangles share
    a point. For s, t in I_r, A^(r)_st = 1 and B^(r)_st = sgn(mu) when
    exactly one permutation mu has A_(s_i, t_mu(i)) = 1 for all i; both
    entries are 0 when no such permutation exists or when it is not unique.

    Returns:
        IntersectingFamilies

    Raises:
        ValueError if some family grows beyond the permutation search limit
    """
    transition = cover.transition
    limit = NUMERIC_CONFIG['permutation_limit']
    families = [[(i,) for i in range(cover.size)]]
    while True:
        candidates = [
            s + (j,)
            for s in families[-1]
            for j in range(s[-1] + 1, cover.size)
            if _closed_family_meets(cover, s + (j,))
        ]
        if not candidates:
            break
        if len(candidates[0]) > limit:
            logging.error(f"Intersecting families of size {len(candidates[0])} exceed {limit}.")
            raise ValueError(f"Permutation search beyond r = {limit} is not supported")
        families.append(candidates)

    A_mats, B_mats = [], []
    for r, family in enumerate(families, start=1):
        permutations = list(itertools.permutations(range(r)))
        a_rows, b_rows = [], []
        for s in family:
            a_row, b_row = [], []
            for t in family:
                matches = [
                    mu for mu in permutations
                    if all(transition[s[i], t[mu[i]]] == 1 for i in range(r))
                ]
                if len(matches) == 1:
                    a_row.append(1)
                    b_row.append(_permutation_sign(matches[0]))
                else:
                    if len(matches) > 1:
                        logging.debug(f"   Non-unique permutation for {s} -> {t}; entry set to 0")
                    a_row.append(0)
                    b_row.append(0)
            a_rows.append(a_row)
            b_rows.append(b_row)
        A_mats.append(SignedIntMatrix(a_rows))
        B_mats.append(SignedIntMatrix(b_rows))
    logging.debug(f"   Intersecting families sizes: {[len(f) for f in families]}")
    return IntersectingFamilies(
        tuple(tuple(f) for f in families), tuple(A_mats), tuple(B_mats)
    )


def count_periodic_via_cover(cover, p):
    """N_p = sum over r of (-1)^(r-1) tr((B^(r))^p)."""
    if p < 1:
        raise ValueError(f"count_periodic_via_cover needs p >= 1, got {p}")
    families = cover.families
    return sum((-1) ** r * B.power(p).trace() for r, B in enumerate(families.B))


def zeta_via_cover(cover):
    """
    Rational zeta function prod_(r even) det(I - zB^(r)) / prod_(r odd) det(I - zB^(r)).

    The expansion is checked against count_periodic_via_cover up to the
    combined polynomial degree.

    Raises:
        ValueError if the two disagree
    """
    zeta = zeta_from_signed_family(list(cover.families.B))
    order = max(1, zeta.numerator.degree + zeta.denominator.degree + 1)
    expected = tuple(count_periodic_via_cover(cover, p) for p in range(1, order + 1))
    if counts_from_zeta(zeta, order).counts != expected:
        logging.error(f"Zeta {zeta} disagrees with the cover counts {expected}.")
        raise ValueError("Cover zeta expansion does not reproduce the trace counts")
    return zeta


def pi_code(cover, prefix):
    """
    Region F = R_(a_0) cap f^-1(R_(a_1)) cap ... cap f^-n(R_(a_n)).

    Computed by backward pullback J_i = R_(a_i) cap f^-1(J_(i+1)).

    Args:
        cover: MarkovCover
        prefix: Admissible symbol sequence a_0..a_n (at least one symbol)

    Returns:
        Arc or Cylinder
    """
    prefix = tuple(prefix)
    if not prefix:
        raise ValueError("pi_code needs at least one symbol")
    transition = cover.transition
    for a, b in zip(prefix, prefix[1:]):
        if transition[a, b] != 1:
            logging.error(f"Prefix {prefix} uses the forbidden transition {a} -> {b}.")
            raise ValueError(f"Prefix {prefix} is not admissible for the cover")
    fmap = cover.map
    region = cover.rectangles[prefix[-1]]
    for symbol in reversed(prefix[:-1]):
        rect = cover.rectangles[symbol]
        if isinstance(fmap, ShiftMap):
            region = fmap.pullback(rect, region)
            if region is None:
                raise ValueError(f"Prefix {prefix} codes an empty region")
            continue
        pieces = [
            piece
            for preimage in fmap.preimage_region(region)
            for piece in rect.intersection(preimage)
            if piece.length > 0
        ]
        if len(pieces) != 1:
            raise ValueError(f"Pullback of {prefix} gives {len(pieces)} pieces")
        region = pieces[0]
    return region


def point_codings(cover, x, depth):
    """
    All admissible words a_0..a_(depth-1) with f^i(x) in R_(a_i).

    Args:
        cover: MarkovCover of a circle map
        x: Point (converted exactly)
        depth: Word length

    Returns:
        List of tuples
    """
    fmap = cover.map
    x = fmap.exact(x)
    orbit = fmap.orbit(x, depth)
    transition = cover.transition
    containing = [
        [i for i, rect in enumerate(cover.rectangles) if rect.contains(point)] for point in orbit
    ]
    words = [(i,) for i in containing[0]]
    for level in range(1, depth):
        words = [w + (j,) for w in words for j in containing[level] if transition[w[-1], j] == 1]
    return words


def default_theta_beta(map):
    return Fraction(9, 10) * min(map.expansivity_eps / 2, map.c / 4)


def theta_matrix(map, dense_points, alpha):
    """A_ij = 1 iff d(f(p_i), p_j) < alpha."""
    images = [map.apply(map.exact(p)) for p in dense_points]
    points = [map.exact(p) for p in dense_points]
    return SignedIntMatrix(
        [[int(map.distance(image, q) < alpha) for q in points] for image in images]
    )


def theta_code(map, dense_points, prefix, alpha=None, beta=None):
    """
    Shadow of the pseudo-orbit p_(a_0), p_(a_1), ... of dense points.

    Args:
        map: ExpandingMapInstance
        dense_points: Points p_0..p_(k-1)
        prefix: Symbol sequence admissible for theta_matrix(map, dense_points, alpha)
        alpha: Transition threshold (default max_alpha_for_beta(map, beta))
        beta: Shadowing distance (default 0.9 min{eps/2, c/4})

    Returns:
        The beta-shadow point; f(theta(a)) equals theta(sigma a) exactly
    """
    if beta is None:
        beta = default_theta_beta(map)
    if alpha is None:
        alpha = max_alpha_for_beta(map, beta)
    alpha = Fraction(alpha)
    matrix = theta_matrix(map, dense_points, alpha)
    prefix = tuple(prefix)
    for a, b in zip(prefix, prefix[1:]):
        if matrix[a, b] != 1:
            raise ValueError(f"Prefix {prefix} uses the forbidden transition {a} -> {b}")
    points = [dense_points[a] for a in prefix]
    po = make_pseudo_orbit(map, points, alpha)
    return shadow_finite(map, po, beta).point
