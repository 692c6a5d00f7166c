"""
Ruelle-expanding maps and their contractive inverse branches.

An ExpandingMapInstance bundles a point space with its metric, the forward
map, the local inverse branches and the constants (r, lambda, c). Concrete
instances are circle maps t -> kt mod 1, toral endomorphisms v -> Mv mod 1
and one-sided subshifts of finite type (see sft.as_expanding_map).
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .config import NUMERIC_CONFIG
from .exactmat import SignedIntMatrix, determinant
from .regions import Arc, circle_distance, mod1, wrap_difference


@dataclass(frozen=True, eq=False)
class InverseBranch:
    """
    Local inverse g of f^n anchored at x with g(x) = preimage.

    The evaluator is defined on the open ball B_radius(anchor) and contracts
    distances by factor. chain lists the intermediate preimages of a
    composed branch, from the anchor's first preimage down to g(x).
    """

    anchor: object
    preimage: object
    evaluator: Callable
    distance: Callable
    radius: Fraction
    factor: Fraction
    chain: tuple = field(default=())

    def __call__(self, y):
        if self.distance(y, self.anchor) >= self.radius:
            raise ValueError(
                f"Point {y} lies outside the branch domain of radius {float(self.radius)}"
            )
        return self.evaluator(y)


class ExpandingMapInstance:
    """Common interface of the concrete expanding maps."""

    kind = None

    def __init__(self, r, lam, c, degree, is_expanding=True):
        self.r = r
        self.lam = lam
        self.c = c
        self.degree = degree
        self.is_expanding = is_expanding

    @property
    def ball_limit(self):
        """min{r, c/(1 + lambda)}, the bound every expansivity constant stays below."""
        return min(self.r, self.c / (1 + self.lam))

    @property
    def expansivity_eps(self):
        return NUMERIC_CONFIG['expansivity_safety'] * self.ball_limit

    def check_ball_radius(self, eps):
        if not 0 < eps < self.ball_limit:
            logging.error(f"Bowen ball radius {eps} is not in (0, {float(self.ball_limit)}).")
            raise ValueError(f"eps must satisfy 0 < eps < min{{r, c/(1+lambda)}}, got {eps}")

    def iterate(self, x, n):
        for _ in range(n):
            x = self.apply(x)
        return x

    def orbit(self, x, n):
        """Points x, f(x), ..., f^(n-1)(x)."""
        points = []
        for _ in range(n):
            points.append(x)
            x = self.apply(x)
        return points

    def orbit_array(self, points, n):
        """Stack of iterates 0..n-1 of a point array, shape (n, *points.shape)."""
        iterates = [points]
        for _ in range(n - 1):
            iterates.append(self.apply_array(iterates[-1]))
        return np.stack(iterates)

    def describe(self):
        return {
            'kind': self.kind,
            'r': float(self.r),
            'lambda': float(self.lam),
            'c': float(self.c),
            'expansivity_eps': float(self.expansivity_eps),
            'degree': self.degree,
        }


class CircleMap(ExpandingMapInstance):
    """The map t -> kt mod 1 on R/Z."""

    kind = 'circle'

    def __init__(self, k):
        margin = NUMERIC_CONFIG['margin']
        super().__init__(
            r=Fraction(1, 2 * k) - margin,
            lam=Fraction(1, k),
            c=Fraction(1, k) - margin,
            degree=k,
        )
        self.k = k

    def apply(self, x):
        return mod1(self.k * x)

    def distance(self, x, y):
        return circle_distance(x, y)

    def exact(self, x):
        return mod1(x if isinstance(x, Fraction) else Fraction(x))

    def preimages(self, x):
        t = mod1(x)
        return [mod1((t + j) / self.k) for j in range(self.k)]

    def branches(self, x):
        branches = []
        for a in self.preimages(x):
            def evaluator(y, a=a):
                return mod1(a + wrap_difference(y - x) / self.k)

            branches.append(InverseBranch(x, a, evaluator, self.distance, self.r, self.lam))
        return branches

    def periodic_points(self, n):
        q = self.k ** n - 1
        return [Fraction(j, q) for j in range(q)]

    def count_periodic(self, n):
        return self.k ** n - 1

    def snap_periodic(self, y, p):
        q = self.k ** p - 1
        return mod1(Fraction(round(self.exact(y) * q), q))

    def dynamical_ball(self, x, n, eps):
        return Arc.centered(self.exact(x), Fraction(eps) / self.k ** n, closed=False)

    def image_region(self, arc):
        return Arc(self.k * arc.start, self.k * arc.length)

    def preimage_region(self, arc):
        if arc.is_full:
            return [Arc.full()]
        return [Arc((arc.start + j) / self.k, arc.length / self.k) for j in range(self.k)]

    def image_meets(self, source, target):
        return self.image_region(source).interior_intersects(target)

    def image_contains(self, source, target):
        return self.image_region(source).interior_contains(target)

    def grid(self, resolution):
        """Uniform dyadic grid with spacing at most resolution."""
        exponent = max(1, math.ceil(-math.log2(float(resolution))))
        size = 2 ** exponent
        return np.arange(size, dtype=float) / size, Fraction(1, size)

    def apply_array(self, points):
        return (self.k * points) % 1.0

    def distance_array(self, a, b):
        t = np.abs(a - b) % 1.0
        return np.minimum(t, 1.0 - t)

    def __repr__(self):
        return f"CircleMap(k={self.k})"


def _lattice_representatives(rows):
    """
    Points u of [0,1)^2 with N u integral, for a nonsingular 2x2 integer N.

    Z^2 / N Z^2 is represented by (i, j) with 0 <= i < |det|/g and
    0 <= j < g, g being the gcd of the second row of N.
    """
    (n00, n01), (n10, n11) = rows
    det = n00 * n11 - n01 * n10
    if det == 0:
        raise ValueError("Lattice representatives need a nonsingular matrix")
    g = math.gcd(n10, n11)
    a = abs(det) // g
    reps = []
    for i in range(a):
        for j in range(g):
            u0 = Fraction(n11 * i - n01 * j, det)
            u1 = Fraction(-n10 * i + n00 * j, det)
            reps.append((mod1(u0), mod1(u1)))
    return reps


def _eigenvalue_moduli(M):
    """Classify eigenvalues of a 2x2 integer matrix against the unit circle."""
    t, d = M.trace(), determinant(M)
    discriminant = t * t - 4 * d
    if discriminant < 0:
        modulus_squared = d
        return {'all_outside': modulus_squared > 1, 'none_on_circle': modulus_squared != 1}
    p_plus, p_minus = 1 - t + d, 1 + t + d
    one_each_side = p_plus < 0 and p_minus < 0
    both_same_side = p_plus > 0 and p_minus > 0 and abs(t) > 2
    return {
        'all_outside': one_each_side or both_same_side,
        'none_on_circle': p_plus != 0 and p_minus != 0,
    }


def _torus_distance(u, v):
    return max(circle_distance(a, b) for a, b in zip(u, v))


class ToralMap(ExpandingMapInstance):
    """The endomorphism v -> Mv mod 1 of the flat torus with the max-metric."""

    kind = 'toral'

    def __init__(self, M, strict=True):
        if M.dim != 2:
            raise ValueError(f"Toral maps need a 2x2 matrix, got dimension {M.dim}")
        det = determinant(M)
        if det == 0:
            raise ValueError("Toral matrix is singular")
        moduli = _eigenvalue_moduli(M)
        adj = ((M[1, 1], -M[0, 1]), (-M[1, 0], M[0, 0]))
        self.inverse = tuple(tuple(Fraction(v, det) for v in row) for row in adj)
        lam = max(sum(abs(v) for v in row) for row in self.inverse)
        expanding = moduli['all_outside'] and lam < 1
        if strict:
            if not moduli['all_outside']:
                logging.error(f"Toral matrix {M.rows} has an eigenvalue of modulus <= 1.")
                raise ValueError("Toral map eigenvalues must exceed 1 in modulus")
            if lam >= 1:
                logging.error(f"Operator norm of M^-1 is {lam} for {M.rows}.")
                raise ValueError("not expanding in one step")
        elif not moduli['none_on_circle']:
            raise ValueError("Toral matrix has an eigenvalue on the unit circle")

        self.M = M
        self.det = det
        self.lattice = _lattice_representatives(M.rows)
        margin = NUMERIC_CONFIG['margin']
        gaps = [
            _torus_distance(u, v)
            for i, u in enumerate(self.lattice)
            for v in self.lattice[i + 1:]
        ]
        self.min_gap = min(gaps) if gaps else math.inf
        if gaps:
            c, r = self.min_gap - margin, self.min_gap / 2 - margin
        else:
            c, r = Fraction(1, 2), Fraction(1, 2) - margin
        super().__init__(r=r, lam=lam, c=c, degree=abs(det), is_expanding=expanding)

    def apply(self, x):
        return tuple(mod1(sum(m * v for m, v in zip(row, x))) for row in self.M.rows)

    def distance(self, x, y):
        return _torus_distance(x, y)

    def exact(self, x):
        return tuple(mod1(v if isinstance(v, Fraction) else Fraction(v)) for v in x)

    def _apply_inverse(self, v):
        return tuple(sum(m * c for m, c in zip(row, v)) for row in self.inverse)

    def preimages(self, x):
        base = self._apply_inverse(x)
        return [tuple(mod1(b + u) for b, u in zip(base, rep)) for rep in self.lattice]

    def branches(self, x):
        branches = []
        for a in self.preimages(x):
            def evaluator(y, a=a):
                step = self._apply_inverse([wrap_difference(yi - xi) for yi, xi in zip(y, x)])
                return tuple(mod1(ai + si) for ai, si in zip(a, step))

            branches.append(InverseBranch(x, a, evaluator, self.distance, self.r, self.lam))
        return branches

    def _shifted_power(self, n):
        return self.M.power(n) - SignedIntMatrix.identity(2)

    def periodic_points(self, n):
        return _lattice_representatives(self._shifted_power(n).rows)

    def count_periodic(self, n):
        return toral_count(self.M, n)

    def snap_periodic(self, y, p):
        shifted = self._shifted_power(p)
        y = self.exact(y)
        target = [round(sum(m * v for m, v in zip(row, y))) for row in shifted.rows]
        (n00, n01), (n10, n11) = shifted.rows
        det = n00 * n11 - n01 * n10
        return (
            mod1(Fraction(n11 * target[0] - n01 * target[1], det)),
            mod1(Fraction(-n10 * target[0] + n00 * target[1], det)),
        )

    def dynamical_ball(self, x, n, eps):
        return BowenBall(self, self.exact(x), n, Fraction(eps))

    def grid(self, resolution):
        exponent = max(1, math.ceil(-math.log2(float(resolution))))
        size = 2 ** exponent
        axis = np.arange(size, dtype=float) / size
        xs, ys = np.meshgrid(axis, axis, indexing='ij')
        return np.column_stack([xs.ravel(), ys.ravel()]), Fraction(1, size)

    def apply_array(self, points):
        matrix = np.array(self.M.rows, dtype=float)
        return (points @ matrix.T) % 1.0

    def distance_array(self, a, b):
        t = np.abs(a - b) % 1.0
        return np.minimum(t, 1.0 - t).max(axis=-1)

    def __repr__(self):
        return f"ToralMap(M={[list(row) for row in self.M.rows]})"


@dataclass(frozen=True, eq=False)
class BowenBall:
    """
    Bowen ball B(n, eps, x) stored as the branch image g(B_eps(f^n(x))).

    g is the composed inverse branch of f^n at f^n(x) that returns to x.
    """

    map: ExpandingMapInstance
    center: object
    n: int
    eps: Fraction

    @property
    def anchor(self):
        return self.map.iterate(self.center, self.n)

    @property
    def branch(self):
        return branch_chain(self.map, self.center, self.n)

    def contains(self, y):
        image = self.map.iterate(y, self.n)
        if self.map.distance(image, self.anchor) >= self.eps:
            return False
        return self.map.distance(self.branch(image), y) <= 1e-12


def make_circle_map(k):
    """
    Build the expanding circle map t -> kt mod 1.

    Args:
        k: Degree, an integer >= 2

    Returns:
        CircleMap with lambda = 1/k, c = 1/k - margin and r = 1/(2k) - margin
    """
    if int(k) != k or k < 2:
        logging.error(f"Circle map degree must be an integer >= 2, got {k}.")
        raise ValueError(f"Circle map degree must be an integer >= 2, got {k}")
    return CircleMap(int(k))


def make_toral_map(M, strict=True):
    """
    Build the toral endomorphism induced by a 2x2 integer matrix.

    Args:
        M: SignedIntMatrix of dimension 2
        strict: Require an expanding map (all eigenvalue moduli > 1 and
            ||M^-1||_inf < 1). With strict=False any matrix without
            eigenvalues on the unit circle is accepted; such maps support
            counting but not shadowing.

    Returns:
        ToralMap
    """
    return ToralMap(M, strict=strict)


def toral_count(M, n):
    """Number of points of period n of v -> Mv mod 1, |det(M^n - I)|."""
    if n < 1:
        raise ValueError(f"toral_count needs n >= 1, got {n}")
    count = abs(determinant(M.power(n) - SignedIntMatrix.identity(M.dim)))
    if count == 0:
        raise ValueError(f"M^{n} has eigenvalue 1; the periodic set is not finite")
    return count


def compose_branches(map, x, n, choice):
    """
    Compose n one-step inverse branches into a branch of f^-n at x.

    choice[0] picks a branch at x, choice[1] a branch at the resulting
    preimage, and so on.

    Args:
        map: ExpandingMapInstance
        x: Anchor point
        n: Number of steps
        choice: Sequence of n branch indices

    Returns:
        InverseBranch with f^n(g(y)) = y on B_r(x) and factor lambda^n
    """
    if len(choice) != n:
        raise ValueError(f"Need {n} branch choices, got {len(choice)}")
    steps = []
    point = x
    for level, index in enumerate(choice):
        branches = map.branches(point)
        if not 0 <= index < len(branches):
            logging.error(f"Branch index {index} at level {level} exceeds {len(branches)}.")
            raise ValueError(f"Branch index {index} out of range at level {level}")
        steps.append(branches[index])
        point = branches[index].preimage

    def evaluator(y):
        for branch in steps:
            y = branch(y)
        return y

    return InverseBranch(
        x,
        point,
        evaluator,
        map.distance,
        map.r,
        map.lam ** n,
        tuple(branch.preimage for branch in steps),
    )


def branch_through(map, a):
    """
    The branch at f(a) that sends f(a) back to a.

    Raises:
        ValueError if no branch preimage lies within c/2 of a
    """
    branches = map.branches(map.apply(a))
    best = min(branches, key=lambda branch: map.distance(branch.preimage, a))
    gap = map.distance(best.preimage, a)
    if gap > map.c / 2:
        logging.error(f"No inverse branch through {a}: nearest preimage at {gap}.")
        raise ValueError(f"No inverse branch passes within c/2 of {a}")
    return best


def branch_chain(map, x, n):
    """Branch of f^-n at f^n(x) returning to x, built from branch_through."""
    orbit = map.orbit(x, n + 1)
    steps = [branch_through(map, orbit[j]) for j in range(n - 1, -1, -1)]

    def evaluator(y):
        for branch in steps:
            y = branch(y)
        return y

    return InverseBranch(
        orbit[n],
        x,
        evaluator,
        map.distance,
        map.r,
        map.lam ** n,
        tuple(branch.preimage for branch in steps),
    )


def dynamical_ball(map, x, n, eps):
    """
    Bowen ball {y : d(f^j y, f^j x) < eps for 0 <= j <= n}.

    Circle maps return an open Arc of radius eps/k^n around x, shifts a
    Cylinder and toral maps a BowenBall branch image.

    Raises:
        ValueError if eps is outside the range the map allows
    """
    map.check_ball_radius(eps)
    return map.dynamical_ball(x, n, eps)


def bowen_distance(map, x, y, n):
    """d_n(x, y) = max over 0 <= j < n of d(f^j x, f^j y)."""
    distance = 0
    for _ in range(n):
        distance = max(distance, map.distance(x, y))
        x, y = map.apply(x), map.apply(y)
    return distance


def preimage_separation_bound(map, samples):
    """
    Largest preimage count and smallest preimage gap over sample points.

    Args:
        map: ExpandingMapInstance
        samples: Nonempty iterable of points

    Returns:
        Tuple (max_preimage_count, min_gap); min_gap is math.inf when no
        sampled point has two preimages
    """
    samples = list(samples)
    if not samples:
        raise ValueError("preimage_separation_bound needs at least one sample")
    max_count, min_gap = 0, math.inf
    for x in samples:
        preimages = [branch.preimage for branch in map.branches(map.exact(x))]
        max_count = max(max_count, len(preimages))
        for i, a in enumerate(preimages):
            for b in preimages[i + 1:]:
                min_gap = min(min_gap, map.distance(a, b))
    return max_count, min_gap


def periodic_points(map, n):
    """All points with f^n(x) = x, exactly."""
    return map.periodic_points(n)


def snap_periodic(map, y, p):
    """Nearest exact point of period p to y."""
    return map.snap_periodic(y, p)
