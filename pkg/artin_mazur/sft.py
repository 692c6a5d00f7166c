"""
Subshifts of finite type.

Combinatorics (admissible words, periodic counts by trace and by brute
force, Perron entropy) and the one-sided shift as an expanding map on
exact eventually periodic sequences.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .config import NUMERIC_CONFIG
from .exactmat import SignedIntMatrix, mat_power_trace, perron_bounds
from .expmap import ExpandingMapInstance, InverseBranch
from .regions import Cylinder


@dataclass(frozen=True)
class SubshiftOfFiniteType:
    """Sequences over k symbols whose adjacent pairs are allowed by a 0/1 matrix."""

    transition: SignedIntMatrix

    def __post_init__(self):
        if not self.transition.is_binary:
            raise ValueError("A subshift transition matrix must have entries in {0, 1}")

    @classmethod
    def full(cls, k):
        return cls(SignedIntMatrix.ones(k))

    @classmethod
    def from_rows(cls, rows):
        return cls(SignedIntMatrix(rows))

    @property
    def k(self):
        return self.transition.dim

    @property
    def is_full(self):
        return all(v == 1 for row in self.transition.rows for v in row)

    def allowed(self, a, b):
        return self.transition[a, b] == 1

    def has_dead_ends(self):
        """True if some symbol has no successor or no predecessor."""
        rows = self.transition.rows
        no_successor = any(not any(row) for row in rows)
        no_predecessor = any(not any(row[j] for row in rows) for j in range(self.k))
        return no_successor or no_predecessor

    def as_array(self):
        return np.array(self.transition.rows, dtype=bool)


def _check_symbols(S, word):
    for symbol in word:
        if not 0 <= symbol < S.k:
            logging.error(f"Symbol {symbol} is outside the alphabet 0..{S.k - 1}.")
            raise ValueError(f"Symbol {symbol} out of range for alphabet size {S.k}")


def is_admissible(S, word):
    """True if every adjacent pair of word is allowed."""
    word = tuple(word)
    _check_symbols(S, word)
    return all(S.allowed(a, b) for a, b in zip(word, word[1:]))


def is_cyclically_admissible(S, word):
    word = tuple(word)
    return bool(word) and is_admissible(S, word + word[:1])


def count_periodic_trace(S, n):
    """N_n(sigma_A) = tr(A^n)."""
    return mat_power_trace(S.transition, n)


def count_periodic_bruteforce(S, n, chunk_size=1 << 16):
    """
    Count closed admissible words of length n by enumerating all k^n words.

    A word a_0..a_(n-1) is closed when every pair, including the wrap pair
    a_(n-1) a_0, is allowed.

    Args:
        S: SubshiftOfFiniteType
        n: Word length (n >= 1)
        chunk_size: Words decoded per numpy batch

    Returns:
        Number of closed admissible words
    """
    if n < 1:
        raise ValueError(f"count_periodic_bruteforce needs n >= 1, got {n}")
    total_words = S.k ** n
    if total_words > NUMERIC_CONFIG['bruteforce_limit']:
        logging.error(f"{S.k}^{n} words exceed the brute-force limit.")
        raise ValueError(f"Brute-force enumeration of {total_words} words is too large")

    allowed = S.as_array()
    place_values = S.k ** np.arange(n, dtype=np.int64)
    count = 0
    for start in range(0, total_words, chunk_size):
        indices = np.arange(start, min(start + chunk_size, total_words), dtype=np.int64)
        digits = (indices[:, None] // place_values) % S.k
        closed = np.ones(len(indices), dtype=bool)
        for i in range(n):
            closed &= allowed[digits[:, i], digits[:, (i + 1) % n]]
        count += int(closed.sum())
    return count


def count_admissible_words(S, n):
    """Number of admissible words of length n, the entry sum of A^(n-1)."""
    if n < 1:
        raise ValueError(f"count_admissible_words needs n >= 1, got {n}")
    return sum(sum(row) for row in S.transition.power(n - 1).rows)


def admissible_words(S, n):
    """Generate admissible words of length n in lexicographic order."""
    words = [(s,) for s in range(S.k)]
    for _ in range(n - 1):
        words = [w + (s,) for w in words for s in range(S.k) if S.allowed(w[-1], s)]
    return words


def sft_entropy(S, iterations=None):
    """
    Topological entropy log(lambda) of an irreducible subshift.

    Args:
        S: SubshiftOfFiniteType with irreducible transition matrix
        iterations: Perron bracketing iterations

    Returns:
        Tuple (entropy, uncertainty): log of the bracket midpoint and the
        largest distance from it to the log bracket ends
    """
    lower, upper = perron_bounds(S.transition, iterations)
    value = math.log((lower + upper) / 2)
    if lower <= 0:
        return value, math.inf
    uncertainty = max(math.log(upper) - value, value - math.log(lower))
    return value, uncertainty


def shift_separated_count(S, n, eps):
    """
    Combinatorial s_n(eps) on the shift space.

    Two sequences are (n, eps)-separated once their words of length n + m
    differ, where m = ceil(log2(1/eps)). On a full shift with dyadic eps
    the count of such words is exact; otherwise it is an upper bound.

    Returns:
        Tuple (count, exact)
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError(f"shift_separated_count needs 0 < eps <= 1, got {eps}")
    m = 0
    while Fraction(1, 2 ** m) > eps:
        m += 1
    exact = S.is_full and eps == Fraction(1, 2 ** m)
    return count_admissible_words(S, n + m), exact


@dataclass(frozen=True)
class ShiftPoint:
    """
    Eventually periodic one-sided sequence prefix + cycle + cycle + ...

    The representation is normalized (primitive cycle, shortest prefix), so
    equality of ShiftPoints is equality of sequences.
    """

    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        prefix = tuple(int(s) for s in self.prefix)
        cycle = tuple(int(s) for s in self.cycle)
        if not cycle:
            raise ValueError("A shift point needs a nonempty cycle")
        for d in range(1, len(cycle) + 1):
            if len(cycle) % d == 0 and cycle == cycle[:d] * (len(cycle) // d):
                cycle = cycle[:d]
                break
        while prefix and prefix[-1] == cycle[-1]:
            cycle = cycle[-1:] + cycle[:-1]
            prefix = prefix[:-1]
        object.__setattr__(self, 'prefix', prefix)
        object.__setattr__(self, 'cycle', cycle)

    @classmethod
    def periodic(cls, word):
        return cls((), tuple(word))

    def symbol(self, i):
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def take(self, n):
        return tuple(self.symbol(i) for i in range(n))

    def shift(self):
        if self.prefix:
            return ShiftPoint(self.prefix[1:], self.cycle)
        return ShiftPoint((), self.cycle[1:] + self.cycle[:1])

    def prepend(self, symbol):
        return ShiftPoint((symbol,) + self.prefix, self.cycle)

    def __str__(self):
        head = ''.join(str(s) for s in self.prefix)
        return f"{head}({''.join(str(s) for s in self.cycle)})"


def shift_distance(a, b):
    """Exact sum over n >= 0 of delta_n / 2^n, delta_n = 1 where the symbols differ."""
    head = max(len(a.prefix), len(b.prefix))
    period = math.lcm(len(a.cycle), len(b.cycle))
    distance = sum(
        (Fraction(1, 2 ** n) for n in range(head) if a.symbol(n) != b.symbol(n)), Fraction(0)
    )
    tail = sum(
        (
            Fraction(1, 2 ** (head + j))
            for j in range(period)
            if a.symbol(head + j) != b.symbol(head + j)
        ),
        Fraction(0),
    )
    return distance + tail / (1 - Fraction(1, 2 ** period))


class ShiftMap(ExpandingMapInstance):
    """The one-sided shift on an SFT with r = 1 and lambda = c = 1/2."""

    kind = 'sft'

    def __init__(self, S):
        if S.has_dead_ends():
            logging.error("Transition matrix has an all-zero row or column.")
            raise ValueError("The shift is not onto: some row or column of A is zero")
        super().__init__(
            r=Fraction(1), lam=Fraction(1, 2), c=Fraction(1, 2), degree=max(
                sum(S.transition[i, j] for i in range(S.k)) for j in range(S.k)
            )
        )
        self.S = S

    def check_ball_radius(self, eps):
        # cylinders give exact Bowen balls up to radius 1
        if not 0 < eps <= 1:
            raise ValueError(f"Shift Bowen balls need 0 < eps <= 1, got {eps}")

    def apply(self, x):
        return x.shift()

    def distance(self, x, y):
        return shift_distance(x, y)

    def exact(self, x):
        if isinstance(x, ShiftPoint):
            return x
        return ShiftPoint.periodic(x)

    def branches(self, x):
        branches = []
        for s in range(self.S.k):
            if not self.S.allowed(s, x.symbol(0)):
                continue

            def evaluator(y, s=s):
                return y.prepend(s)

            branches.append(
                InverseBranch(x, x.prepend(s), evaluator, self.distance, self.r, self.lam)
            )
        return branches

    def periodic_points(self, n):
        return periodic_points(self.S, n)

    def count_periodic(self, n):
        return count_periodic_trace(self.S, n)

    def snap_periodic(self, y, p):
        word = y.take(p)
        if not is_cyclically_admissible(self.S, word):
            raise ValueError(f"Word {word} does not close up into a periodic point")
        return ShiftPoint.periodic(word)

    def dynamical_ball(self, x, n, eps):
        """
        Cylinder of the points that agree with x on n + 1 + m symbols, eps = 2^-m.

        Balls of other radii are not cylinders and are refused. The cylinder
        differs from the open ball only by points at distance exactly eps.
        """
        eps = Fraction(eps)
        if eps.numerator != 1 or eps.denominator & (eps.denominator - 1):
            logging.error(f"Shift Bowen ball radius {eps} is not a power of 1/2.")
            raise ValueError(f"Shift Bowen balls need eps = 2^-m, got {eps}")
        m = eps.denominator.bit_length() - 1
        return Cylinder(x.take(n + 1 + m))

    def image_meets(self, source, target):
        """sigma([w]) meets [v]: v agrees with w[1:] and w_0 may precede v_0."""
        tail = Cylinder(source.word[1:])
        if not tail.compatible(target) or not self.S.allowed(source.word[0], target.word[0]):
            return False
        return is_admissible(self.S, target.word)

    def image_contains(self, source, target):
        """[v] lies inside sigma([w])."""
        tail = Cylinder(source.word[1:])
        return tail.interior_contains(target) and self.S.allowed(source.word[0], target.word[0])

    def pullback(self, rect, target):
        """[w] intersected with sigma^-1([v]), or None when empty."""
        tail = Cylinder(rect.word[1:]).intersection(target)
        if tail is None or not self.S.allowed(rect.word[0], target.word[0]):
            return None
        word = rect.word[:1] + tail.word
        return Cylinder(word) if is_admissible(self.S, word) else None

    def grid(self, resolution):
        """Periodic points of period D as symbol arrays, with 2^(1-D) <= resolution."""
        period = max(1, math.ceil(1 - math.log2(float(resolution))))
        words = [w for w in admissible_words(self.S, period) if self.S.allowed(w[-1], w[0])]
        return np.array(words, dtype=np.int64).reshape(len(words), period), Fraction(
            2, 2 ** period
        )

    def apply_array(self, points):
        return np.roll(points, -1, axis=-1)

    def distance_array(self, a, b):
        period = a.shape[-1]
        weights = 2.0 ** np.arange(period, 0, -1)
        return ((a != b) * weights).sum(axis=-1) / (2.0 ** period - 1)

    def describe(self):
        info = super().describe()
        info['matrix'] = [list(row) for row in self.S.transition.rows]
        return info

    def __repr__(self):
        return f"ShiftMap(A={[list(row) for row in self.S.transition.rows]})"


def as_expanding_map(S):
    """
    Wrap the one-sided subshift as an expanding map.

    Points are ShiftPoint sequences with metric sum delta_n / 2^n; inverse
    branches prepend a symbol s with A[s][x_0] = 1.
    """
    return ShiftMap(S)


def periodic_points(S, n):
    """All closed admissible words of length n as periodic shift points."""
    limit = NUMERIC_CONFIG["bruteforce_limit"]
    if S.k ** n > limit:
        raise ValueError(f"Enumerating {S.k}^{n} words exceeds the limit {limit}")
    return [
        ShiftPoint.periodic(word)
        for word in itertools.product(range(S.k), repeat=n)
        if is_cyclically_admissible(S, word)
    ]
