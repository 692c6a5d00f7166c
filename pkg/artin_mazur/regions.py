"""
Closed arcs of the circle R/Z and cylinder sets of a shift space.

Both region kinds carry exact arithmetic: arc endpoints are Fractions and
cylinders are symbol words. Rectangles of Markov covers, dynamical balls
and coding pullbacks are all expressed with them.
"""

from dataclasses import dataclass
from fractions import Fraction


def mod1(value):
    """Reduce a point of R to its representative in [0, 1)."""
    return value % 1


def wrap_difference(value):
    """Signed representative of value mod 1 in [-1/2, 1/2)."""
    t = value % 1
    return t - 1 if t >= Fraction(1, 2) else t


def circle_distance(x, y):
    t = (x - y) % 1
    return min(t, 1 - t)


@dataclass(frozen=True)
class Arc:
    """
    Arc [start, start + length] of the circle R/Z.

    A length of 1 is the whole circle. Arcs with closed=False stand for the
    open arc and are used for Bowen balls.
    """

    start: Fraction
    length: Fraction
    closed: bool = True

    def __post_init__(self):
        start = self.start if isinstance(self.start, Fraction) else Fraction(self.start)
        length = self.length if isinstance(self.length, Fraction) else Fraction(self.length)
        if length < 0:
            raise ValueError(f"Arc length must be nonnegative, got {length}")
        object.__setattr__(self, 'start', mod1(start))
        object.__setattr__(self, 'length', min(length, Fraction(1)))

    @classmethod
    def from_endpoints(cls, lo, hi):
        """Arc running counter-clockwise from lo to hi; hi == lo + 1 is the whole circle."""
        lo, hi = Fraction(lo), Fraction(hi)
        length = hi - lo
        if length <= 0 or length > 1:
            length = (hi - lo) % 1
        return cls(lo, length)

    @classmethod
    def centered(cls, center, radius, closed=True):
        radius = Fraction(radius)
        return cls(Fraction(center) - radius, 2 * radius, closed)

    @classmethod
    def full(cls):
        return cls(Fraction(0), Fraction(1))

    @property
    def is_full(self):
        return self.length >= 1

    @property
    def end(self):
        """End point on the lifted line, start <= end <= start + 1."""
        return self.start + self.length

    @property
    def diameter(self):
        return min(self.length, Fraction(1, 2))

    def offset(self, x):
        """Counter-clockwise distance from the start of the arc to x."""
        return (x - self.start) % 1

    def contains(self, x):
        if self.is_full:
            return True
        t = self.offset(x)
        if self.closed:
            return t <= self.length
        return 0 < t < self.length

    def interior_intersects(self, other):
        if self.length == 0 or other.length == 0:
            return False
        if self.is_full or other.is_full:
            return True
        return self.offset(other.start) < self.length or other.offset(self.start) < other.length

    def closed_intersects(self, other):
        if self.is_full or other.is_full:
            return True
        return self.offset(other.start) <= self.length or other.offset(self.start) <= other.length

    def interior_contains(self, other):
        """True if the open arc of other lies inside the open arc of self."""
        if self.is_full:
            return True
        if other.is_full:
            return False
        return self.offset(other.start) + other.length <= self.length

    def intersection(self, other):
        """
        Closed intersection of two arcs as a list of arcs.

        Two arcs whose lengths add up to more than 1 can meet in two pieces;
        pieces of length 0 are touching points.
        """
        if self.is_full:
            return [other]
        if other.is_full:
            return [self]
        pieces = {}
        for s in (self.start, other.start):
            if self.contains_closed(s) and other.contains_closed(s):
                length = min(self.length - self.offset(s), other.length - other.offset(s))
                pieces.setdefault(s, Arc(s, length))
        return sorted(pieces.values(), key=lambda arc: arc.start)

    def contains_closed(self, x):
        return self.is_full or self.offset(x) <= self.length

    def __str__(self):
        if self.is_full:
            return "[0, 1]"
        left, right = ("[", "]") if self.closed else ("(", ")")
        return f"{left}{self.start}, {self.end}{right}"


def family_intersects(arcs):
    """
    True if closed arcs share a common point.

    A nonempty intersection of closed arcs is a union of arcs, each of which
    starts at the start point of one of the arcs, so testing those suffices.
    """
    arcs = list(arcs)
    return any(all(arc.contains_closed(candidate.start) for arc in arcs) for candidate in arcs)


def covers_circle(arcs):
    """True if the union of closed arcs is the whole circle."""
    arcs = list(arcs)
    if any(arc.is_full for arc in arcs):
        return True
    breakpoints = sorted({arc.start for arc in arcs} | {mod1(arc.end) for arc in arcs})
    if not breakpoints:
        return False
    gaps = list(zip(breakpoints, breakpoints[1:] + [breakpoints[0] + 1]))
    for lo, hi in gaps:
        middle = mod1((lo + hi) / 2)
        if not any(arc.contains_closed(middle) for arc in arcs):
            return False
    return True


@dataclass(frozen=True)
class Cylinder:
    """Set of one-sided sequences beginning with a fixed word."""

    word: tuple

    def __post_init__(self):
        object.__setattr__(self, 'word', tuple(int(s) for s in self.word))

    @property
    def depth(self):
        return len(self.word)

    @property
    def diameter(self):
        """Upper bound 2^(1 - depth) in the metric sum delta_n / 2^n."""
        return Fraction(2, 2 ** self.depth)

    def contains(self, point):
        return point.take(self.depth) == self.word

    def compatible(self, other):
        shorter = min(self.depth, other.depth)
        return self.word[:shorter] == other.word[:shorter]

    def intersection(self, other):
        """The smaller cylinder when the words are compatible, else None."""
        if not self.compatible(other):
            return None
        return self if self.depth >= other.depth else other

    def interior_intersects(self, other):
        return self.compatible(other)

    def interior_contains(self, other):
        return other.depth >= self.depth and other.word[: self.depth] == self.word

    def __str__(self):
        return "[" + ",".join(str(s) for s in self.word) + "]"
