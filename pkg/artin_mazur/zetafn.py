"""
Zeta-function algebra.

Series from periodic counts, rational forms from transition matrices and
signed cover families, counts back from rational forms, radius of
convergence, primitive orbits and the modulus bounds of expansive maps.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .config import NUMERIC_CONFIG
from .exactmat import IntPolynomial, char_poly_det


def _poly_gcd(f, g):
    """Primitive gcd of two sympy polynomials from their subresultant sequence."""
    chain = [p for p in f.subresultants(g) if not p.is_zero]
    return chain[-1].primitive()[1]


@dataclass(frozen=True)
class RationalFunction:
    """
    Ratio of integer polynomials in z, kept in reduced canonical form.

    Common polynomial factors are removed through a subresultant gcd, shared
    integer content is divided out and the denominator constant term is
    positive.
    """

    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den.is_zero:
            raise ValueError("RationalFunction denominator is the zero polynomial")
        if num.is_zero:
            num, den = IntPolynomial(), IntPolynomial((1,))
        else:
            f, g = num.to_sympy(), den.to_sympy()
            common = _poly_gcd(f, g)
            num = IntPolynomial.from_sympy(f.exquo(common))
            den = IntPolynomial.from_sympy(g.exquo(common))
            content = math.gcd(num.content(), den.content())
            num = IntPolynomial(c // content for c in num.coefficients)
            den = IntPolynomial(c // content for c in den.coefficients)
        if den.constant == 0:
            raise ValueError(f"Denominator vanishes at z=0 after reduction: {den}")
        if den.constant < 0:
            num, den = -num, -den
        object.__setattr__(self, 'numerator', num)
        object.__setattr__(self, 'denominator', den)

    @classmethod
    def from_coefficients(cls, numerator, denominator):
        return cls(IntPolynomial(numerator), IntPolynomial(denominator))

    def __call__(self, z):
        return self.numerator(z) / self.denominator(z)

    def at_zero(self):
        return Fraction(self.numerator.constant, self.denominator.constant)

    def series(self, order):
        """Exact Taylor coefficients c_0..c_order as a TruncatedSeries."""
        den = self.denominator
        coeffs = []
        for n in range(order + 1):
            acc = Fraction(self.numerator.coefficient(n))
            for j in range(1, min(n, den.degree) + 1):
                acc -= den.coefficients[j] * coeffs[n - j]
            coeffs.append(acc / den.constant)
        return TruncatedSeries(tuple(coeffs))

    def to_text(self):
        """Serialize as 'num: c0 c1 ... / den: c0 c1 ...'."""
        num = ' '.join(str(c) for c in self.numerator.coefficients) or '0'
        den = ' '.join(str(c) for c in self.denominator.coefficients)
        return f"num: {num} / den: {den}"

    @classmethod
    def from_text(cls, text):
        try:
            num_part, den_part = text.split('/')
            num = num_part.strip().removeprefix('num:').split()
            den = den_part.strip().removeprefix('den:').split()
            return cls.from_coefficients([int(c) for c in num], [int(c) for c in den])
        except ValueError as e:
            logging.error(f"Could not parse rational function '{text}'.")
            raise ValueError(f"Malformed rational function text '{text}': {e}") from e

    def __str__(self):
        num = str(self.numerator)
        if self.denominator.coefficients == (1,):
            return num
        if len([c for c in self.numerator.coefficients if c]) > 1:
            num = f"({num})"
        den = str(self.denominator)
        if len([c for c in self.denominator.coefficients if c]) > 1:
            den = f"({den})"
        return f"{num}/{den}"


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact power series coefficients c_0..c_m."""

    coefficients: tuple

    @property
    def order(self):
        return len(self.coefficients) - 1

    def __getitem__(self, n):
        return self.coefficients[n]

    def __call__(self, z):
        value = 0
        for c in reversed(self.coefficients):
            value = value * z + c
        return value


@dataclass(frozen=True)
class CountSequence:
    """
    Periodic-point counts N_1..N_m.

    Only nonnegativity is enforced here; realizability by a map is tested
    by primitive_orbit_counts.
    """

    counts: tuple

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ValueError(f"Periodic counts must be nonnegative, got {counts}")
        object.__setattr__(self, 'counts', counts)

    @property
    def order(self):
        return len(self.counts)

    def count(self, n):
        """N_n, indexed from 1."""
        if not 1 <= n <= self.order:
            raise IndexError(f"N_{n} is outside the stored order {self.order}")
        return self.counts[n - 1]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)


@dataclass(frozen=True)
class RadiusResult:
    """Radius of convergence bracket and periodic entropy."""

    rho: float
    rho_lower: float
    rho_upper: float
    periodic_entropy: float
    has_poles: bool

    @property
    def entropy_bounds(self):
        if not self.has_poles:
            return 0.0, 0.0
        return -math.log(self.rho_upper), -math.log(self.rho_lower)


def zeta_series_from_counts(N):
    """
    Truncated exp(sum N_n z^n / n) with exact rational coefficients.

    Uses n c_n = sum_{k=1}^{n} N_k c_{n-k}, which follows from the
    logarithmic derivative of the exponential.

    Args:
        N: CountSequence with order m >= 1

    Returns:
        TruncatedSeries c_0..c_m
    """
    if N.order < 1:
        raise ValueError("zeta_series_from_counts needs at least one count")
    coeffs = [Fraction(1)]
    for n in range(1, N.order + 1):
        acc = sum(N.count(k) * coeffs[n - k] for k in range(1, n + 1))
        coeffs.append(Fraction(acc) / n)
    return TruncatedSeries(tuple(coeffs))


def zeta_from_sft(A):
    """Rational zeta function 1/det(I - zA) of the subshift with matrix A."""
    if not A.is_binary:
        logging.error("zeta_from_sft called with a non-binary matrix.")
        raise ValueError("zeta_from_sft expects a binary transition matrix")
    return RationalFunction(IntPolynomial((1,)), char_poly_det(A))


def zeta_from_signed_family(B):
    """
    Alternating determinant product of a signed family B^(1)..B^(L).

    Even r contribute det(I - zB^(r)) to the numerator and odd r to the
    denominator.

    Args:
        B: Nonempty list of SignedIntMatrix, B[0] being B^(1)

    Returns:
        RationalFunction with value 1 at z = 0
    """
    if not B:
        raise ValueError("zeta_from_signed_family needs a nonempty family")
    numerator = IntPolynomial((1,))
    denominator = IntPolynomial((1,))
    for index, matrix in enumerate(B):
        factor = char_poly_det(matrix)
        if index % 2:
            numerator = numerator * factor
        else:
            denominator = denominator * factor
    zeta = RationalFunction(numerator, denominator)
    if zeta.numerator.constant != 1 or zeta.denominator.constant != 1:
        logging.error(f"Signed family reduced to a non-integral zeta form {zeta}.")
        raise ValueError("Inconsistent B family: reduced zeta is not 1 at z = 0")
    return zeta


def counts_from_zeta(R, m):
    """
    Recover N_1..N_m from z R'(z)/R(z) = sum N_n z^n.

    Args:
        R: RationalFunction with R(0) = 1
        m: Number of counts

    Returns:
        CountSequence

    Raises:
        ValueError if R(0) != 1 or a recovered count is negative or not an integer
    """
    if m < 1:
        raise ValueError(f"counts_from_zeta needs m >= 1, got {m}")
    if R.at_zero() != 1:
        raise ValueError(f"A zeta function must equal 1 at z = 0, got {R.at_zero()}")
    num, den = R.numerator, R.denominator
    top = IntPolynomial((0, 1)) * (num.derivative() * den - num * den.derivative())
    bottom = num * den
    series = []
    for n in range(m + 1):
        acc = Fraction(top.coefficient(n))
        for j in range(1, min(n, bottom.degree) + 1):
            acc -= bottom.coefficients[j] * series[n - j]
        series.append(acc / bottom.constant)
    counts = series[1:]
    for n, value in enumerate(counts, start=1):
        if value.denominator != 1 or value < 0:
            logging.error(f"N_{n} = {value} recovered from {R} is not a count.")
            raise ValueError(f"{R} is not a zeta function: N_{n} = {value}")
    return CountSequence(tuple(int(v) for v in counts))


def _modulus_bracket(corner_low, corner_high):
    """Certified modulus bracket of a root isolated in a rectangle."""
    x1, y1 = float(sympy.re(corner_low)), float(sympy.im(corner_low))
    x2, y2 = float(sympy.re(corner_high)), float(sympy.im(corner_high))
    dx = 0.0 if x1 <= 0 <= x2 else min(abs(x1), abs(x2))
    dy = 0.0 if y1 <= 0 <= y2 else min(abs(y1), abs(y2))
    return math.hypot(dx, dy), math.hypot(max(abs(x1), abs(x2)), max(abs(y1), abs(y2)))


def radius_and_entropy(R, eps=None):
    """
    Radius of convergence of R and the periodic entropy -log(rho).

    Roots of the reduced denominator are isolated by sympy to width eps:
    real roots in rational intervals, complex roots in rational rectangles.
    The bracket on rho is the minimum over roots of certified modulus
    lower and upper bounds.

    Args:
        R: RationalFunction
        eps: Isolation width (default NUMERIC_CONFIG['root_eps'])

    Returns:
        RadiusResult; rho is infinite and entropy 0 when there are no poles
    """
    if R.numerator.is_zero:
        raise ValueError("radius_and_entropy is undefined for the zero function")
    if eps is None:
        eps = NUMERIC_CONFIG['root_eps']
    if R.denominator.degree < 1:
        return RadiusResult(math.inf, math.inf, math.inf, 0.0, False)

    brackets = []
    # sympy isolates all roots only for square-free input
    _, factors = R.denominator.to_sympy().sqf_list()
    for factor, _ in factors:
        if factor.degree() < 1:
            continue
        real_roots, complex_roots = factor.intervals(all=True, eps=sympy.Rational(str(eps)))
        for (low, high), _ in real_roots:
            low, high = float(low), float(high)
            lower = 0.0 if low <= 0 <= high else min(abs(low), abs(high))
            brackets.append((lower, max(abs(low), abs(high))))
        for (corner_low, corner_high), _ in complex_roots:
            brackets.append(_modulus_bracket(corner_low, corner_high))

    rho_lower = min(b[0] for b in brackets)
    rho_upper = min(b[1] for b in brackets)
    rho = (rho_lower + rho_upper) / 2
    logging.debug(f"Radius of {R}: {rho_lower} <= rho <= {rho_upper}")
    return RadiusResult(rho, rho_lower, rho_upper, -math.log(rho), True)


def _mobius(n):
    exponents = sympy.factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def primitive_orbit_counts(N):
    """
    Number of primitive orbits of each minimal period, by Mobius inversion.

    Args:
        N: CountSequence

    Returns:
        Tuple P_1..P_m of nonnegative integers

    Raises:
        ValueError if some P_n is negative or not an integer
    """
    primitive = []
    for n in range(1, N.order + 1):
        total = sum(_mobius(n // d) * N.count(d) for d in sympy.divisors(n))
        if total % n or total < 0:
            logging.error(f"Counts {N.counts} give P_{n} = {Fraction(total, n)}.")
            raise ValueError(f"Counts are not realizable: P_{n} = {Fraction(total, n)}")
        primitive.append(total // n)
    return tuple(primitive)


def check_recurrence(N, R):
    """
    True iff the counts of R reproduce N exactly.

    Raises:
        ValueError if N is too short to determine the recurrence of R
    """
    needed = R.numerator.degree + R.denominator.degree + 1
    if N.order < needed:
        raise ValueError(f"check_recurrence needs at least {needed} counts, got {N.order}")
    try:
        return counts_from_zeta(R, N.order).counts == N.counts
    except ValueError:
        return False


def zeta_modulus_bounds_check(N, r, samples):
    """
    Check 1 - r|z| <= |zeta(z)| <= 1/(1 - r|z|) on sample points.

    The truncated series is evaluated at each sample. Since N_n <= r^n its
    coefficients are dominated by those of 1/(1 - rz), so the neglected tail
    is at most (r|z|)^(m+1)/(1 - r|z|); that tail widens both bounds.

    Args:
        N: CountSequence with N_n <= r^n
        r: Positive integer growth bound
        samples: Iterable of complex or real z with |z| < 1/r

    Returns:
        True if every sample respects the bounds
    """
    if r < 1:
        raise ValueError(f"Growth bound r must be a positive integer, got {r}")
    for n, value in enumerate(N, start=1):
        if value > r ** n:
            raise ValueError(f"N_{n} = {value} exceeds r^n = {r ** n}")
    series = zeta_series_from_counts(N)
    coefficients = [float(c) for c in series.coefficients]
    ok = True
    for z in samples:
        t = r * abs(z)
        if t >= 1:
            logging.error(f"Sample z = {z} lies outside the disc |z| < 1/{r}.")
            raise ValueError(f"Sample |z| = {abs(z)} is not below 1/r = {1 / r}")
        value = 0j
        for c in reversed(coefficients):
            value = value * z + c
        tail = t ** (N.order + 1) / (1 - t) + 1e-12
        modulus = abs(value)
        if not (1 - t - tail <= modulus <= 1 / (1 - t) + tail):
            logging.warning(f"   |zeta({z})| = {modulus} violates the modulus bounds.")
            ok = False
    return ok


def counts_from_poles(R, m):
    """
    Counts from zeros and poles: N_n = sum m_j eta_j^-n - sum n_i gamma_i^-n.

    Poles eta_j (roots of the denominator) and zeros gamma_i (roots of the
    numerator) are repeated by multiplicity and evaluated numerically.

    Args:
        R: RationalFunction with R(0) = 1
        m: Number of counts

    Returns:
        Tuple of floats N_1..N_m
    """
    if R.at_zero() != 1:
        raise ValueError(f"A zeta function must equal 1 at z = 0, got {R.at_zero()}")

    def _roots(poly):
        if poly.degree < 1:
            return []
        return [complex(root.evalf(30)) for root in poly.to_sympy().all_roots()]

    poles = _roots(R.denominator)
    zeros = _roots(R.numerator)
    counts = []
    for n in range(1, m + 1):
        value = sum(eta ** -n for eta in poles) - sum(gamma ** -n for gamma in zeros)
        counts.append(value.real)
    return tuple(counts)


def _pade(series, p, q):
    """Exact [p/q] Pade approximant of a series, or None when singular."""
    s = [sympy.Rational(c.numerator, c.denominator) for c in series.coefficients]

    def coef(n):
        return s[n] if 0 <= n < len(s) else sympy.Integer(0)

    den = [sympy.Integer(1)]
    if q:
        system = sympy.Matrix(q, q, lambda i, j: coef(p + 1 + i - (j + 1)))
        rhs = sympy.Matrix(q, 1, lambda i, _: -coef(p + 1 + i))
        try:
            den += list(system.LUsolve(rhs))
        except ValueError:
            return None
    num = [sum(den[j] * coef(n - j) for j in range(min(n, q) + 1)) for n in range(p + 1)]
    scale = sympy.ilcm(*[c.q for c in num + den])
    return (
        IntPolynomial(int(c * scale) for c in num),
        IntPolynomial(int(c * scale) for c in den),
    )


def fit_rational_zeta(N, max_degree=None):
    """
    Fit a rational zeta function to a count sequence.

    Pade approximants of increasing total degree p + q < m are solved
    exactly; the first one whose counts reproduce all of N is returned.

    Args:
        N: CountSequence
        max_degree: Largest total degree to try (default m - 1)

    Returns:
        RationalFunction

    Raises:
        ValueError if no approximant reproduces the counts
    """
    series = zeta_series_from_counts(N)
    if max_degree is None:
        max_degree = N.order - 1
    max_degree = min(max_degree, N.order - 1)
    for total in range(max_degree + 1):
        for q in range(total, -1, -1):
            approximant = _pade(series, total - q, q)
            if approximant is None or approximant[1].is_zero or approximant[1].constant == 0:
                continue
            candidate = RationalFunction(*approximant)
            if check_recurrence(N, candidate):
                logging.debug(f"   Rational fit of degree ({total - q}, {q}): {candidate}")
                return candidate
    logging.error(f"No rational zeta of total degree <= {max_degree} fits {N.counts}.")
    raise ValueError("Counts do not determine a rational zeta function at this order")


def radius_in_preimage_range(rho, k, tolerance=1e-9):
    """True if 1/k <= rho <= 1, the range allowed when points have at most k preimages."""
    return 1 / k - tolerance <= rho <= 1 + tolerance
