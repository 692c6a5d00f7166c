"""
Exact integer matrix algebra.

Matrices and polynomials carry Python integers, so traces of large powers,
determinants and characteristic polynomials never overflow or round.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np
import sympy
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .config import NUMERIC_CONFIG

Z = sympy.Symbol('z')


def _as_int(value):
    """Convert value to int, refusing anything with a fractional part."""
    as_int = int(value)
    if as_int != value:
        raise ValueError(f"Matrix and polynomial entries must be integers, got {value!r}")
    return as_int


@dataclass(frozen=True)
class SignedIntMatrix:
    """Square matrix with arbitrary-precision integer entries (row-major)."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(_as_int(v) for v in row) for row in self.rows)
        if not rows:
            raise ValueError("A matrix needs dimension at least 1.")
        if any(len(row) != len(rows) for row in rows):
            raise ValueError(f"Matrix is not square: row lengths {[len(r) for r in rows]}")
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def identity(cls, dim):
        return cls(tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim)))

    @classmethod
    def zeros(cls, dim):
        return cls(tuple((0,) * dim for _ in range(dim)))

    @classmethod
    def ones(cls, dim):
        return cls(tuple((1,) * dim for _ in range(dim)))

    @classmethod
    def from_array(cls, array):
        return cls(tuple(tuple(v for v in row) for row in array))

    @property
    def dim(self):
        return len(self.rows)

    @property
    def is_binary(self):
        return all(v in (0, 1) for row in self.rows for v in row)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def to_array(self):
        """Return the entries as a numpy object array of Python ints."""
        array = np.empty((self.dim, self.dim), dtype=object)
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                array[i, j] = v
        return array

    def __matmul__(self, other):
        return SignedIntMatrix.from_array(self.to_array().dot(other.to_array()))

    def __add__(self, other):
        return SignedIntMatrix.from_array(self.to_array() + other.to_array())

    def __sub__(self, other):
        return SignedIntMatrix.from_array(self.to_array() - other.to_array())

    def __neg__(self):
        return SignedIntMatrix.from_array(-self.to_array())

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.dim))

    def power(self, n):
        """
        Raise the matrix to a non-negative integer power.

        Args:
            n: Exponent (n >= 0)

        Returns:
            SignedIntMatrix equal to self**n, by binary exponentiation
        """
        if n < 0:
            raise ValueError(f"Matrix power needs n >= 0, got {n}")
        result = SignedIntMatrix.identity(self.dim)
        base = self
        while n:
            if n & 1:
                result = result @ base
            n >>= 1
            if n:
                base = base @ base
        return result

    def apply(self, vector):
        """Multiply the matrix by a column vector given as a sequence."""
        return tuple(sum(a * x for a, x in zip(row, vector)) for row in self.rows)

    def __str__(self):
        lines = [str(self.dim)]
        lines.extend(' '.join(str(v) for v in row) for row in self.rows)
        return '\n'.join(lines)

    @classmethod
    def from_text(cls, text):
        """
        Parse the text format written by str(): a dimension line followed by
        one whitespace-separated row per line. Blank lines and lines starting
        with '#' are ignored.
        """
        lines = [
            line.strip() for line in text.splitlines()
            if line.strip() and not line.strip().startswith('#')
        ]
        if not lines:
            raise ValueError("Matrix text is empty")
        try:
            dim = int(lines[0])
            rows = [[int(v) for v in line.split()] for line in lines[1:]]
        except ValueError as e:
            logging.error(f"Matrix text has a non-integer entry: {e}")
            raise ValueError(f"Malformed matrix text: {e}") from e
        if len(rows) != dim:
            raise ValueError(f"Matrix text declares dimension {dim} but has {len(rows)} rows")
        return cls(rows)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in z with integer coefficients, index = degree."""

    coefficients: tuple = ()

    def __post_init__(self):
        coeffs = [_as_int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coefficients', tuple(coeffs))

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return not self.coefficients

    @property
    def constant(self):
        return self.coefficients[0] if self.coefficients else 0

    def coefficient(self, i):
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __call__(self, z):
        value = 0
        for c in reversed(self.coefficients):
            value = value * z + c
        return value

    def __add__(self, other):
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    def __neg__(self):
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(product)

    __rmul__ = __mul__

    def derivative(self):
        return IntPolynomial(i * c for i, c in enumerate(self.coefficients) if i > 0)

    def content(self):
        """Gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(math.gcd, self.coefficients, 0)

    def to_sympy(self):
        return sympy.Poly(list(reversed(self.coefficients)) or [0], Z, domain='ZZ')

    @classmethod
    def from_sympy(cls, poly):
        return cls(int(c) for c in reversed(poly.all_coeffs()))

    def __str__(self):
        if self.is_zero:
            return '0'
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                power = 'z' if i == 1 else f'z^{i}'
                body = power if magnitude == 1 else f'{magnitude}{power}'
            sign = '-' if c < 0 else '+'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text


def mat_power_trace(A, n):
    """
    Trace of the n-th power of A, computed exactly.

    Args:
        A: SignedIntMatrix
        n: Positive integer exponent

    Returns:
        int tr(A^n)
    """
    if n < 1:
        raise ValueError(f"mat_power_trace needs n >= 1, got {n}")
    return A.power(n).trace()


def _faddeev_leverrier(A):
    """
    Coefficients c_0..c_dim of det(xI - A) by the Faddeev-LeVerrier recurrence.

    Every division in the recurrence is exact over the integers.
    """
    n = A.dim
    a = A.to_array()
    eye = SignedIntMatrix.identity(n).to_array()
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = SignedIntMatrix.zeros(n).to_array()
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[n - k + 1] * eye
        trace = a.dot(m).trace()
        if trace % k:
            raise ArithmeticError(f"Inexact Faddeev-LeVerrier division at step {k}")
        coeffs[n - k] = -(trace // k)
    return coeffs


def char_poly_det(A):
    """
    Return det(I - zA) as an IntPolynomial with constant term 1.

    Args:
        A: SignedIntMatrix

    Returns:
        IntPolynomial
    """
    return IntPolynomial(reversed(_faddeev_leverrier(A)))


def determinant(A):
    """Exact determinant, read off the constant term of det(xI - A)."""
    return (-1) ** A.dim * _faddeev_leverrier(A)[0]


def is_irreducible(A):
    """
    Check whether a binary matrix is irreducible.

    The directed graph with an edge i -> j whenever A_ij = 1 must be strongly
    connected. A 1x1 matrix is irreducible only when its entry is 1.

    Args:
        A: SignedIntMatrix with entries in {0, 1}

    Returns:
        True if irreducible
    """
    if not A.is_binary:
        raise ValueError("is_irreducible expects a binary matrix")
    if A.dim == 1:
        return A[0, 0] == 1
    graph = csr_matrix(np.array(A.rows, dtype=np.int8))
    n_components, _ = connected_components(graph, directed=True, connection='strong')
    return n_components == 1


def perron_bounds(A, iterations=None):
    """
    Bracket the Perron eigenvalue of an irreducible binary matrix.

    Collatz-Wielandt ratios min_i (Bx)_i/x_i <= rho(B) <= max_i (Bx)_i/x_i are
    taken for B = A + I, which is primitive, starting from the all-ones
    vector; the bracket for A is the bracket for B shifted by one.

    Args:
        A: Irreducible SignedIntMatrix with entries in {0, 1}
        iterations: Number of multiplications (default from NUMERIC_CONFIG)

    Returns:
        Tuple (lower, upper) of Fractions with lower <= lambda <= upper
    """
    if iterations is None:
        iterations = NUMERIC_CONFIG['perron_iterations']
    if iterations < 1:
        raise ValueError(f"perron_bounds needs iterations >= 1, got {iterations}")
    if not is_irreducible(A):
        logging.error("perron_bounds called on a reducible or zero matrix.")
        raise ValueError("Perron bracketing requires an irreducible nonzero matrix")

    shifted = A + SignedIntMatrix.identity(A.dim)
    x = (1,) * A.dim
    lower = upper = None
    for _ in range(iterations):
        y = shifted.apply(x)
        ratios = [Fraction(yi, xi) for yi, xi in zip(y, x)]
        lo, hi = min(ratios), max(ratios)
        lower = lo if lower is None else max(lower, lo)
        upper = hi if upper is None else min(upper, hi)
        scale = reduce(math.gcd, y)
        x = tuple(yi // scale for yi in y)
    return lower - 1, upper - 1
