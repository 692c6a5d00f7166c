"""
Pytest configuration and fixtures.
"""

import json
from fractions import Fraction

import numpy as np
import pytest

from artin_mazur.cover import build_cover
from artin_mazur.exactmat import SignedIntMatrix, is_irreducible
from artin_mazur.expmap import make_circle_map, make_toral_map
from artin_mazur.sft import SubshiftOfFiniteType, as_expanding_map


@pytest.fixture
def fibonacci_matrix():
    """Golden-mean transition matrix."""
    return SignedIntMatrix([[1, 1], [1, 0]])


@pytest.fixture
def fibonacci_shift(fibonacci_matrix):
    """Golden-mean subshift."""
    return SubshiftOfFiniteType(fibonacci_matrix)


@pytest.fixture
def fibonacci_map(fibonacci_shift):
    """Golden-mean shift as an expanding map."""
    return as_expanding_map(fibonacci_shift)


@pytest.fixture
def full2_map():
    """Full shift on two symbols."""
    return as_expanding_map(SubshiftOfFiniteType.full(2))


@pytest.fixture
def doubling_map():
    """Circle map t -> 2t mod 1."""
    return make_circle_map(2)


@pytest.fixture
def tripling_map():
    """Circle map t -> 3t mod 1."""
    return make_circle_map(3)


@pytest.fixture
def cat_matrix():
    """Hyperbolic toral automorphism matrix."""
    return SignedIntMatrix([[2, 1], [1, 1]])


@pytest.fixture
def torus2_map():
    """Expanding toral endomorphism v -> 2v mod 1."""
    return make_toral_map(SignedIntMatrix([[2, 0], [0, 2]]))


@pytest.fixture
def eight_arc_cover(doubling_map):
    """Markov cover of the doubling map by the arcs [i/8, (i+1)/8]."""
    return build_cover(doubling_map, Fraction(1, 8))


@pytest.fixture
def map_config_file(tmp_path):
    """Write a map config JSON file and return its path."""
    def _write(config, name='map.json'):
        path = tmp_path / name
        path.write_text(json.dumps(config))
        return str(path)
    return _write


@pytest.fixture
def pseudo_orbit_file(tmp_path):
    """Write a pseudo-orbit CSV file and return its path."""
    def _write(rows, header='x', name='orbit.csv'):
        path = tmp_path / name
        lines = [header] + [str(row) for row in rows]
        path.write_text('\n'.join(lines) + '\n')
        return str(path)
    return _write


@pytest.fixture
def random_matrices():
    """Draw seeded square matrices of dimension 1..max_dim with entries in [low, high]."""
    def _draw(seed, count, low=0, high=1, max_dim=6, irreducible=False):
        rng = np.random.default_rng(seed)
        matrices = []
        while len(matrices) < count:
            dim = int(rng.integers(1, max_dim + 1))
            A = SignedIntMatrix(rng.integers(low, high + 1, size=(dim, dim)).tolist())
            if irreducible and not is_irreducible(A):
                continue
            matrices.append(A)
        return matrices
    return _draw
