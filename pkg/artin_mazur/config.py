"""
Configuration constants for the artin-mazur toolkit.
"""

from fractions import Fraction

# Numerical configuration constants
NUMERIC_CONFIG = {
    'margin': Fraction(1, 10 ** 9),  # Keeps strict inequalities strict (circle r and c)
    'root_eps': 10 ** -12,  # Root bracketing width in radius_and_entropy
    'alpha_safety': Fraction(99, 100),  # Factor applied to the shadowing alpha bound
    'expansivity_safety': Fraction(99, 100),  # Factor applied to min{r, c/(1+lambda)}
    'bruteforce_limit': 10 ** 7,  # Max k^n words for brute-force counting
    'permutation_limit': 12,  # Max family size r in intersecting_families
    'perron_iterations': 60,  # Default Collatz-Wielandt iterations
    'shadow_resolution': 10 ** -12,  # Target lambda^(N p) in find_periodic
    'grid_exponent': 12,  # Default circle grid resolution 2^-12
    'max_grid_exponent': 14,  # Entropy grids hold at most 2^14 points
    'slope_tail': 0.5,  # Fraction of log N_n points used for slopes
    'overlap_tolerance': 0.1,  # Relative tolerance of the entropy overlap check
    'tree_guard': 10 ** 6,  # Max pieces tracked by cover_count
}

# Built-in map presets accepted by --map in place of a file path
BUILTIN_MAPS = {
    'fibonacci': {'kind': 'sft', 'matrix': [[1, 1], [1, 0]]},
    'full2': {'kind': 'sft', 'matrix': [[1, 1], [1, 1]]},
    'full3': {'kind': 'sft', 'matrix': [[1, 1, 1], [1, 1, 1], [1, 1, 1]]},
    'circle2': {'kind': 'circle', 'k': 2},
    'circle3': {'kind': 'circle', 'k': 3},
    'cat': {'kind': 'toral', 'matrix': [[2, 1], [1, 1]]},
    'torus2': {'kind': 'toral', 'matrix': [[2, 0], [0, 2]]},
}
