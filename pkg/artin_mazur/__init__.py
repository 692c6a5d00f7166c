"""
artin-mazur - Periodic points, zeta functions and entropy of expanding maps

A Python package for exact periodic-point counting and rational
Artin-Mazur zeta functions of subshifts of finite type, expanding circle
maps and toral endomorphisms, with pseudo-orbit shadowing, Markov covers
and numerical topological entropy.
"""

__version__ = "0.1.0"
__author__ = "Your Name"
__license__ = "MIT"

from .exactmat import (
    SignedIntMatrix,
    IntPolynomial,
    mat_power_trace,
    char_poly_det,
    determinant,
    is_irreducible,
    perron_bounds,
)

from .zetafn import (
    RationalFunction,
    TruncatedSeries,
    CountSequence,
    RadiusResult,
    zeta_series_from_counts,
    zeta_from_sft,
    zeta_from_signed_family,
    counts_from_zeta,
    radius_and_entropy,
    primitive_orbit_counts,
    check_recurrence,
    zeta_modulus_bounds_check,
    counts_from_poles,
    fit_rational_zeta,
    radius_in_preimage_range,
)

from .sft import (
    SubshiftOfFiniteType,
    ShiftPoint,
    ShiftMap,
    is_admissible,
    count_periodic_trace,
    count_periodic_bruteforce,
    count_admissible_words,
    sft_entropy,
    shift_separated_count,
    as_expanding_map,
)

from .expmap import (
    InverseBranch,
    ExpandingMapInstance,
    CircleMap,
    ToralMap,
    make_circle_map,
    make_toral_map,
    toral_count,
    compose_branches,
    dynamical_ball,
    bowen_distance,
    preimage_separation_bound,
    periodic_points,
    snap_periodic,
)

from .regions import Arc, Cylinder

from .shadow import (
    PseudoOrbit,
    ShadowCertificate,
    max_alpha_for_beta,
    make_pseudo_orbit,
    shadow_finite,
    find_periodic,
)

from .cover import (
    MarkovCover,
    IntersectingFamilies,
    CoverReport,
    build_cover,
    cylinder_cover,
    verify_cover,
    intersecting_families,
    count_periodic_via_cover,
    zeta_via_cover,
    theta_matrix,
    theta_code,
    pi_code,
    point_codings,
)

from .enttool import (
    SeparatedSetResult,
    EntropyEstimate,
    EntropyGrowthReport,
    greedy_separated,
    entropy_estimate,
    cover_count,
    preimage_entropy_bound,
    verify_theorem2,
    preimage_separated_set,
    preimage_spanning_bound,
    least_squares_slope,
)

from .args import create_parser, parse_args, fraction_type

from .data_loader import (
    MapSpec,
    ExperimentConfig,
    load_map_config,
    validate_map_config,
    load_matrix_file,
    load_pseudo_orbit,
)

__all__ = [
    # Exact matrices
    "SignedIntMatrix",
    "IntPolynomial",
    "mat_power_trace",
    "char_poly_det",
    "determinant",
    "is_irreducible",
    "perron_bounds",
    # Zeta functions
    "RationalFunction",
    "TruncatedSeries",
    "CountSequence",
    "RadiusResult",
    "zeta_series_from_counts",
    "zeta_from_sft",
    "zeta_from_signed_family",
    "counts_from_zeta",
    "radius_and_entropy",
    "primitive_orbit_counts",
    "check_recurrence",
    "zeta_modulus_bounds_check",
    "counts_from_poles",
    "fit_rational_zeta",
    "radius_in_preimage_range",
    # Subshifts
    "SubshiftOfFiniteType",
    "ShiftPoint",
    "ShiftMap",
    "is_admissible",
    "count_periodic_trace",
    "count_periodic_bruteforce",
    "count_admissible_words",
    "sft_entropy",
    "shift_separated_count",
    "as_expanding_map",
    # Expanding maps
    "InverseBranch",
    "ExpandingMapInstance",
    "CircleMap",
    "ToralMap",
    "make_circle_map",
    "make_toral_map",
    "toral_count",
    "compose_branches",
    "dynamical_ball",
    "bowen_distance",
    "preimage_separation_bound",
    "periodic_points",
    "snap_periodic",
    # Regions
    "Arc",
    "Cylinder",
    # Shadowing
    "PseudoOrbit",
    "ShadowCertificate",
    "max_alpha_for_beta",
    "make_pseudo_orbit",
    "shadow_finite",
    "find_periodic",
    # Markov covers
    "MarkovCover",
    "IntersectingFamilies",
    "CoverReport",
    "build_cover",
    "cylinder_cover",
    "verify_cover",
    "intersecting_families",
    "count_periodic_via_cover",
    "zeta_via_cover",
    "theta_matrix",
    "theta_code",
    "pi_code",
    "point_codings",
    # Entropy
    "SeparatedSetResult",
    "EntropyEstimate",
    "EntropyGrowthReport",
    "greedy_separated",
    "entropy_estimate",
    "cover_count",
    "preimage_entropy_bound",
    "verify_theorem2",
    "preimage_separated_set",
    "preimage_spanning_bound",
    "least_squares_slope",
    # Args
    "create_parser",
    "parse_args",
    "fraction_type",
    # Data loader
    "MapSpec",
    "ExperimentConfig",
    "load_map_config",
    "validate_map_config",
    "load_matrix_file",
    "load_pseudo_orbit",
]
