"""
Tests for zeta-function algebra.
"""

import math
from fractions import Fraction

import pytest

from artin_mazur.exactmat import SignedIntMatrix, mat_power_trace, perron_bounds
from artin_mazur.expmap import toral_count
from artin_mazur.zetafn import (
    CountSequence,
    RationalFunction,
    check_recurrence,
    counts_from_poles,
    counts_from_zeta,
    fit_rational_zeta,
    primitive_orbit_counts,
    radius_and_entropy,
    radius_in_preimage_range,
    zeta_from_sft,
    zeta_from_signed_family,
    zeta_modulus_bounds_check,
    zeta_series_from_counts,
)

GOLDEN = (1 + math.sqrt(5)) / 2
FIBONACCI_ZETA = RationalFunction.from_coefficients([1], [1, -1, -1])
CAT_ZETA = RationalFunction.from_coefficients([1, -2, 1], [1, -3, 1])


class TestRationalFunction:
    """Test canonical reduced forms."""

    def test_common_factor_cancelled(self):
        """Test (1 - z)/(1 - z)^2 = 1/(1 - z)."""
        reduced = RationalFunction.from_coefficients([1, -1], [1, -2, 1])
        assert reduced == RationalFunction.from_coefficients([1], [1, -1])

    def test_sign_and_content_normalised(self):
        """Test -2/(-2 + 4z) = 1/(1 - 2z)."""
        R = RationalFunction.from_coefficients([-2], [-2, 4])
        assert R == RationalFunction.from_coefficients([1], [1, -2])

    def test_zero_denominator_raises(self):
        """Test that a zero denominator is refused."""
        with pytest.raises(ValueError):
            RationalFunction.from_coefficients([1], [0])

    def test_str(self):
        """Test the expanded text form."""
        assert str(FIBONACCI_ZETA) == "1/(1 - z - z^2)"
        assert str(CAT_ZETA) == "(1 - 2z + z^2)/(1 - 3z + z^2)"

    def test_text_round_trip(self):
        """Test the coefficient text format."""
        assert CAT_ZETA.to_text() == "num: 1 -2 1 / den: 1 -3 1"
        assert RationalFunction.from_text(CAT_ZETA.to_text()) == CAT_ZETA

    def test_malformed_text_raises(self):
        """Test that unreadable text is refused."""
        with pytest.raises(ValueError):
            RationalFunction.from_text("num: 1 x / den: 1")


class TestZetaFromCounts:
    """Test series, matrices and signed families."""

    def test_series_of_fibonacci_counts(self):
        """Test exp(z + 3z^2/2 + 4z^3/3) = 1 + z + 2z^2 + 3z^3 + ..."""
        series = zeta_series_from_counts(CountSequence((1, 3, 4)))
        assert series.coefficients == (1, 1, 2, 3)
        assert all(isinstance(c, Fraction) for c in series.coefficients)

    def test_series_agrees_with_rational_form(self):
        """Test that the series of the counts equals the Taylor series of the zeta."""
        counts = counts_from_zeta(CAT_ZETA, 8)
        assert zeta_series_from_counts(counts).coefficients == CAT_ZETA.series(8).coefficients

    def test_zeta_from_sft_fibonacci(self, fibonacci_matrix):
        """Test 1/det(I - zA) for the golden-mean shift."""
        assert zeta_from_sft(fibonacci_matrix) == FIBONACCI_ZETA

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_zeta_from_sft_full_shift(self, k):
        """Test 1/(1 - kz) for full shifts."""
        expected = RationalFunction.from_coefficients([1], [1, -k])
        assert zeta_from_sft(SignedIntMatrix.ones(k)) == expected

    def test_zeta_from_sft_rejects_non_binary(self, cat_matrix):
        """Test that integer matrices other than 0/1 are refused."""
        with pytest.raises(ValueError):
            zeta_from_sft(cat_matrix)

    def test_signed_family_alternates(self):
        """Test that B^(2) goes to the numerator."""
        family = [SignedIntMatrix([[2]]), SignedIntMatrix([[1]])]
        assert zeta_from_signed_family(family) == RationalFunction.from_coefficients(
            [1, -1], [1, -2]
        )

    def test_signed_family_empty_raises(self):
        """Test that an empty family is refused."""
        with pytest.raises(ValueError):
            zeta_from_signed_family([])


class TestCountsFromZeta:
    """Test recovering counts from rational forms."""

    def test_fibonacci_counts(self):
        """Test the Lucas numbers."""
        assert counts_from_zeta(FIBONACCI_ZETA, 5).counts == (1, 3, 4, 7, 11)

    def test_cat_counts(self):
        """Test |det(M^n - I)| for the cat map."""
        assert counts_from_zeta(CAT_ZETA, 3).counts == (1, 5, 16)

    def test_circle_counts(self):
        """Test k^n - 1 from (1 - z)/(1 - 2z)."""
        zeta = RationalFunction.from_coefficients([1, -1], [1, -2])
        assert counts_from_zeta(zeta, 4).counts == (1, 3, 7, 15)

    def test_cat_counts_match_determinants(self, cat_matrix):
        """Test agreement with toral_count up to n = 12."""
        direct = tuple(toral_count(cat_matrix, n) for n in range(1, 13))
        assert counts_from_zeta(CAT_ZETA, 12).counts == direct

    def test_value_at_zero_must_be_one(self):
        """Test that R(0) != 1 is refused."""
        with pytest.raises(ValueError):
            counts_from_zeta(RationalFunction.from_coefficients([2], [1]), 3)

    def test_negative_count_raises(self):
        """Test that 1/(1 + z) is not a zeta function."""
        with pytest.raises(ValueError):
            counts_from_zeta(RationalFunction.from_coefficients([1], [1, 1]), 3)

    def test_round_trip_through_traces(self, random_matrices):
        """Test that 1/det(I - zA) expands back to tr(A^p) for random binary A."""
        for index, A in enumerate(random_matrices(seed=21, count=25)):
            m = 1 + index % 12
            traces = tuple(mat_power_trace(A, p) for p in range(1, m + 1))
            assert counts_from_zeta(zeta_from_sft(A), m).counts == traces

    @pytest.mark.parametrize("p", [1, 2, 3, 5])
    def test_single_periodic_orbit(self, p):
        """Test that one orbit of period p has zeta function 1/(1 - z^p)."""
        m = 4 * p
        counts = CountSequence(tuple(p if n % p == 0 else 0 for n in range(1, m + 1)))
        zeta = RationalFunction.from_coefficients([1], [1] + [0] * (p - 1) + [-1])
        assert counts_from_zeta(zeta, m) == counts
        series = zeta_series_from_counts(counts)
        assert series.coefficients == tuple(int(n % p == 0) for n in range(m + 1))
        assert primitive_orbit_counts(counts) == tuple(int(n == p) for n in range(1, m + 1))
        assert abs(radius_and_entropy(zeta).rho - 1) < 1e-9

    def test_counts_from_poles(self):
        """Test the zeros-and-poles formula against exact counts."""
        approx = counts_from_poles(FIBONACCI_ZETA, 6)
        for value, exact in zip(approx, (1, 3, 4, 7, 11, 18)):
            assert abs(value - exact) < 1e-9


class TestRadius:
    """Test radius of convergence and periodic entropy."""

    def test_fibonacci_radius(self):
        """Test rho = 1/golden mean and entropy log(golden mean)."""
        result = radius_and_entropy(FIBONACCI_ZETA)
        assert abs(result.rho - 1 / GOLDEN) < 1e-9
        assert abs(result.periodic_entropy - math.log(GOLDEN)) < 1e-9
        assert result.rho_lower <= 1 / GOLDEN <= result.rho_upper

    def test_full_shift_radius(self):
        """Test rho = 1/2 for the full 2-shift."""
        result = radius_and_entropy(RationalFunction.from_coefficients([1], [1, -2]))
        assert abs(result.rho - 0.5) < 1e-9
        assert abs(result.periodic_entropy - math.log(2)) < 1e-9

    def test_no_poles(self):
        """Test a polynomial zeta function."""
        result = radius_and_entropy(RationalFunction.from_coefficients([1, -1], [1]))
        assert result.rho == math.inf
        assert result.periodic_entropy == 0.0
        assert not result.has_poles

    def test_radius_in_preimage_range(self):
        """Test the 1/k <= rho <= 1 window."""
        assert radius_in_preimage_range(0.5, 2)
        assert radius_in_preimage_range(1 / GOLDEN, 2)
        assert not radius_in_preimage_range(0.4, 2)

    def test_radius_matches_perron_bracket(self, random_matrices):
        """Test rho = 1/lambda against Perron brackets of random irreducible matrices."""
        for A in random_matrices(seed=22, count=12, irreducible=True):
            lower, upper = perron_bounds(A, 200)
            result = radius_and_entropy(zeta_from_sft(A))
            assert 1 / float(upper) - 1e-9 <= result.rho <= 1 / float(lower) + 1e-9
            assert abs(result.rho - 2 / float(lower + upper)) < 1e-6


class TestPrimitiveOrbits:
    """Test Mobius inversion of counts."""

    def test_full_two_shift(self):
        """Test primitive orbit counts of the full 2-shift."""
        assert primitive_orbit_counts(CountSequence((2, 4, 8, 16))) == (2, 1, 2, 3)

    def test_unrealizable_counts_raise(self):
        """Test that N_2 - N_1 must be even."""
        with pytest.raises(ValueError):
            primitive_orbit_counts(CountSequence((1, 2)))

    def test_negative_counts_refused(self):
        """Test that counts must be nonnegative."""
        with pytest.raises(ValueError):
            CountSequence((1, -1))


class TestRecurrenceAndFit:
    """Test recurrence checks and rational fitting."""

    def test_check_recurrence(self):
        """Test agreement and disagreement with the golden-mean zeta."""
        assert check_recurrence(CountSequence((1, 3, 4, 7)), FIBONACCI_ZETA)
        assert not check_recurrence(CountSequence((1, 3, 4, 8)), FIBONACCI_ZETA)

    def test_check_recurrence_too_short(self):
        """Test that too few counts are refused."""
        with pytest.raises(ValueError):
            check_recurrence(CountSequence((1, 3)), FIBONACCI_ZETA)

    def test_fit_rational_zeta_cat(self, cat_matrix):
        """Test that the cat-map counts determine their zeta function."""
        counts = CountSequence(tuple(toral_count(cat_matrix, n) for n in range(1, 9)))
        assert fit_rational_zeta(counts) == CAT_ZETA

    def test_fit_rational_zeta_full_shift(self):
        """Test a denominator-only fit."""
        counts = CountSequence(tuple(3 ** n for n in range(1, 7)))
        assert fit_rational_zeta(counts) == RationalFunction.from_coefficients([1], [1, -3])


class TestModulusBounds:
    """Test the bounds 1 - r|z| <= |zeta(z)| <= 1/(1 - r|z|)."""

    def test_full_shift_samples(self):
        """Test real and complex samples inside the disc."""
        counts = CountSequence(tuple(2 ** n for n in range(1, 16)))
        assert zeta_modulus_bounds_check(counts, 2, [0.1, -0.3, 0.2j, complex(0.1, -0.25)])

    def test_sample_outside_disc_raises(self):
        """Test that |z| >= 1/r is refused."""
        counts = CountSequence(tuple(2 ** n for n in range(1, 6)))
        with pytest.raises(ValueError):
            zeta_modulus_bounds_check(counts, 2, [0.6])

    def test_counts_above_growth_bound_raise(self):
        """Test that N_n > r^n is refused."""
        with pytest.raises(ValueError):
            zeta_modulus_bounds_check(CountSequence((3,)), 2, [0.1])


if __name__ == '__main__':
    pytest.main([__file__])
