"""
Tests for entropy estimation from separated and spanning sets.
"""

import math
from fractions import Fraction

import pytest

from artin_mazur.enttool import (
    cover_count,
    entropy_estimate,
    greedy_separated,
    is_separated,
    least_squares_slope,
    preimage_entropy_bound,
    preimage_separated_set,
    preimage_spanning_bound,
    verify_theorem2,
)
from artin_mazur.expmap import make_toral_map, periodic_points


class TestGreedySeparated:
    """Test greedy separated and spanning sets."""

    def test_full_shift_words(self, full2_map):
        """Test that eps = 1 separates the 8 words of length 3."""
        result = greedy_separated(full2_map, 3, 1)
        assert result.lower_s_n == 8
        assert result.upper_s_n >= result.lower_s_n

    def test_doubling_map(self, doubling_map):
        """Test n = 5, eps = 1/16 on the circle."""
        result = greedy_separated(doubling_map, 5, Fraction(1, 16))
        assert result.lower_s_n >= 31
        assert result.lower_s_n <= result.upper_s_n
        assert result.spacing < Fraction(1, 64)
        assert is_separated(doubling_map, result.witness, 5, Fraction(1, 16))

    def test_separation_grows_with_n(self, doubling_map):
        """Test that s_n(eps) increases with n."""
        counts = [greedy_separated(doubling_map, n, Fraction(1, 8)).lower_s_n for n in (1, 2, 3)]
        assert counts[0] < counts[1] < counts[2]

    def test_coarse_grid_raises(self, doubling_map):
        """Test that spacing >= eps/4 is refused."""
        with pytest.raises(ValueError):
            greedy_separated(doubling_map, 2, Fraction(1, 16), resolution=Fraction(1, 16))

    def test_invalid_arguments_raise(self, doubling_map):
        """Test n >= 1 and eps > 0."""
        with pytest.raises(ValueError):
            greedy_separated(doubling_map, 0, Fraction(1, 16))
        with pytest.raises(ValueError):
            greedy_separated(doubling_map, 2, 0)

    def test_witness_check_failure_raises(self, doubling_map, monkeypatch):
        """Test that a witness set failing the separation check is an error."""
        monkeypatch.setattr('artin_mazur.enttool.is_separated', lambda *args: False)
        with pytest.raises(ValueError):
            greedy_separated(doubling_map, 2, Fraction(1, 8))

    def test_lower_count_decreases_with_eps(self, doubling_map):
        """Test that on a fixed grid a larger eps never gives more separated points."""
        ladder = [Fraction(n, d) for n, d in [(1, 64), (1, 48), (1, 32), (3, 64), (1, 16),
                                              (1, 12), (1, 8), (3, 16), (1, 4)]]
        resolution = Fraction(1, 2 ** 12)
        for n in (1, 2, 3):
            counts = [
                greedy_separated(doubling_map, n, eps, resolution=resolution).lower_s_n
                for eps in ladder
            ]
            assert all(a >= b for a, b in zip(counts, counts[1:]))

    def test_periodic_points_are_separated(self, doubling_map):
        """Test that the 2^n - 1 fixed points of f^n are (n, 1/4)-separated."""
        for n in range(1, 9):
            points = periodic_points(doubling_map, n)
            assert len(points) == 2 ** n - 1
            assert is_separated(doubling_map, [float(x) for x in points], n, Fraction(1, 4))


class TestEntropyEstimate:
    """Test slope estimates of h(f)."""

    def test_full_shift_is_exact(self, full2_map):
        """Test log 2 from exact word counts."""
        estimate = entropy_estimate(full2_map, range(1, 6), [1])
        assert estimate.method == 'exact'
        assert abs(estimate.value - math.log(2)) < 1e-12
        assert estimate.lower_counts == (2, 4, 8, 16, 32)

    def test_eps_ladder_must_decrease(self, full2_map):
        """Test that an increasing eps ladder is refused."""
        with pytest.raises(ValueError):
            entropy_estimate(full2_map, range(1, 4), [Fraction(1, 2), 1])

    def test_non_expanding_map_raises(self, cat_matrix):
        """Test that the cat map is refused."""
        with pytest.raises(ValueError):
            cat = make_toral_map(cat_matrix, strict=False)
            entropy_estimate(cat, range(1, 4), [Fraction(1, 8)])

    def test_unresolved_ladder_raises(self, doubling_map):
        """Test that fewer than two resolved n are refused."""
        with pytest.raises(ValueError):
            entropy_estimate(doubling_map, [12, 13], [Fraction(1, 64)])

    @pytest.mark.slow
    def test_doubling_map(self, doubling_map):
        """Test that the estimate brackets log 2 within 10%."""
        estimate = entropy_estimate(doubling_map, range(1, 9), [Fraction(1, 32), Fraction(1, 64)])
        assert estimate.eps == Fraction(1, 64)
        assert estimate.lower <= 1.1 * math.log(2)
        assert estimate.upper >= 0.9 * math.log(2)
        assert set(estimate.dropped) == {7, 8}
        table = estimate.count_table()
        assert list(table.columns) == ['n', 'lower_s_n', 'upper_s_n']
        assert (table['lower_s_n'] <= table['upper_s_n']).all()

    @pytest.mark.slow
    def test_golden_mean_shift(self, fibonacci_map):
        """Test an estimate near log of the golden mean."""
        golden = math.log((1 + math.sqrt(5)) / 2)
        estimate = entropy_estimate(fibonacci_map, range(1, 7), [1])
        assert estimate.method == 'estimate'
        assert estimate.lower <= 1.1 * golden
        assert estimate.upper >= 0.9 * golden


class TestCoverCount:
    """Test refinement counts of partitions."""

    def test_halves_under_doubling(self, doubling_map):
        """Test 2^n cells for the partition into halves."""
        halves = [(Fraction(0), Fraction(1, 2)), (Fraction(1, 2), Fraction(1))]
        assert [cover_count(doubling_map, halves, n) for n in range(1, 7)] == [
            2, 4, 8, 16, 32, 64
        ]

    def test_thirds_under_doubling(self, doubling_map):
        """Test a partition not adapted to the map."""
        thirds = [(Fraction(j, 3), Fraction(j + 1, 3)) for j in range(3)]
        assert cover_count(doubling_map, thirds, 1) == 3
        assert cover_count(doubling_map, thirds, 2) == 6

    def test_partition_sits_between_greedy_counts(self, doubling_map):
        """Test lower_s_n(eps) <= cells of the eps-arc partition <= upper_s_n(eps)."""
        eps = Fraction(1, 4)
        quarters = [(Fraction(j, 4), Fraction(j + 1, 4)) for j in range(4)]
        for n in range(1, 5):
            cells = cover_count(doubling_map, quarters, n)
            result = greedy_separated(doubling_map, n, eps)
            assert cells == 2 ** (n + 1)
            assert result.lower_s_n <= cells <= result.upper_s_n

    def test_non_circle_raises(self, full2_map):
        """Test that only circle maps are supported."""
        with pytest.raises(ValueError):
            cover_count(full2_map, [], 1)


class TestBounds:
    """Test preimage bounds and separated preimage sets."""

    def test_preimage_entropy_bound(self, tripling_map):
        """Test log 3 for the tripling map."""
        assert preimage_entropy_bound(tripling_map, [Fraction(1, 7)]) == math.log(3)

    def test_preimage_separated_set(self, doubling_map):
        """Test the eight preimages of 0 under f^3."""
        points = preimage_separated_set(doubling_map, 0, 3)
        assert sorted(points) == [Fraction(j, 8) for j in range(8)]
        assert is_separated(doubling_map, [float(p) for p in sorted(points)], 3, Fraction(1, 4))

    def test_preimage_spanning_bound(self, doubling_map):
        """Test degree^n times the grid size."""
        assert preimage_spanning_bound(doubling_map, 3, Fraction(1, 8)) == 64

    def test_least_squares_slope(self):
        """Test an exact line and a degenerate input."""
        assert abs(least_squares_slope([1, 2, 3], [2, 4, 6]) - 2) < 1e-12
        with pytest.raises(ValueError):
            least_squares_slope([1], [1])


class TestGrowthReport:
    """Test periodic growth against entropy estimates."""

    def test_full_shift_report(self, full2_map):
        """Test overlap, sandwich and submultiplicativity on the full 2-shift."""
        estimate = entropy_estimate(full2_map, range(1, 9), [1])
        report = verify_theorem2(full2_map, [2 ** n for n in range(1, 11)], estimate)
        assert report.overlap
        assert report.sandwich
        assert report.sandwich_constant == 1.0
        assert report.submultiplicative
        assert report.passed
        assert list(report.table.columns) == ['n', 'N_n', 'lower_s_n', 'upper_s_n', 'log-slope']
        assert len(report.table) == 10

    def test_mismatched_growth_fails(self, full2_map):
        """Test that 3^n counts miss a log 2 estimate without raising."""
        estimate = entropy_estimate(full2_map, range(1, 9), [1])
        report = verify_theorem2(full2_map, [3 ** n for n in range(1, 11)], estimate)
        assert not report.overlap
        assert not report.passed
        assert report.to_dict()['passed'] is False

    @pytest.mark.slow
    def test_doubling_map_report(self, doubling_map):
        """Test the circle map against its k^n - 1 counts."""
        estimate = entropy_estimate(doubling_map, range(1, 9), [Fraction(1, 64)])
        report = verify_theorem2(doubling_map, [2 ** n - 1 for n in range(1, 13)], estimate)
        assert report.passed
        assert report.submultiplicative is None


if __name__ == '__main__':
    pytest.main([__file__])
