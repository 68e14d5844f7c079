"""Closed-form counting formulas and their cross-identities."""

from math import comb

import pytest

from arcmatch import (
    PATTERN_121323,
    PATTERN_12312,
    avoiders,
    catalan,
    catalan_identity_holds,
    catalan_k,
    crossing_refined_12312,
    crossing_refined_double,
    crossing_refined_expansion,
    double_avoider_count,
    narayana,
)

THREE_CATALAN = (1, 1, 3, 12, 55, 273, 1428, 7752)
SUPER_CATALAN = (1, 1, 3, 11, 45, 197, 903)
CATALAN = (1, 1, 2, 5, 14, 42, 132)


class TestCatalanFamilies:
    def test_three_catalan_values(self):
        for n, expected in enumerate(THREE_CATALAN):
            assert catalan_k(n, 3) == expected

    def test_ordinary_catalan_values(self):
        for n, expected in enumerate(CATALAN):
            assert catalan(n) == expected

    def test_two_catalan_is_ordinary(self):
        for n in range(0, 15):
            assert catalan_k(n, 2) == catalan(n)

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            catalan_k(-1, 3)
        with pytest.raises(ValueError):
            catalan(-3)


class TestCrossingRefined:
    def test_histogram_n3(self):
        assert [crossing_refined_12312(3, m) for m in range(4)] == \
            [5, 5, 2, 0]

    def test_histogram_n2(self):
        assert [crossing_refined_12312(2, m) for m in range(3)] == [2, 1, 0]

    def test_empty_matching_row(self):
        assert crossing_refined_12312(0, 0) == 1
        assert crossing_refined_12312(0, 1) == 0

    def test_out_of_range_m_is_zero(self):
        assert crossing_refined_12312(4, 4) == 0
        assert crossing_refined_12312(4, -1) == 0

    def test_matches_brute_force(self):
        for n in range(1, 5):
            histogram = {}
            for m in avoiders(n, (PATTERN_12312,)):
                c = m.crossing_count()
                histogram[c] = histogram.get(c, 0) + 1
            for c, count in histogram.items():
                assert crossing_refined_12312(n, c) == count

    def test_row_sums_to_three_catalan(self):
        for n in range(0, 10):
            assert sum(
                crossing_refined_12312(n, m) for m in range(n + 1)) == \
                catalan_k(n, 3)

    def test_expansion_route_agrees(self):
        for n in range(0, 9):
            for m in range(0, n + 2):
                assert crossing_refined_expansion(n, m) == \
                    crossing_refined_12312(n, m)


class TestCatalanSpecialization:
    def test_crossing_free_avoiders_are_catalan(self):
        for n in range(0, 12):
            assert crossing_refined_12312(n, 0) == catalan(n)

    def test_identity_predicate(self):
        for n in range(1, 21):
            assert catalan_identity_holds(n)


class TestDoubleAvoiderCount:
    def test_frozen_values(self):
        for n, expected in enumerate(SUPER_CATALAN):
            assert double_avoider_count(n) == expected

    def test_matches_brute_force(self):
        for n in range(0, 5):
            count = sum(
                1 for _ in avoiders(n, (PATTERN_12312, PATTERN_121323)))
            assert double_avoider_count(n) == count

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            double_avoider_count(-1)


class TestNarayana:
    def test_small_triangle(self):
        assert narayana(3, 1) == 3
        assert narayana(4, 2) == 6
        assert narayana(5, 2) == 20

    def test_first_column_is_one(self):
        for n in range(1, 10):
            assert narayana(n, 0) == 1

    def test_out_of_range_k_is_zero(self):
        assert narayana(3, 3) == 0
        assert narayana(3, -1) == 0

    def test_row_sums_to_catalan(self):
        for n in range(1, 12):
            assert sum(narayana(n, k) for k in range(n)) == catalan(n)

    def test_nonpositive_n_rejected(self):
        with pytest.raises(ValueError):
            narayana(0, 0)


class TestCrossingRefinedDouble:
    def test_histogram_n3(self):
        assert [crossing_refined_double(3, m) for m in range(4)] == \
            [5, 5, 1, 0]

    def test_single_value(self):
        assert crossing_refined_double(2, 1) == 1

    def test_matches_brute_force(self):
        for n in range(1, 5):
            histogram = {}
            for m in avoiders(n, (PATTERN_12312, PATTERN_121323)):
                c = m.crossing_count()
                histogram[c] = histogram.get(c, 0) + 1
            for c in range(n + 1):
                assert crossing_refined_double(n, c) == histogram.get(c, 0)

    def test_row_sums_to_double_avoider_count(self):
        for n in range(1, 13):
            assert sum(
                crossing_refined_double(n, m) for m in range(n + 1)) == \
                double_avoider_count(n)

    def test_weighted_crossing_free_sum(self):
        # summing over crossing-free block patterns recovers the refinement
        for n in range(1, 9):
            for m in range(n):
                total = sum(
                    narayana(n, k) * comb(k, m) for k in range(m, n))
                assert crossing_refined_double(n, m) == total
