"""Schröder paths, wedge walks, and two-to-one lattice paths."""

import pytest

from arcmatch import (
    LatticePath,
    LatticeWalk,
    SchroederPath,
    catalan_k,
    double_avoider_count,
    enumerate_lattice_paths,
    enumerate_schroeder_paths,
    enumerate_walks,
)


class TestSchroederPath:
    def test_semilength(self):
        assert SchroederPath("").semilength == 0
        assert SchroederPath("H").semilength == 1
        assert SchroederPath("UUDDUUUDDHD").semilength == 6

    def test_dip_below_axis_rejected(self):
        with pytest.raises(ValueError, match="below the axis"):
            SchroederPath("UDD")

    def test_unbalanced_rejected(self):
        with pytest.raises(ValueError):
            SchroederPath("UU")

    def test_bad_step_rejected(self):
        with pytest.raises(ValueError, match="step 2"):
            SchroederPath("UX")

    def test_peaks_with_summits(self):
        assert SchroederPath("UUDDUUUDDHD").peaks() == [(2, 2), (7, 3)]
        assert SchroederPath("UHD").peaks() == []
        assert SchroederPath("UD").peaks() == [(1, 1)]

    def test_low_peak_detection(self):
        assert SchroederPath("UD").has_low_peak()
        assert SchroederPath("UUDDUD").has_low_peak()
        assert not SchroederPath("UUDD").has_low_peak()
        assert not SchroederPath("UHD").has_low_peak()
        assert not SchroederPath("").has_low_peak()

    def test_first_return_flat_start(self):
        kind, rest = SchroederPath("HH").first_return()
        assert kind == "H" and rest.steps == "H"

    def test_first_return_arch(self):
        kind, inner, rest = SchroederPath("UHDH").first_return()
        assert kind == "U" and inner.steps == "H" and rest.steps == "H"

    def test_first_return_empty_rejected(self):
        with pytest.raises(ValueError):
            SchroederPath("").first_return()

    def test_base_segments_split_at_ground_peaks(self):
        segments = SchroederPath("UDHUD").base_segments()
        assert [s.steps for s in segments] == ["", "H", ""]

    def test_base_segments_without_ground_peaks(self):
        assert [s.steps for s in SchroederPath("H").base_segments()] == ["H"]
        assert [s.steps for s in SchroederPath("").base_segments()] == [""]

    def test_base_segments_keep_elevated_peaks(self):
        # the UD at height 2 belongs to a segment, only ground UDs split
        segments = SchroederPath("UUDDUD").base_segments()
        assert [s.steps for s in segments] == ["UUDD", ""]


class TestEnumerateSchroederPaths:
    def test_counts_are_large_schroeder(self):
        expected = [1, 2, 6, 22, 90]
        for n, count in enumerate(expected):
            assert sum(1 for _ in enumerate_schroeder_paths(n)) == count

    def test_no_low_peak_counts_are_super_catalan(self):
        for n in range(0, 6):
            count = sum(1 for p in enumerate_schroeder_paths(n)
                        if not p.has_low_peak())
            assert count == double_avoider_count(n)

    def test_deterministic_order(self):
        first = [p.steps for p in enumerate_schroeder_paths(3)]
        assert first == [p.steps for p in enumerate_schroeder_paths(3)]

    def test_semilength_two_inventory(self):
        steps = {p.steps for p in enumerate_schroeder_paths(2)}
        assert steps == {"HH", "HUD", "UDH", "UDUD", "UHD", "UUDD"}

    def test_negative_rejected_eagerly(self):
        with pytest.raises(ValueError):
            enumerate_schroeder_paths(-1)


class TestLatticeWalk:
    def test_simple_loop(self):
        assert LatticeWalk("EW").steps == "EW"

    def test_empty_walk(self):
        assert LatticeWalk("").steps == ""

    def test_leaving_wedge_rejected(self):
        with pytest.raises(ValueError, match="wedge"):
            LatticeWalk("NE")
        with pytest.raises(ValueError, match="wedge"):
            LatticeWalk("W")

    def test_must_return_to_origin(self):
        with pytest.raises(ValueError):
            LatticeWalk("E")

    def test_north_must_resolve_south(self):
        # after N, only W* then exactly one S may follow
        with pytest.raises(ValueError, match="N step not resolved"):
            LatticeWalk("EENESWWW")
        assert LatticeWalk("EENWSW").steps == "EENWSW"

    def test_height_capped_at_one(self):
        with pytest.raises(ValueError):
            LatticeWalk("EENNSSWW")

    def test_points(self):
        assert LatticeWalk("ENSW").points() == [
            (0, 0), (1, 0), (1, 1), (1, 0), (0, 0)]


class TestEnumerateWalks:
    def test_counts_are_three_catalan(self):
        for n in range(0, 7):
            assert sum(1 for _ in enumerate_walks(n)) == catalan_k(n, 3)

    def test_length_two_inventory(self):
        assert [w.steps for w in enumerate_walks(2)] == [
            "EEWW", "ENSW", "EWEW"]

    def test_negative_rejected_eagerly(self):
        with pytest.raises(ValueError):
            enumerate_walks(-1)


class TestLatticePath:
    def test_two_to_one_ratio_enforced(self):
        assert LatticePath("EEN").steps == "EEN"
        with pytest.raises(ValueError):
            LatticePath("EEE")

    def test_prefix_condition(self):
        with pytest.raises(ValueError, match="prefix"):
            LatticePath("NEE")
        with pytest.raises(ValueError):
            LatticePath("EENNEE")

    def test_counts_are_three_catalan(self):
        for n in range(0, 7):
            count = sum(1 for _ in enumerate_lattice_paths(n))
            assert count == catalan_k(n, 3)

    def test_semilength_two_inventory(self):
        steps = {p.steps for p in enumerate_lattice_paths(2)}
        assert steps == {"EEEENN", "EEENEN", "EENEEN"}

    def test_negative_rejected_eagerly(self):
        with pytest.raises(ValueError):
            enumerate_lattice_paths(-1)
