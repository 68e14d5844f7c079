"""Acceptance gate: one test per shipped verification criterion.

Each test runs the corresponding suite at its full default scale, so
``pytest -v tests/test_acceptance.py`` prints one pass/fail line per
criterion.
"""

from arcmatch.verify import (
    check_catalan_specialization,
    check_crossing_refinement,
    check_decompositions,
    check_generating_tree,
    check_narayana_refinement,
    check_schroeder_bijection,
    check_super_catalan_counts,
    check_tableau_bijection,
    check_three_catalan_counts,
    check_walk_bijection,
)


def test_criterion_01_three_catalan_counts():
    result = check_three_catalan_counts()
    assert result.passed, result.details


def test_criterion_02_crossing_refinement():
    result = check_crossing_refinement()
    assert result.passed, result.details


def test_criterion_03_catalan_specialization():
    result = check_catalan_specialization()
    assert result.passed, result.details


def test_criterion_04_super_catalan_counts():
    result = check_super_catalan_counts()
    assert result.passed, result.details


def test_criterion_05_narayana_refinement():
    result = check_narayana_refinement()
    assert result.passed, result.details


def test_criterion_06_schroeder_bijection():
    result = check_schroeder_bijection()
    assert result.passed, result.details


def test_criterion_07_tableau_bijection():
    result = check_tableau_bijection()
    assert result.passed, result.details


def test_criterion_08_walk_bijection():
    result = check_walk_bijection()
    assert result.passed, result.details


def test_criterion_09_generating_tree():
    result = check_generating_tree()
    assert result.passed, result.details


def test_criterion_10_decompositions():
    result = check_decompositions()
    assert result.passed, result.details
