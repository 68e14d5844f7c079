"""Self-contained verification suites.

Each check pits an exhaustive brute-force computation against the closed
formulas, series, or bijections it is supposed to match, at sizes where
full enumeration is feasible.  run_all executes every suite and reports
one result per check; the command line and the acceptance tests both
drive this module.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .bijections import (matching_to_schroeder, matching_to_tableau,
                         path_to_walk, schroeder_to_matching,
                         tableau_to_matching, walk_to_path)
from .decompositions import (critical_window_ok, decompose_12312,
                             decompose_double, quasi_crossers_ok,
                             recompose_12312, recompose_double)
from .formulas import (catalan, catalan_identity_holds, catalan_k,
                       crossing_refined_12312, crossing_refined_double,
                       crossing_refined_expansion, double_avoider_count,
                       narayana)
from .gentree import RULE, TREE_PATTERNS, validate_succession_rule
from .matchings import (Matching, Pattern, PATTERN_12312, PATTERN_121323,
                        enumerate_matchings)
from .paths import (LatticeWalk, SchroederPath, enumerate_lattice_paths,
                    enumerate_schroeder_paths, enumerate_walks)
from .series import (crossing_series, double_avoider_series,
                     double_avoider_series_sqrt)
from .tableaux import OscillatingTableau, enumerate_oscillating_tableaux


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    passed: bool
    details: str

    def to_json(self) -> str:
        return json.dumps({
            "criterion": self.criterion,
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
        }, sort_keys=True)


@lru_cache(maxsize=None)
def _avoider_list(n: int, pattern_texts: tuple[str, ...]) -> tuple[Matching, ...]:
    patterns = tuple(Pattern.from_text(t) for t in pattern_texts)
    return tuple(m for m in enumerate_matchings(n) if m.avoids(*patterns))


def _single(n: int) -> tuple[Matching, ...]:
    return _avoider_list(n, ("12312",))

def _double(n: int) -> tuple[Matching, ...]:
    return _avoider_list(n, ("12312", "121323"))


THREE_CATALAN = (1, 3, 12, 55, 273, 1428, 7752)
SUPER_CATALAN = (1, 1, 3, 11, 45)


def check_three_catalan_counts(max_n: int = 7) -> CheckResult:
    """Brute-force single-pattern avoider counts against binom(3n,n)/(2n+1)."""
    start = time.monotonic()
    got = []
    for n in range(1, max_n + 1):
        count = len(_single(n))
        got.append(count)
        if count != catalan_k(n, 3):
            return CheckResult(1, "three_catalan_counts", False,
                               f"n={n}: brute {count} != {catalan_k(n, 3)}")
        if n <= len(THREE_CATALAN) and count != THREE_CATALAN[n - 1]:
            return CheckResult(1, "three_catalan_counts", False,
                               f"n={n}: {count} != frozen {THREE_CATALAN[n - 1]}")
    elapsed = time.monotonic() - start
    if elapsed >= 30.0:
        return CheckResult(1, "three_catalan_counts", False,
                           f"counts correct but took {elapsed:.1f}s "
                           f"against a 30s budget")
    return CheckResult(
        1, "three_catalan_counts", True,
        f"counts {', '.join(map(str, got))} within the time budget")


def check_crossing_refinement(max_n: int = 6) -> CheckResult:
    """Crossing histograms of single-pattern avoiders against the
    alternating sum, the basis expansion, and the series solution."""
    series = crossing_series(max_n)
    for n in range(1, max_n + 1):
        hist = Counter(m.crossing_count() for m in _single(n))
        for m in range(n + 2):
            brute = hist.get(m, 0)
            routes = {
                "sum": crossing_refined_12312(n, m),
                "expansion": crossing_refined_expansion(n, m),
                "series": series.int_coeff(n, m),
            }
            for name, value in routes.items():
                if value != brute:
                    return CheckResult(
                        2, "crossing_refinement", False,
                        f"n={n} m={m}: {name} {value} != brute {brute}")
        if sum(hist.values()) != catalan_k(n, 3):
            return CheckResult(2, "crossing_refinement", False,
                               f"n={n}: histogram total mismatch")
    return CheckResult(2, "crossing_refinement", True,
                       f"four routes agree for n=1..{max_n}, all m")


def check_catalan_specialization(max_n: int = 20) -> CheckResult:
    """Zero-crossing refinement collapses to the Catalan numbers."""
    for n in range(1, max_n + 1):
        if crossing_refined_12312(n, 0) != catalan(n):
            return CheckResult(3, "catalan_specialization", False,
                               f"n={n}: m=0 value != Catalan")
        if not catalan_identity_holds(n):
            return CheckResult(3, "catalan_specialization", False,
                               f"n={n}: identity fails")
    return CheckResult(3, "catalan_specialization", True,
                       f"identity holds for n=1..{max_n}")


def check_super_catalan_counts(max_n: int = 12) -> CheckResult:
    """Double-avoider counts: brute force at small n, then binomial sum,
    fixed-point series, and square-root series against each other."""
    brute_limit = min(max_n, 4)
    for n in range(brute_limit + 1):
        count = len(_double(n))
        if count != SUPER_CATALAN[n]:
            return CheckResult(4, "super_catalan_counts", False,
                               f"n={n}: brute {count} != {SUPER_CATALAN[n]}")
        if count != double_avoider_count(n):
            return CheckResult(4, "super_catalan_counts", False,
                               f"n={n}: brute {count} != formula")
    fixed = double_avoider_series(max_n).int_coeffs()
    closed = double_avoider_series_sqrt(max_n).int_coeffs()
    for n in range(max_n + 1):
        formula = double_avoider_count(n)
        if not formula == fixed[n] == closed[n]:
            return CheckResult(
                4, "super_catalan_counts", False,
                f"n={n}: formula {formula}, series {fixed[n]}, root {closed[n]}")
    return CheckResult(4, "super_catalan_counts", True,
                       f"three routes agree for n=0..{max_n}")


def check_narayana_refinement(max_n: int = 6) -> CheckResult:
    """Crossing histograms of double-avoiders against the product formula
    and its Narayana-sum origin."""
    for n in range(1, max_n + 1):
        hist = Counter(m.crossing_count() for m in _double(n))
        for m in range(n + 2):
            brute = hist.get(m, 0)
            formula = crossing_refined_double(n, m)
            if formula != brute:
                return CheckResult(
                    5, "narayana_refinement", False,
                    f"n={n} m={m}: formula {formula} != brute {brute}")
            via_narayana = sum(
                narayana(n, k) * comb(k, m) for k in range(m, n))
            if via_narayana != formula:
                return CheckResult(
                    5, "narayana_refinement", False,
                    f"n={n} m={m}: Narayana sum {via_narayana} != {formula}")
        if sum(hist.values()) != double_avoider_count(n):
            return CheckResult(5, "narayana_refinement", False,
                               f"n={n}: histogram total mismatch")
    return CheckResult(5, "narayana_refinement", True,
                       f"histograms match for n=1..{max_n}, all m")


ELEVEN_STEP_PAIR = ("UUDDUUUDDHD",
               ((1, 3), (2, 12), (4, 6), (5, 9), (7, 8), (10, 11)))


def check_schroeder_bijection(max_semilength: int = 6) -> CheckResult:
    """Path folding is a bijection onto double-avoiders, peaks become
    crossings, and the worked example reproduces."""
    path = SchroederPath(ELEVEN_STEP_PAIR[0])
    if schroeder_to_matching(path).edges != ELEVEN_STEP_PAIR[1]:
        return CheckResult(6, "schroeder_bijection", False,
                           "worked example does not reproduce")
    if matching_to_schroeder(Matching(ELEVEN_STEP_PAIR[1])) != path:
        return CheckResult(6, "schroeder_bijection", False,
                           "worked example does not invert")
    for k in range(max_semilength + 1):
        paths = [p for p in enumerate_schroeder_paths(k)
                 if not p.has_low_peak()]
        images = {}
        for p in paths:
            m = schroeder_to_matching(p)
            if not m.avoids(PATTERN_12312, PATTERN_121323):
                return CheckResult(6, "schroeder_bijection", False,
                                   f"{p} maps to non-avoider {m.word_text()}")
            if len(p.peaks()) != m.crossing_count():
                return CheckResult(
                    6, "schroeder_bijection", False,
                    f"{p}: {len(p.peaks())} peaks but "
                    f"{m.crossing_count()} crossings")
            if matching_to_schroeder(m) != p:
                return CheckResult(6, "schroeder_bijection", False,
                                   f"{p} does not round-trip")
            images[m] = p
        if len(images) != len(paths) or len(paths) != double_avoider_count(k):
            return CheckResult(
                6, "schroeder_bijection", False,
                f"semilength {k}: {len(paths)} paths, "
                f"{len(images)} images, expected {double_avoider_count(k)}")
        if k <= 4 and set(images) != set(_double(k)):
            return CheckResult(6, "schroeder_bijection", False,
                               f"semilength {k}: image is not all avoiders")
    return CheckResult(
        6, "schroeder_bijection", True,
        f"bijection and peak statistic verified to semilength {max_semilength}")


WORKED_TABLEAU = ((), (1,), (2,), (2, 1), (1, 1), (1,), ())
WORKED_TABLEAU_EDGES = ((1, 5), (2, 4), (3, 6))


def check_tableau_bijection(max_n: int = 5) -> CheckResult:
    """Shape-walk correspondence round-trips on every matching, and
    restricted tableaux are exactly the single-pattern avoiders."""
    osc = OscillatingTableau(WORKED_TABLEAU)
    if tableau_to_matching(osc).edges != WORKED_TABLEAU_EDGES:
        return CheckResult(7, "tableau_bijection", False,
                           "worked example does not reproduce")
    if matching_to_tableau(Matching(WORKED_TABLEAU_EDGES)) != osc:
        return CheckResult(7, "tableau_bijection", False,
                           "worked example does not invert")
    for n in range(max_n + 1):
        for m in enumerate_matchings(n):
            if tableau_to_matching(matching_to_tableau(m)) != m:
                return CheckResult(7, "tableau_bijection", False,
                                   f"{m.word_text()} does not round-trip")
        restricted = {t for t in enumerate_oscillating_tableaux(2 * n)
                      if t.is_restricted()}
        image = {matching_to_tableau(m) for m in _single(n)}
        if image != restricted:
            return CheckResult(
                7, "tableau_bijection", False,
                f"n={n}: avoider image differs from restricted tableaux")
    return CheckResult(
        7, "tableau_bijection", True,
        f"round trips and restricted image verified for n<={max_n}")


WALK_TABLE = (("EEWW", "EEEENN"), ("ENSW", "EEENEN"), ("EWEW", "EENEEN"))


def check_walk_bijection(max_n: int = 6) -> CheckResult:
    """Walk rewriting is a bijection onto two-to-one lattice paths, with
    both families counted by the 3-Catalan numbers."""
    for walk_text, path_text in WALK_TABLE:
        if walk_to_path(LatticeWalk(walk_text)).steps != path_text:
            return CheckResult(8, "walk_bijection", False,
                               f"{walk_text} does not map to {path_text}")
    for n in range(max_n + 1):
        walks = list(enumerate_walks(n))
        paths = list(enumerate_lattice_paths(n))
        expected = catalan_k(n, 3)
        if len(walks) != expected or len(paths) != expected:
            return CheckResult(
                8, "walk_bijection", False,
                f"n={n}: {len(walks)} walks, {len(paths)} paths, "
                f"expected {expected}")
        seen = set()
        for w in walks:
            p = walk_to_path(w)
            if path_to_walk(p) != w:
                return CheckResult(8, "walk_bijection", False,
                                   f"walk {w} does not round-trip")
            seen.add(p)
        if seen != set(paths):
            return CheckResult(8, "walk_bijection", False,
                               f"n={n}: image is not all paths")
    return CheckResult(8, "walk_bijection", True,
                       f"bijection verified for n<={max_n}")


def check_generating_tree(max_n: int = 4, depth: int = 12) -> CheckResult:
    """Label dynamics match the 3-Catalan numbers, and all six patterns
    obey the shared succession rule with exact coverage."""
    counts = RULE.level_counts(depth)
    for n in range(1, depth + 1):
        if counts[n - 1] != catalan_k(n, 3):
            return CheckResult(9, "generating_tree", False,
                               f"level {n}: {counts[n - 1]} != C_(n,3)")
    for pattern in TREE_PATTERNS:
        report = validate_succession_rule(pattern, max_n)
        if not report.passed:
            problems = report.rule_violations + report.coverage_violations
            return CheckResult(
                9, "generating_tree", False,
                f"pattern {pattern}: {problems[0]}")
        if report.level_sizes != counts[:max_n + 1]:
            return CheckResult(
                9, "generating_tree", False,
                f"pattern {pattern}: level sizes {report.level_sizes}")
    return CheckResult(
        9, "generating_tree", True,
        f"rule valid for six patterns to n={max_n}, levels to {depth}")


def check_decompositions(max_n: int = 6) -> CheckResult:
    """Decompose/recompose are mutually inverse on both avoidance classes
    and the structural facts hold on every instance."""
    for n in range(1, max_n + 1):
        for m in _single(n):
            d = decompose_12312(m)
            if recompose_12312(d) != m:
                return CheckResult(10, "decompositions", False,
                                   f"{m.word_text()} does not round-trip")
            parts = list(d.thetas) + [d.alpha, d.beta]
            if any(not part.avoids(PATTERN_12312) for part in parts):
                return CheckResult(10, "decompositions", False,
                                   f"{m.word_text()}: component not avoiding")
            if not critical_window_ok(m):
                return CheckResult(10, "decompositions", False,
                                   f"{m.word_text()}: window fact fails")
            if not quasi_crossers_ok(m):
                return CheckResult(10, "decompositions", False,
                                   f"{m.word_text()}: crosser fact fails")
        for m in _double(n):
            d = decompose_double(m)
            if recompose_double(d) != m:
                return CheckResult(10, "decompositions", False,
                                   f"{m.word_text()} (double) no round-trip")
            parts = list(d.thetas) + [d.beta]
            if any(not part.avoids(PATTERN_12312, PATTERN_121323)
                   for part in parts):
                return CheckResult(10, "decompositions", False,
                                   f"{m.word_text()}: component not avoiding")
    return CheckResult(10, "decompositions", True,
                       f"round trips and structure verified for n<={max_n}")


_CHECKS = (
    (check_three_catalan_counts, 7),
    (check_crossing_refinement, 6),
    (check_catalan_specialization, 20),
    (check_super_catalan_counts, 12),
    (check_narayana_refinement, 6),
    (check_schroeder_bijection, 6),
    (check_tableau_bijection, 5),
    (check_walk_bijection, 6),
    (check_generating_tree, 4),
    (check_decompositions, 6),
)


def run_all(max_n: int | None = None) -> list[CheckResult]:
    """Run every suite, capping each at min(default, max_n) when a cap is
    given.  Returns results in criterion order."""
    results = []
    for func, default in _CHECKS:
        bound = default if max_n is None else max(1, min(default, max_n))
        results.append(func(bound))
    return results
