"""Pattern-avoiding perfect matchings: exact counting and bijections.

The core object is a perfect matching on [2n] in canonical word form.
The package enumerates matchings avoiding given patterns, counts them by
closed formulas and exact power series, maps them to Schroeder paths,
oscillating tableaux, wedge walks, and lattice paths, and verifies every
claimed identity by exhaustive cross-checking at desk scale.
"""

from .bijections import (matching_to_schroeder, matching_to_tableau,
                         path_to_walk, schroeder_to_matching,
                         tableau_to_matching, tableau_to_walk, walk_to_path,
                         walk_to_tableau)
from .decompositions import (Decomposition12312, DecompositionDouble,
                             critical_window_ok, decompose_12312,
                             decompose_double, induced_matching,
                             quasi_crossers_ok, recompose_12312,
                             recompose_double)
from .formulas import (catalan, catalan_identity_holds, catalan_k,
                       crossing_refined_12312, crossing_refined_double,
                       crossing_refined_expansion, double_avoider_count,
                       narayana)
from .gentree import (RULE, TREE_PATTERNS, RuleReport, SuccessionRule,
                      empirical_children, expand_rule, matching_label,
                      validate_succession_rule)
from .matchings import (Matching, Pattern, PATTERN_12312, PATTERN_121323,
                        WordError, avoiders, edges_cross,
                        enumerate_matchings, format_word, insert_word,
                        parse_labels, word_contains)
from .paths import (LatticePath, LatticeWalk, SchroederPath,
                    enumerate_lattice_paths, enumerate_schroeder_paths,
                    enumerate_walks)
from .render import render_arc_diagram
from .series import (BivariateSeries, UnivariateSeries, block_series,
                     crossing_series, double_avoider_series,
                     double_avoider_series_sqrt)
from .tableaux import (OscillatingTableau, StandardTableau,
                       enumerate_oscillating_tableaux)
from .verify import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "BivariateSeries", "CheckResult", "Decomposition12312",
    "DecompositionDouble", "LatticePath", "LatticeWalk", "Matching",
    "OscillatingTableau", "Pattern", "PATTERN_12312", "PATTERN_121323",
    "RULE", "RuleReport", "SchroederPath", "StandardTableau",
    "SuccessionRule", "TREE_PATTERNS", "UnivariateSeries", "WordError",
    "avoiders", "block_series", "catalan", "catalan_identity_holds",
    "catalan_k", "critical_window_ok", "crossing_refined_12312",
    "crossing_refined_double", "crossing_refined_expansion",
    "crossing_series", "decompose_12312", "decompose_double",
    "double_avoider_count", "double_avoider_series",
    "double_avoider_series_sqrt", "edges_cross", "empirical_children",
    "enumerate_lattice_paths", "enumerate_matchings",
    "enumerate_oscillating_tableaux", "enumerate_schroeder_paths",
    "enumerate_walks", "expand_rule", "format_word", "induced_matching",
    "insert_word", "matching_label", "matching_to_schroeder",
    "matching_to_tableau", "narayana", "parse_labels", "path_to_walk",
    "quasi_crossers_ok", "recompose_12312", "recompose_double",
    "render_arc_diagram", "run_all", "schroeder_to_matching",
    "tableau_to_matching", "tableau_to_walk", "validate_succession_rule",
    "walk_to_path", "walk_to_tableau", "word_contains",
]
