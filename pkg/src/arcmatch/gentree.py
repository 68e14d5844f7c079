"""Succession rule shared by six avoidance classes.

For each of the six patterns below, the avoiders grow as a generating
tree: every avoider on [2n] has a set of active sites, positions where a
new arc can open without creating the pattern, and inserting the new arc
at any pair of active sites gives an avoider on [2n + 2].  Labelling each
node by its number of active sites minus two, the tree obeys one shared
succession rule: a node labelled k has children labelled k + 1 - i with
multiplicity i + 1 for i = 0 .. k + 1, hence (k + 2)(k + 3) / 2 children
in all.  These classes are therefore equinumerous.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .matchings import Matching, Pattern, avoiders, insert_word, word_contains

TREE_PATTERNS = (
    Pattern((1, 2, 3, 1, 2)),
    Pattern((1, 2, 1, 3, 2)),
    Pattern((1, 2, 1, 2, 3)),
    Pattern((1, 2, 3, 2, 1)),
    Pattern((1, 2, 2, 3, 1)),
    Pattern((1, 2, 2, 1, 3)),
)


@dataclass(frozen=True)
class SuccessionRule:
    """Label-rewriting rule: root label, and child labels per label."""

    root: int = 0

    def children(self, label: int) -> Counter:
        if label < 0:
            raise ValueError("labels are non-negative")
        out: Counter = Counter()
        for i in range(label + 2):
            out[label + 1 - i] = i + 1
        return out

    def child_count(self, label: int) -> int:
        return (label + 2) * (label + 3) // 2

    def level_counts(self, depth: int) -> list[int]:
        """Number of nodes on levels 1 .. depth (root level is 1)."""
        if depth < 1:
            raise ValueError("depth must be at least 1")
        counts = [1]
        histogram = Counter({self.root: 1})
        for _ in range(depth - 1):
            nxt: Counter = Counter()
            for label, mult in histogram.items():
                for child, times in self.children(label).items():
                    nxt[child] += mult * times
            histogram = nxt
            counts.append(sum(histogram.values()))
        return counts


RULE = SuccessionRule()


def expand_rule(label: int) -> Counter:
    """Child-label multiset of a node with the given label."""
    return RULE.children(label)


def matching_label(m: Matching, pattern: Pattern) -> int:
    """Tree label of an avoider: active sites minus two."""
    return len(m.active_sites(pattern)) - 2


def empirical_children(m: Matching, pattern: Pattern) -> Counter:
    """Label histogram of the avoiding insertions from this matching."""
    out: Counter = Counter()
    for child, label in _children(m, pattern):
        out[label] += 1
    return out


def _children(m: Matching, pattern: Pattern) -> list[tuple[Matching, int]]:
    # children come from pairs of active sites; each insertion is still
    # re-verified rather than assumed avoiding, so a failure of the rule
    # shows up as a missing child instead of a corrupted tree
    sites = m.active_sites(pattern)
    word = m.word
    out = []
    for a, s in enumerate(sites):
        for t in sites[a:]:
            grown = insert_word(word, s, t)
            if not word_contains(grown, pattern):
                child = Matching.from_word(grown)
                out.append((child, matching_label(child, pattern)))
    return out


@dataclass
class RuleReport:
    """Outcome of validating the succession rule against one pattern."""

    pattern: str
    max_n: int
    level_sizes: list[int] = field(default_factory=list)
    rule_violations: list[str] = field(default_factory=list)
    coverage_violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.rule_violations and not self.coverage_violations

    def to_json(self) -> str:
        return json.dumps({
            "pattern": self.pattern,
            "n": self.max_n,
            "level_sizes": self.level_sizes,
            "rule_violations": self.rule_violations,
            "coverage_violations": self.coverage_violations,
        }, sort_keys=True)


def validate_succession_rule(pattern: Pattern | str, max_n: int) -> RuleReport:
    """Check the shared rule against one pattern by brute force.

    Level by level up to max_n: every avoider's insertion histogram must
    match the rule for its label, and the children of level n taken
    together must cover the avoiders on [2n + 2] exactly once.
    """
    if isinstance(pattern, str):
        pattern = Pattern.from_text(pattern)
    if pattern not in TREE_PATTERNS:
        raise ValueError(f"pattern {pattern} is not one of the six tree patterns")
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    report = RuleReport(pattern=str(pattern), max_n=max_n)
    level = list(avoiders(1, (pattern,)))
    report.level_sizes.append(len(level))
    for n in range(1, max_n + 1):
        produced: Counter = Counter()
        for m in level:
            label = matching_label(m, pattern)
            kids = _children(m, pattern)
            expected = RULE.children(label)
            got = Counter(lab for _, lab in kids)
            if got != expected:
                report.rule_violations.append(
                    f"{m.word_text()} (label {label}): children {dict(got)} "
                    f"!= rule {dict(expected)}")
            for child, _ in kids:
                produced[child] += 1
        target = list(avoiders(n + 1, (pattern,)))
        report.level_sizes.append(len(target))
        target_counter = Counter(target)
        missing = target_counter - produced
        extra = produced - target_counter
        for m, c in sorted(missing.items(), key=lambda kv: kv[0].word_text()):
            report.coverage_violations.append(
                f"{m.word_text()} produced {produced.get(m, 0)} times, "
                f"expected {c + produced.get(m, 0)}")
        for m, c in sorted(extra.items(), key=lambda kv: kv[0].word_text()):
            report.coverage_violations.append(
                f"{m.word_text()} produced {c} extra times")
        level = target
    return report
