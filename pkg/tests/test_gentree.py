"""The shared succession rule and its brute-force validation."""

import json

import pytest

from arcmatch import (
    RULE,
    TREE_PATTERNS,
    Matching,
    Pattern,
    RuleReport,
    catalan_k,
    empirical_children,
    expand_rule,
    matching_label,
    validate_succession_rule,
)


class TestSuccessionRule:
    def test_root_children(self):
        assert dict(expand_rule(0)) == {1: 1, 0: 2}

    def test_label_one_children(self):
        assert dict(expand_rule(1)) == {2: 1, 1: 2, 0: 3}

    def test_child_multiset_shape(self):
        for k in range(0, 8):
            children = expand_rule(k)
            # label k+1-i appears i+1 times, for i = 0 .. k+1
            assert dict(children) == {
                k + 1 - i: i + 1 for i in range(k + 2)}
            assert sum(children.values()) == RULE.child_count(k)
            assert RULE.child_count(k) == (k + 2) * (k + 3) // 2

    def test_negative_label_rejected(self):
        with pytest.raises(ValueError):
            expand_rule(-1)

    def test_level_counts_reproduce_the_counting_sequence(self):
        counts = RULE.level_counts(12)
        assert counts == [catalan_k(n, 3) for n in range(1, 13)]

    def test_level_counts_single_level(self):
        assert RULE.level_counts(1) == [1]

    def test_level_counts_bad_depth(self):
        with pytest.raises(ValueError):
            RULE.level_counts(0)


class TestMatchingLabels:
    def test_frozen_labels(self):
        p = Pattern.from_text("12312")
        for word, label in (("11", 0), ("1212", 0), ("1221", 1), ("1122", 0)):
            assert matching_label(Matching.from_word(word), p) == label

    def test_empirical_children_of_single_arc(self):
        m = Matching.from_word("11")
        for text in ("12312", "12321"):
            hist = empirical_children(m, Pattern.from_text(text))
            assert dict(hist) == {1: 1, 0: 2}

    def test_children_match_rule_for_small_avoiders(self):
        p = Pattern.from_text("12312")
        from arcmatch import enumerate_matchings
        for n in range(1, 4):
            for m in enumerate_matchings(n):
                if not m.avoids(p):
                    continue
                assert empirical_children(m, p) == expand_rule(
                    matching_label(m, p))


class TestValidateSuccessionRule:
    def test_all_six_patterns_validate(self):
        for pattern in TREE_PATTERNS:
            report = validate_succession_rule(pattern, 3)
            assert report.passed, (
                f"{pattern}: {report.rule_violations[:3]}"
                f" {report.coverage_violations[:3]}")
            assert report.level_sizes == [1, 3, 12, 55]

    def test_accepts_text_pattern(self):
        report = validate_succession_rule("12312", 2)
        assert report.passed
        assert report.level_sizes == [1, 3, 12]

    def test_report_json_fields(self):
        report = validate_succession_rule("12312", 2)
        data = json.loads(report.to_json())
        assert set(data) == {
            "pattern", "n", "level_sizes", "rule_violations",
            "coverage_violations"}
        assert data["pattern"] == "12312"
        assert data["n"] == 2
        assert data["level_sizes"] == [1, 3, 12]
        assert data["rule_violations"] == []
        assert data["coverage_violations"] == []

    def test_unknown_pattern_rejected(self):
        with pytest.raises(ValueError):
            validate_succession_rule("12345", 2)

    def test_off_list_pattern_rejected(self):
        # a legitimate pattern that is not one of the six tree patterns
        with pytest.raises(ValueError):
            validate_succession_rule("1212", 2)

    def test_bad_depth_rejected(self):
        with pytest.raises(ValueError):
            validate_succession_rule("12312", 0)

    def test_failed_report_shape(self):
        report = RuleReport(
            pattern="12312", max_n=1, level_sizes=[1],
            rule_violations=["boom"])
        assert not report.passed
        assert json.loads(report.to_json())["rule_violations"] == ["boom"]
