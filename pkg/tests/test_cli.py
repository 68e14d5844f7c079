"""End-to-end command line checks, run in-process."""

import json

import pytest

from arcmatch.cli import run


def lines(capsys):
    out = capsys.readouterr()
    return out.out.splitlines(), out.err.splitlines()


class TestEnumerate:
    def test_plain_enumeration(self, capsys):
        assert run(["enumerate", "--n", "2"]) == 0
        out, err = lines(capsys)
        assert err == []
        assert [json.loads(s)["word"] for s in out] == [
            "1122", "1212", "1221"]

    def test_empty_matching_row(self, capsys):
        assert run(["enumerate", "--n", "0"]) == 0
        out, _ = lines(capsys)
        assert out == ['{"word": ""}']

    def test_two_pattern_filter(self, capsys):
        assert run(["enumerate", "--n", "3",
                    "--pattern", "12312", "--pattern", "121323"]) == 0
        out, _ = lines(capsys)
        assert len(out) == 11

    def test_text_format(self, capsys):
        assert run(["enumerate", "--n", "1", "--format", "text"]) == 0
        out, _ = lines(capsys)
        assert out == ["11"]

    def test_negative_n_is_usage_error(self, capsys):
        assert run(["enumerate", "--n", "-1"]) == 2
        _, err = lines(capsys)
        assert err and err[0].startswith("error:")


class TestCount:
    def test_single_pattern_count_line(self, capsys):
        assert run(["count", "--n", "3", "--pattern", "12312"]) == 0
        out, _ = lines(capsys)
        assert json.loads(out[0]) == {
            "count": "12", "n": 3, "pattern": "12312"}

    def test_unfiltered_count(self, capsys):
        assert run(["count", "--n", "4"]) == 0
        out, _ = lines(capsys)
        assert json.loads(out[0]) == {"count": "105", "n": 4}

    def test_crossing_number_filter(self, capsys):
        assert run(["count", "--n", "3", "--pattern", "12312",
                    "--m", "1"]) == 0
        out, _ = lines(capsys)
        assert json.loads(out[0]) == {
            "count": "5", "m": 1, "n": 3, "pattern": "12312"}

    def test_two_patterns_count(self, capsys):
        assert run(["count", "--n", "3", "--pattern", "12312",
                    "--pattern", "121323"]) == 0
        out, _ = lines(capsys)
        assert json.loads(out[0]) == {
            "count": "11", "n": 3, "patterns": ["12312", "121323"]}

    def test_text_format_prints_bare_number(self, capsys):
        assert run(["count", "--n", "3", "--format", "text"]) == 0
        out, _ = lines(capsys)
        assert out == ["15"]


class TestCheck:
    def test_single_pattern(self, capsys):
        assert run(["check", "--pattern", "12312", "--max-n", "3"]) == 0
        out, _ = lines(capsys)
        data = json.loads(out[0])
        assert data["pattern"] == "12312"
        assert data["level_sizes"] == [1, 3, 12, 55]
        assert data["rule_violations"] == []
        assert data["coverage_violations"] == []

    def test_default_runs_all_six(self, capsys):
        assert run(["check", "--max-n", "2"]) == 0
        out, _ = lines(capsys)
        assert len(out) == 6
        assert {json.loads(s)["pattern"] for s in out} == {
            "12312", "12132", "12123", "12321", "12231", "12213"}

    def test_unknown_pattern_is_input_error(self, capsys):
        assert run(["check", "--pattern", "12345"]) == 2
        _, err = lines(capsys)
        assert err and err[0].startswith("error:")


class TestBijection:
    def test_tau_frozen_example(self, capsys):
        assert run(["bijection", "--map", "tau", "--input", "ENSW"]) == 0
        out, _ = lines(capsys)
        assert json.loads(out[0]) == {"output": "EEENEN", "roundtrip": True}

    def test_phi_eleven_step_example(self, capsys):
        assert run(["bijection", "--map", "phi",
                    "--input", "UUDDUUUDDHD"]) == 0
        out, _ = lines(capsys)
        assert json.loads(out[0]) == {
            "output": "121343554662", "roundtrip": True}

    def test_rho_worked_example(self, capsys):
        assert run(["bijection", "--map", "rho",
                    "--input", "[];[1];[2];[2,1];[1,1];[1];[]"]) == 0
        out, _ = lines(capsys)
        assert json.loads(out[0]) == {"output": "123213", "roundtrip": True}

    def test_walk_worked_example(self, capsys):
        assert run(["bijection", "--map", "walk",
                    "--input", "[];[1];[2];[2,1];[1,1];[1];[]"]) == 0
        out, _ = lines(capsys)
        assert json.loads(out[0]) == {"output": "EENWSW", "roundtrip": True}

    def test_phi_low_peak_rejected(self, capsys):
        assert run(["bijection", "--map", "phi", "--input", "UD"]) == 2
        _, err = lines(capsys)
        assert err and "peak" in err[0]

    def test_text_format(self, capsys):
        assert run(["bijection", "--map", "tau", "--input", "EW",
                    "--format", "text"]) == 0
        out, _ = lines(capsys)
        assert out == ["EEN"]


class TestSeries:
    def test_filtered_row(self, capsys):
        assert run(["series", "--n", "3"]) == 0
        out, _ = lines(capsys)
        rows = [json.loads(s) for s in out]
        assert {"series": "three_catalan", "n": 3, "value": "12"} in rows
        assert {"series": "crossing", "n": 3, "m": 1, "value": "5"} in rows
        assert {"series": "double_avoider", "n": 3, "value": "11"} in rows
        assert {"series": "double_crossing", "n": 3, "m": 2,
                "value": "1"} in rows

    def test_values_are_decimal_strings(self, capsys):
        assert run(["series", "--max-n", "5"]) == 0
        out, _ = lines(capsys)
        for s in out:
            value = json.loads(s)["value"]
            assert isinstance(value, str) and value == str(int(value))

    def test_m_filter(self, capsys):
        assert run(["series", "--m", "0", "--max-n", "4"]) == 0
        out, _ = lines(capsys)
        rows = [json.loads(s) for s in out]
        assert rows and all(r["m"] == 0 for r in rows)
        # crossing-free avoiders on n arcs are counted by Catalan numbers
        crossing = {r["n"]: r["value"]
                    for r in rows if r["series"] == "crossing"}
        assert crossing == {0: "1", 1: "1", 2: "2", 3: "5", 4: "14"}


class TestVerifyAll:
    def test_small_scale_passes(self, capsys):
        assert run(["verify-all", "--max-n", "2"]) == 0
        out, _ = lines(capsys)
        rows = [json.loads(s) for s in out]
        assert len(rows) == 10
        assert all(r["passed"] for r in rows)
        assert [r["criterion"] for r in rows] == list(range(1, 11))

    def test_text_format(self, capsys):
        assert run(["verify-all", "--max-n", "2", "--format", "text"]) == 0
        out, _ = lines(capsys)
        assert len(out) == 10
        assert all(": pass" in s for s in out)


class TestRender:
    def test_json_payload(self, capsys):
        assert run(["render", "--input", "1212"]) == 0
        out, _ = lines(capsys)
        data = json.loads(out[0])
        assert data["word"] == "1212"
        assert data["diagram"].splitlines()[-1] == "1  2  3  4"

    def test_text_format(self, capsys):
        assert run(["render", "--input", "11", "--format", "text"]) == 0
        out, _ = lines(capsys)
        assert out == [".--.", "1  1", "1  2"]

    def test_bad_word_is_input_error(self, capsys):
        assert run(["render", "--input", "121"]) == 2
        _, err = lines(capsys)
        assert err and err[0].startswith("error:")


class TestHarness:
    def test_bad_verb_exits_two(self, capsys):
        with pytest.raises(SystemExit) as info:
            run(["frobnicate"])
        assert info.value.code == 2

    def test_deterministic_output(self, capsys):
        assert run(["series", "--max-n", "6"]) == 0
        first = capsys.readouterr().out
        assert run(["series", "--max-n", "6"]) == 0
        assert capsys.readouterr().out == first

    def test_console_script_entry(self):
        from arcmatch import cli
        assert callable(cli.run)
