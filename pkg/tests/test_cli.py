"""Argument grammar, rendering round-trips, command output, and exit codes."""

import pytest

from weightmult import ParseError, RankMismatch
from weightmult.cli import Query, main, parse_query, render_query, run


def machine_dict(text):
    out = {}
    for line in text.splitlines():
        key, _, value = line.partition(": ")
        out[key] = value
    return out


class TestParseQuery:
    def test_expression_weight(self):
        q = parse_query(["mult", "A4", "[1,1,0,1]", "L-a1-a2-a3-a4"])
        assert q.command == "mult"
        assert (q.family, q.rank) == ("A", 4)
        assert q.lam == (1, 1, 0, 1)
        assert q.mu_spec == ("expr", (1, 1, 1, 1))
        assert (q.format, q.trace, q.algorithm) == ("text", "summary", "auto")

    def test_explicit_weight(self):
        q = parse_query(["mult", "A2", "[1,1]", "[0,0]"])
        assert q.mu_spec == ("coords", (0, 0))

    def test_bracket_arity_mismatch(self):
        with pytest.raises(RankMismatch):
            parse_query(["mult", "A2", "[1,1,0]", "[0,0]"])
        with pytest.raises(RankMismatch):
            parse_query(["mult", "A2", "[1,1]", "[0,0,0]"])

    def test_expression_with_coefficients_and_whitespace(self):
        q = parse_query(["mult", "B3", "[2,0,1]", "L - 2*a1 - a3"])
        assert q.mu_spec == ("expr", (2, 0, 1))

    def test_repeated_terms_accumulate(self):
        q = parse_query(["mult", "A2", "[2,2]", "L-a1-a1"])
        assert q.mu_spec == ("expr", (2, 0))

    def test_flags_in_both_spellings(self):
        q = parse_query(
            ["char", "G2", "[0,1]", "--format=machine", "--trace", "full",
             "--algorithm=classical", "--oracle-cap", "500"]
        )
        assert (q.format, q.trace, q.algorithm, q.oracle_cap) == ("machine", "full", "classical", 500)

    def test_unknown_command(self):
        with pytest.raises(ParseError) as info:
            parse_query(["frobnicate", "A2", "[1,1]"])
        assert "mult" in info.value.expected

    def test_bad_system_token(self):
        with pytest.raises(ParseError):
            parse_query(["mult", "H3", "[1,1,1]", "[0,0,0]"])
        with pytest.raises(ParseError):
            parse_query(["mult", "A", "[1]", "[0]"])

    def test_root_index_out_of_range_reports_offset(self):
        with pytest.raises(ParseError) as info:
            parse_query(["mult", "A2", "[1,1]", "L-2*a9"])
        assert info.value.offset == 5
        assert info.value.expected == frozenset({"a1", "a2"})

    def test_bad_bracket_character_reports_offset(self):
        with pytest.raises(ParseError) as info:
            parse_query(["mult", "A2", "[1;1]", "[0,0]"])
        assert info.value.offset == 2
        assert "," in info.value.expected

    def test_unterminated_bracket(self):
        with pytest.raises(ParseError):
            parse_query(["mult", "A2", "[1,1", "[0,0]"])

    def test_expression_must_start_with_the_highest_weight(self):
        with pytest.raises(ParseError) as info:
            parse_query(["mult", "A2", "[1,1]", "a1-a2"])
        assert info.value.expected == frozenset({"L"})

    def test_coefficient_requires_star(self):
        with pytest.raises(ParseError) as info:
            parse_query(["mult", "A2", "[1,1]", "L-2a1"])
        assert "*" in info.value.expected

    def test_missing_weight_argument(self):
        with pytest.raises(ParseError):
            parse_query(["mult", "A2", "[1,1]"])

    def test_char_takes_no_weight_argument(self):
        with pytest.raises(ParseError):
            parse_query(["char", "A2", "[1,1]", "[0,0]"])

    def test_unknown_flag(self):
        with pytest.raises(ParseError):
            parse_query(["dim", "A2", "[1,1]", "--colour=red"])

    def test_bad_flag_values(self):
        with pytest.raises(ParseError):
            parse_query(["dim", "A2", "[1,1]", "--format=xml"])
        with pytest.raises(ParseError):
            parse_query(["dim", "A2", "[1,1]", "--oracle-cap=-5"])
        with pytest.raises(ParseError):
            parse_query(["dim", "A2", "[1,1]", "--oracle-cap=many"])


class TestRenderRoundTrip:
    @pytest.mark.parametrize(
        "argv",
        [
            ["mult", "A4", "[1,1,0,1]", "L-a1-a2-a3-a4"],
            ["mult", "A2", "[1,1]", "[0,0]"],
            ["mult", "B3", "[2,0,1]", "L-2*a1-a3", "--algorithm=fast"],
            ["bench", "A6", "[1,0,0,0,0,1]", "L-a1-a2-a3-a4-a5-a6"],
            ["char", "G2", "[0,1]", "--format=machine"],
            ["dim", "A2", "[1,1]"],
            ["verify", "B2", "[1,1]", "--oracle-cap=2000", "--trace=off"],
        ],
    )
    def test_parse_render_parse(self, argv):
        q = parse_query(argv)
        assert parse_query(render_query(q)) == q

    def test_render_uses_expression_form(self):
        q = parse_query(["mult", "A3", "[1,1,1]", "L-a1-3*a2"])
        assert "L-a1-3*a2" in render_query(q)


class TestRun:
    def test_mult_reports_the_product_formula_value(self):
        q = parse_query(["mult", "A4", "[1,1,0,1]", "L-a1-a2-a3-a4"])
        code, text = run(q)
        assert code == 0
        assert text.splitlines()[0] == "multiplicity: 6"

    def test_mult_machine_format_has_the_stable_keys(self):
        q = parse_query(
            ["mult", "A2", "[1,1]", "[0,0]", "--format=machine", "--algorithm=classical"]
        )
        code, text = run(q)
        data = machine_dict(text)
        assert code == 0
        assert data["multiplicity"] == "2"
        assert data["counters.classical_terms"] == "3"
        assert data["counters.fast_terms"] == "0"
        assert data["counters.inner_products"] == "5"
        assert data["counters.cache_hits"] == "2"
        assert "trace" in data

    def test_mult_trace_full_shows_reduction_data(self):
        q = parse_query(["mult", "A4", "[1,1,0,1]", "L-a1-a2-a3-a4", "--trace=full"])
        _, text = run(q)
        assert "type_a_closed[1,2,4]" in text

    def test_dim_output_line(self):
        q = parse_query(["dim", "A2", "[1,1]"])
        code, text = run(q)
        assert code == 0
        assert text == "dimension: 8 (character-sum) / 8 (weyl)"

    def test_char_sorted_by_decreasing_height(self):
        q = parse_query(["char", "A2", "[1,1]", "--format=machine"])
        code, text = run(q)
        data = machine_dict(text)
        assert code == 0
        assert data["char.size"] == "2"
        assert data["char.0.mu"] == "[0,0]"
        assert data["char.0.multiplicity"] == "2"
        assert data["char.1.mu"] == "[1,1]"

    def test_verify_pass(self):
        q = parse_query(["verify", "A3", "[1,1,0]"])
        code, text = run(q)
        assert code == 0
        assert "pass" in text

    def test_verify_capped_group_exits_four(self):
        q = parse_query(["verify", "E7", "[1,0,0,0,0,0,0]"])
        code, text = run(q)
        assert code == 4
        assert "skipped" in text

    def test_bench_counters_contrast(self):
        q = parse_query(
            ["bench", "A6", "[1,0,0,0,0,1]", "L-a1-a2-a3-a4-a5-a6", "--format=machine"]
        )
        code, text = run(q)
        data = machine_dict(text)
        assert code == 0
        assert data["bench.classical.counters.classical_terms"] == "21"
        assert data["bench.fast.counters.fast_terms"] == "6"
        assert data["bench.fast.counters.inner_products"] == "0"
        assert data["multiplicity"] == "6"
        assert int(data["bench.classical.median_us"]) >= 0

    @pytest.mark.parametrize(
        "system,lam,mu",
        [("A3", "[1,1,1]", "L-a1-a2"), ("B2", "[2,1]", "[0,1]"), ("G2", "[1,0]", "[0,0]")],
    )
    def test_machine_multiplicity_identical_across_algorithms(self, system, lam, mu):
        values = set()
        for algorithm in ("classical", "fast"):
            q = parse_query(["mult", system, lam, mu, "--format=machine",
                             f"--algorithm={algorithm}"])
            _, text = run(q)
            values.add(machine_dict(text)["multiplicity"])
        assert len(values) == 1


class TestMainExitCodes:
    def test_success(self, capsys):
        assert main(["mult", "A4", "[1,1,0,1]", "L-a1-a2-a3-a4"]) == 0
        assert "multiplicity: 6" in capsys.readouterr().out

    def test_parse_error(self, capsys):
        assert main(["mult", "A2", "[1,1,0]", "[0,0]"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_domain_error(self, capsys):
        assert main(["mult", "A2", "[1,-1]", "[0,0]"]) == 3
        assert "error:" in capsys.readouterr().err

    def test_invalid_type_is_a_domain_error(self, capsys):
        assert main(["dim", "E5", "[1,1,1,1,1]"]) == 3
        capsys.readouterr()

    def test_verify_divergence_free_module_is_zero(self, capsys):
        assert main(["verify", "B2", "[0,2]"]) == 0
        capsys.readouterr()

    def test_capped_verify_is_four(self, capsys):
        assert main(["verify", "E7", "[0,0,0,0,0,0,1]", "--oracle-cap=100"]) == 4
        capsys.readouterr()
