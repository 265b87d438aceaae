"""
Tests for the command-line interface.
"""

import json

import pytest

from chuk_closure_lab.cli import create_parser, run


def run_json(capsys, *argv):
    code = run([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


class TestParser:
    """Test argument parsing"""

    def test_every_verb_has_a_subcommand(self):
        """Test the parser knows each registered verb"""
        parser = create_parser()
        args = parser.parse_args(["expand", "--term", "a^w"])
        assert args.command == "expand"
        assert args.format == "text"

    def test_no_command(self, capsys):
        """Test help on stderr and exit code 2"""
        assert run([]) == 2
        assert "closure-lab" in capsys.readouterr().err

    def test_unsupported_format(self, capsys):
        """Test DOT output for a verb without it"""
        assert run(["expand", "--term", "a^w", "--format", "dot"]) == 2
        assert "invalid choice" in capsys.readouterr().err

    def test_missing_argument(self):
        """Test a required option left out"""
        assert run(["expand"]) == 2


class TestErrors:
    """Test input errors"""

    def test_term_syntax(self, capsys):
        """Test a malformed term"""
        assert run(["expand", "--term", "a^"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.startswith("expand: error:")

    def test_regex_syntax(self, capsys):
        """Test a malformed expression"""
        assert run(["syntactic", "--regex", "(a"]) == 2
        assert "missing ')'" in capsys.readouterr().err

    def test_bad_images(self, capsys, c2_table_file):
        """Test images without '='"""
        code = run(["eval-term", "--term", "a", "--table", str(c2_table_file), "--images", "a1"])
        assert code == 2
        assert "letter=element" in capsys.readouterr().err

    def test_missing_table(self, capsys, tmp_path):
        """Test a table file that does not exist"""
        missing = str(tmp_path / "none.tbl")
        assert run(["eval-term", "--term", "a", "--table", missing, "--images", "a=0"]) == 2
        assert capsys.readouterr().err.startswith("eval-term: error:")

    def test_small_expansion_index(self, capsys):
        """Test n below 4"""
        assert run(["expand", "--term", "a^w", "--n", "3"]) == 2


class TestTermVerbs:
    """Test expand, histories, eval-term and wordproblem-g"""

    def test_expand_text(self, capsys):
        """Test the word of a^w at n = 4"""
        assert run(["expand", "--term", "a^w", "--n", "4"]) == 0
        assert capsys.readouterr().out == "a" * 24 + "\n"

    def test_expand_json(self, capsys):
        """Test the versioned JSON payload"""
        code, data = run_json(capsys, "expand", "--term", "a^w b", "--n", "4")
        assert code == 0
        assert data["schema"] == 1
        assert data["length"] == 25
        assert data["word"].endswith("ab")

    def test_expand_uses_config_default(self, capsys):
        """Test n falls back to the configured default"""
        code, data = run_json(capsys, "expand", "--term", "a^w")
        assert code == 0
        assert data["n"] == 4

    def test_history_at_position(self, capsys):
        """Test one split of a^w b a^w"""
        assert run(["histories", "--term", "a^w b a^w", "--n", "4", "--position", "24"]) == 0
        assert capsys.readouterr().out == '[[1,1],["","b"]]\n'

    def test_all_histories(self, capsys):
        """Test the listing is capped by the limit"""
        code, data = run_json(capsys, "histories", "--term", "a^w", "--n", "4", "--limit", "5")
        assert code == 0
        assert [row["position"] for row in data["histories"]] == [0, 1, 2, 3, 4]

    def test_eval_term(self, capsys, c2_table_file):
        """Test values in the cyclic group of order 2"""
        table = str(c2_table_file)
        assert run(["eval-term", "--term", "a^w", "--table", table, "--images", "a=1"]) == 0
        assert capsys.readouterr().out == "0\n"
        assert run(["eval-term", "--term", "a^(w+1)", "--table", table, "--images", "a=1"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_wordproblem_equal(self, capsys):
        """Test omega powers vanish over G"""
        assert run(["wordproblem-g", "--left", "a^w b", "--right", "b"]) == 0
        assert capsys.readouterr().out == "equal over G\n"

    def test_wordproblem_unequal(self, capsys):
        """Test ab and ba differ over G"""
        code, data = run_json(capsys, "wordproblem-g", "--left", "ab", "--right", "ba")
        assert code == 1
        assert data["equal"] is False

    def test_wordproblem_capital_style(self, capsys):
        """Test inverses written as capitals"""
        code, data = run_json(
            capsys,
            "wordproblem-g",
            "--left",
            "a^(w-1)",
            "--right",
            "b",
            "--inverse-style",
            "capital",
        )
        assert code == 1
        assert data["left_image"] == "A"


class TestLanguageVerbs:
    """Test closure-g, separate, graph, syntactic and enumerate"""

    def test_closure_membership(self, capsys):
        """Test a is outside cl((aa)+) and a'a' inside"""
        assert run(["closure-g", "--regex", "(aa)^+", "--member", "a"]) == 1
        assert "not a member" in capsys.readouterr().out
        assert run(["closure-g", "--regex", "(aa)^+", "--member", "a'a'"]) == 0

    def test_closure_dot(self, capsys):
        """Test the DOT rendering of a closure"""
        assert run(["closure-g", "--regex", "(aa)^+", "--format", "dot"]) == 0
        assert capsys.readouterr().out.startswith("digraph")

    def test_separate_by_groups(self, capsys):
        """Test even and odd powers of a"""
        code, data = run_json(
            capsys, "separate", "--class", "G", "--k", "(aa)^+", "--l", "a(aa)^+ + a"
        )
        assert code == 0
        assert data["verdict"] == "separable"
        assert data["class"] == "G"

    def test_not_separable(self, capsys):
        """Test a+ and b+ share the identity over G"""
        assert run(["separate", "--class", "G", "--k", "a^+", "--l", "b^+"]) == 1
        assert "witness 1" in capsys.readouterr().out

    def test_separate_reads_the_inverse_style(self, capsys):
        """Test B is a letter in prime style and the inverse of b in capital style"""
        assert run(["separate", "--class", "A", "--k", "aB", "--l", "b"]) == 0
        assert "separable over A" in capsys.readouterr().out
        argv = ["separate", "--class", "A", "--k", "aB", "--l", "b", "--inverse-style", "capital"]
        assert run(argv) == 2
        assert "positive letters, got [\"b'\"]" in capsys.readouterr().err

    def test_unknown_class(self, capsys):
        """Test a class outside the grammar"""
        assert run(["separate", "--class", "Q", "--k", "a", "--l", "b"]) == 2
        assert "unknown pseudovariety" in capsys.readouterr().err

    def test_graph(self, capsys):
        """Test the factorization graph of a^w over aa + aaa"""
        code, data = run_json(capsys, "graph", "--term", "a^w", "--lang", "aa + aaa")
        assert code == 0
        assert data["copies"] == 24
        assert data["m"] == 5
        assert {"initial", "final"} <= {e["source"] for e in data["edges"]} | {
            e["target"] for e in data["edges"]
        }

    def test_graph_needs_one_block(self, capsys):
        """Test a term with two blocks"""
        assert run(["graph", "--term", "a^w b a^w", "--lang", "a"]) == 2
        assert "exactly one is needed" in capsys.readouterr().err

    def test_syntactic(self, capsys):
        """Test (aa)+ has a syntactic semigroup of size 2"""
        code, data = run_json(capsys, "syntactic", "--regex", "(aa)^+")
        assert code == 0
        assert data["size"] == 2
        assert data["images"] == {"a": 0}

    def test_syntactic_dot(self, capsys):
        """Test the minimal automaton as DOT"""
        assert run(["syntactic", "--regex", "(aa)^+", "--format", "dot"]) == 0
        assert capsys.readouterr().out.startswith("digraph")

    def test_enumerate(self, capsys):
        """Test the term budget"""
        code, data = run_json(capsys, "enumerate", "--regex", "a^+", "--max-terms", "3")
        assert code == 0
        assert len(data["terms"]) == 3


class TestUtilityVerbs:
    """Test normalize-bn and thue-morse"""

    def test_normalize_bn(self, capsys):
        """Test w+7 over x^(w+3) = x^w"""
        assert run(["normalize-bn", "--exponent", "w+7", "--n", "3"]) == 0
        assert capsys.readouterr().out == "(w+1)\n"

    def test_thue_morse(self, capsys):
        """Test t_3 is cube-free"""
        assert run(["thue-morse", "--k", "3"]) == 0
        assert capsys.readouterr().out == "abbabaab\ncube-free: yes\n"

    def test_thue_morse_equal_letters(self, capsys):
        """Test x = y is an input error"""
        assert run(["thue-morse", "--k", "2", "--x", "a", "--y", "a"]) == 2

    @pytest.mark.parametrize("k", [4, 6])
    def test_thue_morse_json(self, capsys, k):
        """Test the length and cube flag"""
        code, data = run_json(capsys, "thue-morse", "--k", str(k))
        assert code == 0
        assert data["length"] == 2**k
        assert data["cube_free"] is True
