"""
Tests for regular expressions over X+.
"""

import pytest

from chuk_closure_lab.errors import RegexSyntaxError
from chuk_closure_lab.languages import (
    RegexConcat,
    RegexEmpty,
    RegexPlus,
    RegexUnion,
    parse_regex,
    regex_from_words,
    regex_to_text,
)
from chuk_closure_lab.languages.regex import regex_symbols, tokenize_symbols


class TestParseRegex:
    """Test the expression grammar"""

    def test_union(self):
        """Test '+' between expressions"""
        node = parse_regex("a + b")
        assert isinstance(node, RegexUnion)
        assert node.to_text() == "a + b"

    def test_concat_of_union(self):
        """Test unions are parenthesized inside products"""
        node = parse_regex("(a+b)c")
        assert isinstance(node, RegexConcat)
        assert regex_to_text(node) == "(a + b)c"

    def test_iteration(self):
        """Test ^+ on letters and groups"""
        assert parse_regex("a^+").to_text() == "a^+"
        assert parse_regex("(ab)^+").to_text() == "(ab)^+"
        nested = parse_regex("a^+^+")
        assert isinstance(nested, RegexPlus)
        assert nested.to_text() == "(a^+)^+"

    def test_empty_language(self):
        """Test 0 and the empty-set sign"""
        assert isinstance(parse_regex("0"), RegexEmpty)
        assert isinstance(parse_regex("∅"), RegexEmpty)

    def test_inverse_symbols(self):
        """Test primes and the capital style"""
        assert regex_symbols(parse_regex("ab'")) == {"a", "b'"}
        assert regex_symbols(parse_regex("aB", style="capital")) == {"a", "b'"}


class TestParseRegexErrors:
    """Test syntax errors"""

    def test_empty_input(self):
        """Test nothing to parse"""
        with pytest.raises(RegexSyntaxError, match="expected an expression"):
            parse_regex("")

    def test_missing_parenthesis(self):
        """Test an unclosed group"""
        with pytest.raises(RegexSyntaxError, match="missing '\\)'"):
            parse_regex("(a")

    def test_star_is_not_supported(self):
        """Test '*' and '^2'"""
        with pytest.raises(RegexSyntaxError, match="unexpected '\\*'"):
            parse_regex("a*")
        with pytest.raises(RegexSyntaxError, match="expected '\\^\\+'"):
            parse_regex("a^2")

    def test_alphabet_check(self):
        """Test symbols outside a given alphabet"""
        with pytest.raises(RegexSyntaxError, match="symbol 'c' is not in the alphabet"):
            parse_regex("c", alphabet=["a", "b"])

    def test_position(self):
        """Test the error position"""
        with pytest.raises(RegexSyntaxError) as excinfo:
            parse_regex("ab)")
        assert excinfo.value.position == 2


class TestHelpers:
    """Test word lists and tokenizing"""

    def test_regex_from_words(self):
        """Test a union of words"""
        assert regex_from_words([["a", "b"], ["b"]]).to_text() == "ab + b"
        assert isinstance(regex_from_words([]), RegexEmpty)

    def test_regex_from_words_rejects_empty_word(self):
        """Test the empty word is not expressible"""
        with pytest.raises(ValueError, match="empty word"):
            regex_from_words([[]])

    def test_tokenize_symbols(self):
        """Test symbols with their positions"""
        assert tokenize_symbols("ab'a") == [("a", 0), ("b'", 1), ("a", 3)]
        assert tokenize_symbols("aB", style="capital") == [("a", 0), ("b'", 1)]
