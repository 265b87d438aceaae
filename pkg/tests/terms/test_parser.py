"""
Tests for the term and exponent parsers.
"""

import pytest

from chuk_closure_lab.errors import TermSyntaxError
from chuk_closure_lab.terms import OMEGA, Exponent, parse_exponent, parse_term, word


class TestParseTerm:
    """Test parsing kappa-terms"""

    def test_text_round_trip(self):
        """Test a standard term prints back as written"""
        assert parse_term("a^w b a^w").to_text() == "a^w b a^w"

    def test_whitespace_is_ignored(self):
        """Test spaces inside the expression"""
        assert parse_term("( a ^ w b ) ^ w") == parse_term("(a^w b)^w")

    def test_finite_exponents_expand(self):
        """Test finite exponents, bare and parenthesized"""
        assert parse_term("(ab)^3") == word("ababab")
        assert parse_term("a^(3)") == word("aaa")

    def test_iterated_powers(self):
        """Test a^w^w nests"""
        term = parse_term("a^w^w")
        assert term.rank == 2
        assert term.to_text() == "(a^w)^w"

    def test_omega_offsets(self):
        """Test (w+k) and (w-k)"""
        term = parse_term("a^(w+2) b^(w-1)")
        exponents = [f.exponent for f in term.factors]
        assert exponents == [Exponent.omega_plus(2), Exponent.omega_plus(-1)]


class TestParseTermErrors:
    """Test syntax errors"""

    def test_empty(self):
        """Test the empty string"""
        with pytest.raises(TermSyntaxError, match="empty term"):
            parse_term("  ")

    def test_missing_exponent(self):
        """Test a dangling caret"""
        with pytest.raises(TermSyntaxError, match="expected an exponent"):
            parse_term("a^")

    def test_empty_parentheses(self):
        """Test ()"""
        with pytest.raises(TermSyntaxError, match="empty parentheses"):
            parse_term("()")

    def test_unclosed_parenthesis(self):
        """Test a missing closing parenthesis"""
        with pytest.raises(TermSyntaxError, match="expected '\\)'"):
            parse_term("(ab")

    def test_zero_exponent(self):
        """Test a^0"""
        with pytest.raises(TermSyntaxError, match="finite exponents must be positive"):
            parse_term("a^0")

    def test_bad_omega_offset(self):
        """Test (w*2)"""
        with pytest.raises(TermSyntaxError, match="expected '\\+' or '-' after w"):
            parse_term("a^(w*2)")

    def test_position_is_reported(self):
        """Test the error carries its position"""
        with pytest.raises(TermSyntaxError, match="at position 2") as excinfo:
            parse_term("ab)")
        assert excinfo.value.position == 2


class TestParseExponent:
    """Test parsing exponents alone"""

    def test_forms(self):
        """Test w, w+2, (w-1), (w) and integers"""
        assert parse_exponent("w") == OMEGA
        assert parse_exponent("w+2") == Exponent.omega_plus(2)
        assert parse_exponent("w + 2") == Exponent.omega_plus(2)
        assert parse_exponent("(w-1)") == Exponent.omega_plus(-1)
        assert parse_exponent("(w)") == OMEGA
        assert parse_exponent("3") == Exponent.finite(3)

    def test_errors(self):
        """Test empty and malformed exponents"""
        with pytest.raises(TermSyntaxError, match="empty exponent"):
            parse_exponent("")
        with pytest.raises(TermSyntaxError, match="after w"):
            parse_exponent("w2")
        with pytest.raises(TermSyntaxError, match="unexpected 'x'"):
            parse_exponent("3x")
