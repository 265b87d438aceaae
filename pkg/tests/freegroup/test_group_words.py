"""
Tests for words of the free group.
"""

import pytest
from pydantic import ValidationError

from chuk_closure_lab.errors import AlphabetError
from chuk_closure_lab.freegroup import IDENTITY, GroupWord, doubled_alphabet, free_reduce


class TestParse:
    """Test reading words"""

    def test_prime_style(self):
        """Test a' as the inverse of a"""
        word = GroupWord.parse("ab'a")
        assert word.symbols == ("a", "b'", "a")
        assert word.to_text() == "ab'a"

    def test_capital_style(self):
        """Test capitals as inverses"""
        word = GroupWord.parse("aBa", style="capital")
        assert word.symbols == ("a", "b'", "a")
        assert word.to_text(style="capital") == "aBa"

    def test_identity(self):
        """Test 1, ε and the empty string"""
        for text in ("1", "", "ε", " 1 "):
            assert GroupWord.parse(text) == IDENTITY
        assert IDENTITY.to_text() == "1"

    def test_invalid_character(self):
        """Test digits inside a word"""
        with pytest.raises(AlphabetError, match="unexpected '1'"):
            GroupWord.parse("a1")

    def test_invalid_symbol(self):
        """Test the model validator"""
        with pytest.raises(ValidationError, match="invalid symbol"):
            GroupWord(symbols=("ab",))


class TestOperations:
    """Test reduction, inverses and products"""

    def test_reduced(self):
        """Test free reduction"""
        word = GroupWord.parse("aa'b")
        assert not word.is_reduced
        assert free_reduce(word).to_text() == "b"
        assert GroupWord.parse("ab'ba'").reduced() == IDENTITY

    def test_inverse(self):
        """Test (ab)^-1 = b'a'"""
        assert GroupWord.parse("ab").inverse().to_text() == "b'a'"

    def test_power(self):
        """Test integer powers"""
        word = GroupWord.parse("ab")
        assert word.power(2).to_text() == "abab"
        assert word.power(-2).to_text() == "b'a'b'a'"
        assert word.power(0) == IDENTITY

    def test_product_reduces(self):
        """Test the product cancels at the seam"""
        assert (GroupWord.parse("ab") * GroupWord.parse("b'a")).to_text() == "aa"
        assert GroupWord.parse("ab") * GroupWord.parse("ab").inverse() == IDENTITY

    def test_from_power(self):
        """Test a^n with n in Z"""
        assert GroupWord.from_power("a", 3).to_text() == "aaa"
        assert GroupWord.from_power("a", -2).to_text() == "a'a'"

    def test_doubled_alphabet(self):
        """Test a, a', b, b' order"""
        assert doubled_alphabet(["b", "a", "a"]) == ("a", "a'", "b", "b'")
