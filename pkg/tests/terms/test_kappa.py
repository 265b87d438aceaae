"""
Tests for canonical kappa-terms.
"""

import pytest

from chuk_closure_lab.errors import EmptyTermError, ExponentRangeError
from chuk_closure_lab.terms import (
    EMPTY,
    Exponent,
    KappaTerm,
    Power,
    Word,
    canonicalize,
    concat,
    normalize_term,
    omega_power,
    parse_term,
    power,
    rank_nu,
    simplify_over_s,
    word,
)


class TestCanonicalForm:
    """Test flattening and merging"""

    def test_adjacent_words_merge(self):
        """Test concatenated words become one factor"""
        assert concat("ab", "ba").factors == (Word(letters="abba"),)

    def test_mixed_concatenation(self):
        """Test words and powers keep their order"""
        assert concat("a", omega_power("b"), "c").to_text() == "a b^w c"

    def test_finite_powers_expand(self):
        """Test base^3 becomes three copies"""
        assert power("ab", Exponent.finite(3)) == word("ababab")

    def test_power_of_empty_is_empty(self):
        """Test an empty base gives the empty term"""
        assert power("", Exponent.omega_plus(0)) == EMPTY

    def test_empty_term_rejected(self):
        """Test the empty term is internal only"""
        with pytest.raises(EmptyTermError, match="empty term"):
            canonicalize("")
        assert canonicalize("", allow_empty=True).is_empty

    def test_unmerged_words_rejected(self):
        """Test a factor sequence with adjacent words is not canonical"""
        with pytest.raises(ValueError, match="adjacent words"):
            KappaTerm(factors=(Word(letters="a"), Word(letters="b")))

    def test_finite_power_factor_rejected(self):
        """Test Power factors carry omega exponents only"""
        with pytest.raises(ValueError, match="finite powers"):
            Power(base=word("a"), exponent=Exponent.finite(2))


class TestShape:
    """Test rank, nu and the top layer"""

    def test_rank_nu(self):
        """Test (rank, nu) of standard terms"""
        assert parse_term("a^w b a^w").rank_nu() == (1, 2)
        assert rank_nu(parse_term("(a^w b)^w a^w")) == (2, 1)
        assert word("ab").rank_nu() == (0, 0)

    def test_layout_of_two_blocks(self, two_blocks):
        """Test fillers t0, t1, t2 and the two blocks"""
        layout = two_blocks.layout()
        assert [f.to_text() for f in layout.fillers] == ["", "b", ""]
        assert [b.to_text() for b in layout.blocks] == ["a^w", "a^w"]

    def test_layout_keeps_lower_rank_in_fillers(self):
        """Test powers below the top rank stay inside fillers"""
        layout = parse_term("(a^w b)^w a^w c").layout()
        assert [b.to_text() for b in layout.blocks] == ["(a^w b)^w"]
        assert [f.to_text() for f in layout.fillers] == ["", "a^w c"]

    def test_letters_and_node_count(self, two_blocks):
        """Test letters and the node count (letters plus powers)"""
        assert two_blocks.letters() == {"a", "b"}
        assert two_blocks.node_count() == 5
        assert parse_term("(ab)^w").node_count() == 3

    def test_word_of_rank_zero(self):
        """Test the letters of a word term"""
        assert word("abc").word() == "abc"
        with pytest.raises(ValueError, match="is not a word"):
            parse_term("a^w").word()


class TestText:
    """Test the text form"""

    def test_single_letter_base_is_bare(self):
        """Test a^w needs no parentheses"""
        assert omega_power("a").to_text() == "a^w"

    def test_longer_bases_are_parenthesized(self):
        """Test (ab)^w and nested bases"""
        assert omega_power("ab").to_text() == "(ab)^w"
        assert parse_term("(a^w b)^(w-1)").to_text() == "(a^w b)^(w-1)"


class TestNormalizeTerm:
    """Test rewriting by identities of all finite semigroups"""

    def test_primitive_roots(self):
        """Test (u^k)^(w+n) becomes u^(w+kn)"""
        assert normalize_term(parse_term("(aa)^w")).to_text() == "a^w"
        assert normalize_term(parse_term("(aa)^(w+1)")).to_text() == "a^(w+2)"

    def test_absorption(self):
        """Test a power absorbs neighbouring copies of its base"""
        assert normalize_term(parse_term("a a^w")).to_text() == "a^(w+1)"
        assert normalize_term(parse_term("a^w aab")).to_text() == "a^(w+2) b"
        assert normalize_term(parse_term("a^w a^w")).to_text() == "a^w"

    def test_modulus(self):
        """Test offsets reduced over x^(w+n) = x^w"""
        assert normalize_term(parse_term("a^(w+5)"), 3).to_text() == "a^(w+2)"
        assert normalize_term(parse_term("a a^w"), 1).to_text() == "a^w"

    def test_offset_overflow(self):
        """Test a root multiplying the offset past the bound"""
        term = parse_term("(aa)^(w+600000)")
        with pytest.raises(ExponentRangeError, match="omega offset out of range: 1200000"):
            normalize_term(term)
        assert normalize_term(term, 4).to_text() == "a^w"

    def test_simplify_over_s(self):
        """Test simplify_over_s is normalization without a modulus"""
        term = parse_term("b a a^w (ab)^w")
        assert simplify_over_s(term) == normalize_term(term)

    def test_normalization_is_idempotent(self, rng, random_term):
        """Test normal forms are fixed points"""
        for _ in range(50):
            term = random_term(rng, max_rank=2)
            once = normalize_term(term)
            assert normalize_term(once) == once
