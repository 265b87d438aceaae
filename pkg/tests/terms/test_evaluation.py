"""
Tests for expansions and evaluations of terms.
"""

import math

import pytest

from chuk_closure_lab.errors import AlphabetError, BudgetExceededError, EmptyTermError
from chuk_closure_lab.semigroups import (
    SemigroupMorphism,
    cyclic_group,
    eval_word,
    max_index_period,
)
from chuk_closure_lab.terms import EMPTY, parse_term
from chuk_closure_lab.terms.evaluation import (
    epsilon_expand,
    equal_over_g,
    eval_approximant,
    eval_term,
    eval_term_in,
    expansion_length,
    in_closure_s,
    refute_over_s,
    to_free_group_word,
)


def _random_morphism(rng, semigroup, alphabet=("a", "b")):
    images = {x: rng.randrange(semigroup.size) for x in alphabet}
    return SemigroupMorphism(alphabet=alphabet, target=semigroup, images=images)


class TestExpansion:
    """Test epsilon_n"""

    def test_expansion_length(self):
        """Test |epsilon_4((a^w b)^w)| = 25 * 24"""
        assert expansion_length(parse_term("(a^w b)^w"), 4) == 600

    def test_expand_nested(self):
        """Test the expanded word of a rank 2 term"""
        expanded = epsilon_expand(parse_term("(a^w b)^w"), 4)
        assert len(expanded) == 600
        assert expanded == ("a" * 24 + "b") * 24

    def test_expand_offsets(self):
        """Test omega - 1 reads as n! - 1"""
        assert epsilon_expand(parse_term("a^(w-1) b"), 4) == "a" * 23 + "b"

    def test_minimum_index(self):
        """Test n < 4 is rejected"""
        with pytest.raises(ValueError, match="expansion index must be >= 4"):
            epsilon_expand(parse_term("a^w"), 3)

    def test_length_budget(self):
        """Test the length limit is enforced before expanding"""
        with pytest.raises(BudgetExceededError, match="above the limit 10"):
            epsilon_expand(parse_term("a^w"), 4, max_length=10)


class TestEvaluation:
    """Test values in finite semigroups"""

    def test_omega_powers_in_c2(self):
        """Test a^w, a^(w+1), a^(w-1) with a the generator of C2"""
        c2 = cyclic_group(2)
        images = {"a": 1}
        assert eval_term_in(c2, images, parse_term("a^w")) == 0
        assert eval_term_in(c2, images, parse_term("a^(w+1)")) == 1
        assert eval_term_in(c2, images, parse_term("a^(w-1)")) == 1

    def test_empty_term(self):
        """Test the empty term has no value"""
        with pytest.raises(EmptyTermError):
            eval_term_in(cyclic_group(2), {"a": 1}, EMPTY)

    def test_letter_outside_morphism(self):
        """Test letters without an image"""
        morphism = SemigroupMorphism(alphabet=("a",), target=cyclic_group(2), images={"a": 1})
        with pytest.raises(AlphabetError, match="not in the alphabet"):
            eval_term(morphism, parse_term("ab"))

    def test_approximants_match_expanded_words(self, rng, random_term, small_groups):
        """Test eval_approximant against evaluating the expanded word"""
        for _ in range(40):
            term = random_term(rng, n=4, max_rank=2)
            word = epsilon_expand(term, 4)
            for group in small_groups:
                morphism = _random_morphism(rng, group)
                assert eval_approximant(morphism, term, 4) == eval_word(morphism, word)

    @pytest.mark.slow
    def test_eventual_stability_on_catalog(self, rng, random_term, catalog):
        """Test eval_term = value of epsilon_n(t) for every valid n on the full catalog"""
        terms = [random_term(rng, max_rank=2) for _ in range(100)]
        for semigroup in catalog:
            index, period = max_index_period(semigroup)
            valid = [
                n
                for n in (4, 5, 6)
                if math.factorial(n) % period == 0 and math.factorial(n) - 2 >= index
            ]
            for term in terms:
                morphism = _random_morphism(rng, semigroup)
                value = eval_term(morphism, term)
                for n in valid:
                    assert eval_approximant(morphism, term, n) == value, (
                        f"{term} in {semigroup.name} at n={n}"
                    )


class TestFreeGroupImage:
    """Test the word problem over G"""

    def test_images(self):
        """Test x^w goes to 1 and x^(w-1) to the inverse"""
        assert to_free_group_word(parse_term("a^(w-1)")).to_text() == "a'"
        assert to_free_group_word(parse_term("a^w b a^(w+2)")).to_text() == "baa"
        assert to_free_group_word(parse_term("a^w")).to_text() == "1"

    def test_equal_over_g(self):
        """Test equalities decided in the free group"""
        assert equal_over_g(parse_term("a^w"), parse_term("b^w"))
        assert equal_over_g(parse_term("ab a^w"), parse_term("ab"))
        assert not equal_over_g(parse_term("ab"), parse_term("ba"))


class TestRefuteOverS:
    """Test refutation by catalog morphisms"""

    def test_refutes_commutation(self):
        """Test ab != ba is witnessed"""
        left, right = parse_term("ab"), parse_term("ba")
        morphism = refute_over_s(left, right)
        assert morphism is not None
        assert eval_term(morphism, left) != eval_term(morphism, right)

    def test_true_identity_is_not_refuted(self):
        """Test a^w a^w = a^w survives the budget"""
        assert refute_over_s(parse_term("a^w a^w"), parse_term("a^w"), budget=300) is None


class TestInClosureS:
    """Test closure membership through the syntactic image"""

    def test_even_powers(self, even_a):
        """Test a^w lies in the closure of (aa)+, a^(w+1) does not"""
        assert in_closure_s(parse_term("a^w"), even_a)
        assert not in_closure_s(parse_term("a^(w+1)"), even_a)

    def test_letters_outside_alphabet(self, even_a):
        """Test a term over other letters is never in the closure"""
        assert not in_closure_s(parse_term("b"), even_a)

    def test_limit_of_products(self, compile_text):
        """Test a^w b lies in the closure of (a+b+)+"""
        assert in_closure_s(parse_term("a^w b"), compile_text("(a^+b^+)^+"))
