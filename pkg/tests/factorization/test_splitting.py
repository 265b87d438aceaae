"""
Tests for filtered factorization data and the splitting balancer.
"""

import math

import pytest

from chuk_closure_lab.errors import UnsupportedClassificationError, VerificationFailedError
from chuk_closure_lab.factorization import (
    FilteredData,
    Inconclusive,
    balance_splitting,
    filter_samples,
    limit_terms,
)
from chuk_closure_lab.languages import plus_language
from chuk_closure_lab.semigroups import catalog_morphisms
from chuk_closure_lab.terms import concat, parse_term
from chuk_closure_lab.terms.evaluation import eval_term, expansion_length

NS = (4, 5, 6)


def at_factorials(shift=0):
    """Samples at position n! + shift"""
    return [(n, math.factorial(n) + shift) for n in NS]


class TestFilterSamples:
    """Test classification of sampled splits"""

    def test_constant_and_unbounded(self):
        """Test a^w cut after three copies"""
        fd = filter_samples(parse_term("a^w"), [(n, 3) for n in NS])
        assert isinstance(fd, FilteredData)
        assert fd.ns == NS
        assert [c.kind for c in fd.coordinates] == ["constant", "unbounded"]
        assert fd.coordinates[0].value == 3
        assert fd.simplified == ((2, 1), ("", "a"))

    def test_differing_histories(self, two_blocks):
        """Test a split moving from the filler to a block"""
        result = filter_samples(two_blocks, [(4, 24), (5, 0), (6, 0)])
        assert isinstance(result, Inconclusive)
        assert "differ at n=5" in result.reason

    def test_oscillating_coordinate(self):
        """Test k neither constant nor increasing"""
        result = filter_samples(parse_term("a^w"), [(4, 3), (5, 2), (6, 5)])
        assert isinstance(result, Inconclusive)
        assert "coordinate 0" in result.reason

    def test_sample_checks(self):
        """Test too few samples and unordered indices"""
        with pytest.raises(ValueError, match="at least 3 samples"):
            filter_samples(parse_term("a^w"), [(4, 0), (5, 0)])
        with pytest.raises(ValueError, match="must strictly increase"):
            filter_samples(parse_term("a^w"), [(4, 0), (6, 0), (5, 0)])


class TestLimitTerms:
    """Test lifting one split to the term"""

    def test_finite_prefix(self):
        """Test a^w = aaa . a^(w-3)"""
        fd = filter_samples(parse_term("a^w"), [(n, 3) for n in NS])
        assert limit_terms(fd) == (parse_term("aaa"), parse_term("a^(w-3)"))

    def test_between_blocks(self):
        """Test a^w b^w cut between the blocks"""
        term = parse_term("a^w b^w")
        x, y = limit_terms(filter_samples(term, at_factorials()))
        assert (x, y) == (parse_term("a^w"), parse_term("b^w"))

    def test_finite_suffix(self):
        """Test a^w b cut before b"""
        term = parse_term("a^w b")
        x, y = limit_terms(filter_samples(term, at_factorials()))
        assert (x, y) == (parse_term("a^w"), parse_term("b"))

    def test_position_zero(self):
        """Test x is empty when the cut is at the start"""
        x, y = limit_terms(filter_samples(parse_term("a^w b"), [(n, 0) for n in NS]))
        assert x.is_empty
        assert y == parse_term("a^w b")


class TestBalanceSplitting:
    """Test the balancer and its verification"""

    @pytest.fixture
    def recognizers(self, catalog):
        small = [s for s in catalog if s.size <= 3]
        return list(catalog_morphisms(["a", "b"], small))

    def test_two_blocks(self, recognizers):
        """Test a^w b^w into a^w and b^w"""
        term = parse_term("a^w b^w")
        fd = filter_samples(term, at_factorials())
        z = balance_splitting(
            term,
            [fd],
            recognizers,
            languages=[plus_language(["a"]), plus_language(["b"])],
            factors=[parse_term("a^w"), parse_term("b^w")],
        )
        assert z == [parse_term("a^w"), parse_term("b^w")]

    def test_needs_a_boundary(self, recognizers):
        """Test an empty boundary list"""
        with pytest.raises(ValueError, match="at least one boundary"):
            balance_splitting(parse_term("a^w"), [], recognizers)

    def test_language_count(self):
        """Test one language per factor"""
        term = parse_term("a^w b^w")
        fd = filter_samples(term, at_factorials())
        with pytest.raises(ValueError, match="expected 2 languages, got 1"):
            balance_splitting(term, [fd], [], languages=[plus_language(["a"])])

    def test_empty_factor(self):
        """Test a boundary at position 0"""
        term = parse_term("a^w b^w")
        fd = filter_samples(term, [(n, 0) for n in NS])
        with pytest.raises(UnsupportedClassificationError, match="empty factor"):
            balance_splitting(term, [fd], [])

    def test_rank_mismatch(self):
        """Test factors must keep (rank, nu)"""
        term = parse_term("a^w b^w")
        fd = filter_samples(term, at_factorials())
        with pytest.raises(VerificationFailedError, match="factor 1 has \\(rank, nu\\)"):
            balance_splitting(term, [fd], [], factors=[parse_term("a"), parse_term("b^w")])

    def test_not_in_closure(self):
        """Test factors outside the closures of their languages"""
        term = parse_term("a^w b^w")
        fd = filter_samples(term, at_factorials())
        with pytest.raises(VerificationFailedError, match="not in the closure of L_1"):
            balance_splitting(
                term, [fd], [], languages=[plus_language(["b"]), plus_language(["b"])]
            )

    @pytest.mark.slow
    def test_random_binary_splittings(self, rng, random_term, catalog):
        """Test z1 z2 agrees with t on every small recognizer"""
        small = [s for s in catalog if s.size <= 3]
        recognizers = list(catalog_morphisms(["a", "b", "c"], small))
        balanced = 0
        for _ in range(300):
            if balanced == 100:
                break
            left = random_term(rng, max_rank=2, alphabet="ab")
            right = random_term(rng, max_rank=2, alphabet="bc")
            term = concat(left, right)
            if any(
                expansion_length(term, n) != expansion_length(left, n) + expansion_length(right, n)
                for n in NS
            ):
                continue
            fd = filter_samples(term, [(n, expansion_length(left, n)) for n in NS])
            if isinstance(fd, Inconclusive):
                continue
            z = balance_splitting(
                term,
                [fd],
                recognizers,
                languages=[plus_language(["a", "b"]), plus_language(["b", "c"])],
                factors=[left, right],
            )
            assert [p.rank_nu() for p in z] == [left.rank_nu(), right.rank_nu()]
            for phi in recognizers:
                assert eval_term(phi, concat(*z)) == eval_term(phi, term)
            balanced += 1
        assert balanced >= 50
