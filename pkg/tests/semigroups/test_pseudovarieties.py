"""
Tests for pseudovariety predicates.
"""

import pytest

from chuk_closure_lab.errors import BudgetExceededError
from chuk_closure_lab.semigroups import (
    PseudovarietyPredicate,
    brandt_b2,
    cyclic_group,
    flip_flop,
    is_group,
    klein_four,
    left_zero,
    monogenic,
    pseudovariety_member,
    symmetric_group_s3,
)


class TestParse:
    """Test the class syntax"""

    def test_builtin_names(self):
        """Test S, A and G"""
        for name in ("S", "A", "G"):
            assert PseudovarietyPredicate.parse(name).name == name

    def test_bn(self):
        """Test Bn:<n>"""
        predicate = PseudovarietyPredicate.parse("Bn:3")
        assert predicate.n == 3
        assert predicate.label() == "Bn:3"

    def test_bad_bn_parameter(self):
        """Test a non-integer parameter"""
        with pytest.raises(ValueError, match="invalid Bn parameter"):
            PseudovarietyPredicate.parse("Bn:x")

    def test_custom(self):
        """Test one identity"""
        predicate = PseudovarietyPredicate.parse("Custom:xy=yx")
        assert len(predicate.identities) == 1
        assert predicate.label() == "Custom:xy=yx"

    def test_custom_needs_equation(self):
        """Test an identity without '='"""
        with pytest.raises(ValueError, match="must have the form"):
            PseudovarietyPredicate.parse("Custom:xy")

    def test_unknown(self):
        """Test unknown class names"""
        with pytest.raises(ValueError, match="unknown pseudovariety"):
            PseudovarietyPredicate.parse("Q")

    def test_parameters_checked(self):
        """Test Bn without n and Custom without identities"""
        with pytest.raises(ValueError, match="needs its parameter"):
            PseudovarietyPredicate(name="Bn")
        with pytest.raises(ValueError, match="at least one identity"):
            PseudovarietyPredicate(name="Custom")

    def test_modulus(self):
        """Test n with x^(w+n) = x^w on the whole class"""
        assert PseudovarietyPredicate.parse("A").modulus == 1
        assert PseudovarietyPredicate.parse("Bn:4").modulus == 4
        assert PseudovarietyPredicate.parse("G").modulus is None
        assert PseudovarietyPredicate.parse("S").modulus is None


class TestMembership:
    """Test membership of catalog semigroups"""

    def test_groups(self):
        """Test G"""
        groups = PseudovarietyPredicate.parse("G")
        assert groups.contains(cyclic_group(3))
        assert groups.contains(klein_four())
        assert not groups.contains(brandt_b2())
        assert not groups.contains(monogenic(2, 1))

    def test_aperiodic(self):
        """Test A"""
        aperiodic = PseudovarietyPredicate.parse("A")
        assert aperiodic.contains(brandt_b2())
        assert aperiodic.contains(left_zero(2))
        assert aperiodic.contains(flip_flop())
        assert not aperiodic.contains(cyclic_group(2))

    def test_bn(self):
        """Test periods dividing n"""
        b2 = PseudovarietyPredicate.parse("Bn:2")
        assert b2.contains(cyclic_group(2))
        assert b2.contains(monogenic(3, 2))
        assert not b2.contains(cyclic_group(3))
        assert PseudovarietyPredicate.parse("Bn:6").contains(symmetric_group_s3())

    def test_everything_in_s(self, catalog):
        """Test S contains the catalog"""
        every = PseudovarietyPredicate.parse("S")
        assert all(every.contains(s) for s in catalog)

    def test_is_group(self):
        """Test the row and column permutation check"""
        assert is_group(symmetric_group_s3())
        assert not is_group(flip_flop())

    def test_function_form(self):
        """Test pseudovariety_member on a group and a band"""
        groups = PseudovarietyPredicate.parse("G")
        aperiodic = PseudovarietyPredicate.parse("A")
        assert pseudovariety_member(klein_four(), groups)
        assert not pseudovariety_member(klein_four(), aperiodic)
        assert pseudovariety_member(left_zero(3), aperiodic)
        assert not pseudovariety_member(left_zero(3), groups)


class TestCustomIdentities:
    """Test classes given by identities"""

    def test_commutativity(self):
        """Test xy = yx"""
        commutative = PseudovarietyPredicate.parse("Custom:xy=yx")
        assert commutative.contains(cyclic_group(4))
        assert commutative.contains(klein_four())
        assert not commutative.contains(symmetric_group_s3())
        assert not commutative.contains(left_zero(2))

    def test_aperiodicity_identity_matches_a(self, catalog):
        """Test x^w = x^(w+1) defines A on small catalog semigroups"""
        custom = PseudovarietyPredicate.parse("Custom:x^w=x^(w+1)")
        aperiodic = PseudovarietyPredicate.parse("A")
        for semigroup in catalog:
            if semigroup.size <= 8:
                assert custom.contains(semigroup) == aperiodic.contains(semigroup)

    def test_variable_budget(self):
        """Test many variables over a large semigroup"""
        custom = PseudovarietyPredicate.parse("Custom:xyzt=txyz")
        with pytest.raises(BudgetExceededError, match="custom identity budget"):
            custom.contains(monogenic(4, 4))
