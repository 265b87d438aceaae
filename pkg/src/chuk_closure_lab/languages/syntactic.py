# src/chuk_closure_lab/languages/syntactic.py
"""
Transition and syntactic semigroups of automata.

A nonempty word acts on the states of a complete Dfa by running it from every
state; the transformations obtained form the transition semigroup, and for the
minimal Dfa of L this is the syntactic semigroup of L.
"""

import logging
from functools import lru_cache
from typing import FrozenSet, Tuple

from ..semigroups.finite import (
    FiniteSemigroup,
    SemigroupMorphism,
    image_of_rational,
    transformation_semigroup,
)
from .automata import Dfa

logger = logging.getLogger(__name__)


def transition_semigroup(dfa: Dfa) -> Tuple[FiniteSemigroup, SemigroupMorphism]:
    """Transition semigroup of any complete Dfa, with the letter morphism"""
    generators = [
        tuple(dfa.transitions[q][a] for q in range(dfa.num_states))
        for a in range(len(dfa.alphabet))
    ]
    semigroup, indices = transformation_semigroup(generators, dfa.num_states)
    morphism = SemigroupMorphism(
        alphabet=dfa.alphabet, target=semigroup, images=dict(zip(dfa.alphabet, indices))
    )
    logger.debug(f"Transition semigroup of {dfa.num_states} states has {semigroup.size} elements")
    return semigroup, morphism


def syntactic_semigroup(dfa: Dfa) -> Tuple[FiniteSemigroup, SemigroupMorphism]:
    """Syntactic semigroup of L(A), computed on the minimal automaton"""
    return transition_semigroup(dfa.minimize())


def syntactic_monoid(
    dfa: Dfa, fresh_identity: bool = True
) -> Tuple[FiniteSemigroup, SemigroupMorphism]:
    """
    Syntactic monoid of L(A).

    With fresh_identity the identity is always a new element, so only the empty
    word maps to it. Otherwise an identity is adjoined only when no nonempty word
    already acts as one.
    """
    semigroup, morphism = syntactic_semigroup(dfa)
    if fresh_identity or semigroup.identity is None:
        semigroup = semigroup.adjoin_identity()
    return semigroup, morphism.model_copy(update={"target": semigroup})


@lru_cache(maxsize=256)
def syntactic_image(dfa: Dfa) -> Tuple[SemigroupMorphism, FrozenSet[int]]:
    """The syntactic morphism of L(A) and the image of L(A) under it"""
    _, morphism = syntactic_semigroup(dfa)
    return morphism, frozenset(image_of_rational(morphism, dfa))
