"""
The free group: reduced words, Stallings graphs, rational subsets and their
closures in the profinite topology.
"""

from .rational import (
    GroupAutomaton,
    benois_reduce,
    closure_g,
    common_element,
    group_automaton,
    intersect_empty_g,
    rational_member,
    reduced_words,
    subgroup_automaton,
    subgroup_of_rational,
)
from .stallings import StallingsGraph, fold_stallings, subgroup_member
from .words import IDENTITY, GroupWord, doubled_alphabet, free_reduce, invert_symbol

__all__ = [
    # Words
    "GroupWord",
    "IDENTITY",
    "free_reduce",
    "invert_symbol",
    "doubled_alphabet",
    # Subgroups
    "StallingsGraph",
    "fold_stallings",
    "subgroup_member",
    # Rational subsets
    "GroupAutomaton",
    "group_automaton",
    "reduced_words",
    "benois_reduce",
    "subgroup_of_rational",
    "subgroup_automaton",
    "closure_g",
    "rational_member",
    "common_element",
    "intersect_empty_g",
]
