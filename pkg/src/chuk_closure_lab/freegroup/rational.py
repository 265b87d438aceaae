# src/chuk_closure_lab/freegroup/rational.py
"""
Rational subsets of the free group and their closures.

A rational subset is given by an automaton over the doubled alphabet
a, a', b, b', ... It is in reduced form when its language is exactly the set of
reduced words of its elements; union, intersection and membership are then
plain automaton operations. Closures in the profinite topology are computed
recursively: finite sets and unions are closed, products of closed rational
sets are closed, and the closure of L+ is the subgroup generated by L.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Set

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import EmptyLanguageError
from ..languages.automata import Dfa, Nfa, compile_regex, crawl, empty_language, lang_op
from ..languages.regex import RegexAst, RegexConcat, RegexPlus, RegexUnion, regex_symbols
from .stallings import StallingsGraph, fold_stallings
from .words import GroupWord, doubled_alphabet, invert_symbol, letter_of

logger = logging.getLogger(__name__)


class GroupAutomaton(BaseModel):
    """Automaton over X and X^-1 presenting a rational subset of the free group"""

    model_config = ConfigDict(frozen=True)

    dfa: Dfa = Field(..., description="Automaton over the doubled alphabet")
    reduced_form: bool = Field(
        default=False, description="Language is exactly the reduced words of the subset"
    )

    @property
    def letters(self) -> List[str]:
        return sorted({letter_of(s) for s in self.dfa.alphabet})

    def accepts(self, word: GroupWord) -> bool:
        """Membership of a group element (reduced-form automata only)"""
        if not self.reduced_form:
            raise ValueError("membership needs a reduced-form automaton; use benois_reduce")
        symbols = word.reduced().symbols
        if any(s not in self.dfa.alphabet for s in symbols):
            return False
        return self.dfa.accepts(symbols)

    def is_empty(self) -> bool:
        return self.dfa.is_empty()

    def elements(self, max_length: int) -> List[GroupWord]:
        """Accepted words up to a length, shortest first then in alphabet order"""
        live = self.dfa.live_states()
        found: List[GroupWord] = []
        layer = [((), self.dfa.initial)] if self.dfa.initial in live else []
        for _ in range(max_length + 1):
            nxt = []
            for symbols, q in layer:
                if q in self.dfa.finals:
                    found.append(GroupWord(symbols=symbols))
                for x, target in zip(self.dfa.alphabet, self.dfa.transitions[q]):
                    if target in live:
                        nxt.append((symbols + (x,), target))
            layer = nxt
        return found

    def to_json(self) -> Dict[str, Any]:
        return {"reduced_form": self.reduced_form, "automaton": self.dfa.to_json()}


def over_letters(dfa: Dfa, letters: Sequence[str]) -> Dfa:
    """The automaton over the doubled alphabet of the given letters"""
    return dfa.with_alphabet(doubled_alphabet(list(letters) + [letter_of(s) for s in dfa.alphabet]))


def reduced_words(letters: Sequence[str]) -> Dfa:
    """All reduced words, the empty word included"""
    alphabet = doubled_alphabet(letters)

    def follow(last: Optional[str], symbol: str) -> Optional[str]:
        if last == "#" or (last is not None and symbol == invert_symbol(last)):
            return "#"
        return symbol

    return crawl(alphabet, None, lambda last: last != "#", follow).minimize()


def _saturate(nfa: Nfa) -> np.ndarray:
    """Pairs (p, q) joined by a path whose label reduces to the empty word"""
    n = nfa.num_states
    step: Dict[str, np.ndarray] = {x: np.zeros((n, n), dtype=bool) for x in nfa.alphabet}
    for p, x, q in nfa.edges:
        if x is not None:
            step[x][p, q] = True
    reach = np.eye(n, dtype=bool)
    for p, x, q in nfa.edges:
        if x is None:
            reach[p, q] = True
    while True:
        grown = reach.copy()
        for x in nfa.alphabet:
            inverse = step.get(invert_symbol(x))
            if inverse is not None:
                grown |= (step[x].astype(int) @ reach.astype(int) @ inverse.astype(int)) > 0
        while True:
            closed = grown | ((grown.astype(int) @ grown.astype(int)) > 0)
            if np.array_equal(closed, grown):
                break
            grown = closed
        if np.array_equal(grown, reach):
            return reach
        reach = grown


def benois_reduce(automaton: GroupAutomaton | Dfa | Nfa) -> GroupAutomaton:
    """Reduced-form automaton of the subset presented by the input"""
    if isinstance(automaton, GroupAutomaton):
        if automaton.reduced_form:
            return automaton
        automaton = automaton.dfa
    if isinstance(automaton, Dfa):
        automaton = over_letters(automaton, []).to_nfa()
    letters = sorted({letter_of(s) for s in automaton.alphabet})
    reach = _saturate(automaton)
    edges = [e for e in automaton.edges if e[1] is not None]
    for p, q in zip(*np.nonzero(reach)):
        if p != q:
            edges.append((int(p), None, int(q)))
    saturated = automaton.model_copy(update={"edges": tuple(edges)}).determinize()
    saturated = over_letters(saturated, letters)
    reduced = lang_op("intersect", saturated, reduced_words(letters))
    logger.debug(f"Benois reduction: {automaton.num_states} states -> {reduced.num_states}")
    return GroupAutomaton(dfa=reduced, reduced_form=True)


def subgroup_of_rational(automaton: GroupAutomaton | Dfa) -> StallingsGraph:
    """Stallings graph of the subgroup generated by the subset"""
    dfa = automaton.dfa if isinstance(automaton, GroupAutomaton) else automaton
    live = dfa.live_states()
    if dfa.initial not in live:
        raise EmptyLanguageError("the subgroup generated by the empty set is not built here")
    # labels of a BFS tree over the useful states
    label: Dict[int, GroupWord] = {dfa.initial: GroupWord()}
    order = [dfa.initial]
    for q in order:
        for x, target in zip(dfa.alphabet, dfa.transitions[q]):
            if target in live and target not in label:
                label[target] = GroupWord(symbols=label[q].symbols + (x,))
                order.append(target)
    generators: List[GroupWord] = []
    for p in order:
        for x, q in zip(dfa.alphabet, dfa.transitions[p]):
            if q in label:
                generators.append(label[p] * GroupWord(symbols=(x,)) * label[q].inverse())
        if p in dfa.finals:
            generators.append(label[p])
    letters = sorted({letter_of(s) for s in dfa.alphabet})
    return fold_stallings(generators, letters)


def subgroup_automaton(graph: StallingsGraph, letters: Sequence[str] = ()) -> GroupAutomaton:
    """Reduced-form automaton whose language is the reduced words of the subgroup"""
    alphabet = doubled_alphabet(list(graph.alphabet) + list(letters))
    moves = graph.moves()
    sink = graph.num_vertices
    rows = tuple(
        tuple(moves.get((v, x), sink) for x in alphabet) for v in range(graph.num_vertices)
    ) + (tuple(sink for _ in alphabet),)
    loops = Dfa(
        alphabet=alphabet,
        num_states=graph.num_vertices + 1,
        initial=graph.base,
        finals=frozenset([graph.base]),
        transitions=rows,
    )
    reduced = lang_op("intersect", loops, reduced_words(sorted({letter_of(x) for x in alphabet})))
    return GroupAutomaton(dfa=reduced, reduced_form=True)


def group_automaton(node: RegexAst, letters: Sequence[str] = ()) -> GroupAutomaton:
    """The rational subset presented by an expression (not reduced)"""
    all_letters = sorted({letter_of(s) for s in regex_symbols(node)} | set(letters))
    return GroupAutomaton(dfa=compile_regex(node, doubled_alphabet(all_letters)))


def _is_finite(node: RegexAst) -> bool:
    if isinstance(node, RegexPlus):
        return False
    if isinstance(node, (RegexUnion, RegexConcat)):
        return _is_finite(node.left) and _is_finite(node.right)
    return True


def closure_g(node: RegexAst, letters: Sequence[str] = ()) -> GroupAutomaton:
    """Closure of a rational subset in the profinite topology of the free group"""
    all_letters = sorted({letter_of(s) for s in regex_symbols(node)} | set(letters))
    alphabet = doubled_alphabet(all_letters)
    if _is_finite(node):
        return benois_reduce(group_automaton(node, all_letters))
    if isinstance(node, RegexUnion):
        left = closure_g(node.left, all_letters)
        right = closure_g(node.right, all_letters)
        return GroupAutomaton(dfa=lang_op("union", left.dfa, right.dfa), reduced_form=True)
    if isinstance(node, RegexConcat):
        left = closure_g(node.left, all_letters)
        right = closure_g(node.right, all_letters)
        return benois_reduce(lang_op("concat", left.dfa, right.dfa))
    assert isinstance(node, RegexPlus)
    try:
        graph = subgroup_of_rational(group_automaton(node.inner, all_letters))
    except EmptyLanguageError:
        return GroupAutomaton(dfa=empty_language(alphabet), reduced_form=True)
    logger.debug(f"Closure of ({node.inner.to_text()})^+ is a subgroup of rank {graph.rank()}")
    return subgroup_automaton(graph, all_letters)


def rational_member(automaton: GroupAutomaton, word: GroupWord) -> bool:
    return benois_reduce(automaton).accepts(word)


def common_element(left: GroupAutomaton, right: GroupAutomaton) -> Optional[GroupWord]:
    """Shortest element of both subsets, least in alphabet order among equals"""
    left, right = benois_reduce(left), benois_reduce(right)
    letters: Set[str] = set(left.letters) | set(right.letters)
    a = over_letters(left.dfa, sorted(letters))
    b = over_letters(right.dfa, sorted(letters))
    word = lang_op("intersect", a, b).shortest_word()
    return None if word is None else GroupWord(symbols=tuple(word))


def intersect_empty_g(left: GroupAutomaton, right: GroupAutomaton) -> bool:
    return common_element(left, right) is None
