# src/chuk_closure_lab/separation/engine.py
"""
Separation of rational languages by a class of finite semigroups.

K and L are separable by V-recognizable languages iff their closures in the
pro-V topology are disjoint. Over groups non-separability is decided exactly
through the free group, and separators come from permutation automata or
cyclic quotients. For any other class two searches run under budgets:
candidate recognizers are enumerated by size, and closure terms of both sides
are compared after normalization. Whatever a search returns is re-checked.
"""

import itertools
import logging
import math
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple, Union

from joblib import Parallel, delayed

from ..config import config
from ..errors import AlphabetError, VerificationFailedError
from ..freegroup.rational import closure_g, common_element
from ..freegroup.words import GroupWord, is_inverse
from ..languages.automata import (
    Dfa,
    canonical,
    compile_regex,
    includes,
    intersection_is_empty,
    lang_op,
    plus_language,
)
from ..languages.regex import RegexAst, regex_symbols
from ..languages.syntactic import syntactic_semigroup, transition_semigroup
from ..semigroups.finite import image_of_rational
from ..semigroups.pseudovarieties import PseudovarietyPredicate
from ..terms.evaluation import in_closure_s
from ..terms.kappa import KappaTerm, normalize_term, word
from .closure_terms import closure_expr, enumerate_closure_terms
from .verdicts import NotSeparable, Separable, SeparationBudgets, SeparationVerdict, Unknown

logger = logging.getLogger(__name__)

Language = Union[RegexAst, Dfa]
Rows = Tuple[Tuple[int, ...], ...]

# Candidates per worker in one batch of the process pool
SEARCH_BATCH = 64


def _symbols(language: Language) -> Set[str]:
    if isinstance(language, Dfa):
        return set(language.alphabet)
    return regex_symbols(language)


def _alphabet(*languages: Language) -> List[str]:
    letters: Set[str] = set()
    for language in languages:
        letters |= _symbols(language)
    inverses = sorted(s for s in letters if is_inverse(s))
    if inverses:
        raise AlphabetError(f"separation takes languages over positive letters, got {inverses}")
    return sorted(letters) or ["a"]


def _as_dfa(language: Language, alphabet: Sequence[str]) -> Dfa:
    if isinstance(language, Dfa):
        return language.with_alphabet(alphabet)
    return compile_regex(language, alphabet)


def check_separator(
    k: Language, l: Language, candidate: Dfa, predicate: PseudovarietyPredicate
) -> bool:
    """
    Whether L(candidate), read inside X+, contains K, misses L and has its
    syntactic semigroup in the class.
    """
    alphabet = _alphabet(k, l, candidate)
    k_dfa, l_dfa = _as_dfa(k, alphabet), _as_dfa(l, alphabet)
    separator = lang_op("intersect", candidate.with_alphabet(alphabet), plus_language(alphabet))
    if not includes(separator, k_dfa):
        return False
    if not intersection_is_empty(separator, l_dfa):
        return False
    semigroup, _ = syntactic_semigroup(separator)
    return predicate.contains(semigroup)


# Candidate recognizers


def _is_canonical(rows: Rows) -> bool:
    """Every state reachable from 0, numbered in BFS order"""
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        for target in rows[order[i]]:
            if target not in seen:
                seen.add(target)
                order.append(target)
        i += 1
    return order == list(range(len(rows)))


def iter_candidate_rows(q: int, letters: int, permutations: bool = False) -> Iterator[Rows]:
    """
    Transition tables of complete Dfas with q states, up to renumbering.

    With permutations, every letter acts as a permutation of the states.
    """
    if permutations:
        perms = list(itertools.permutations(range(q)))
        for choice in itertools.product(perms, repeat=letters):
            rows = tuple(tuple(choice[a][state] for a in range(letters)) for state in range(q))
            if _is_canonical(rows):
                yield rows
        return
    for flat in itertools.product(range(q), repeat=q * letters):
        rows = tuple(tuple(flat[state * letters : (state + 1) * letters]) for state in range(q))
        if _is_canonical(rows):
            yield rows


def _reached(rows: Rows, dfa: Dfa) -> Set[int]:
    """States of the candidate in which some nonempty word of L(dfa) ends"""
    start = [(rows[0][a], dfa.transitions[dfa.initial][a]) for a in range(len(dfa.alphabet))]
    seen = set(start)
    queue = list(start)
    while queue:
        q, r = queue.pop()
        for a in range(len(dfa.alphabet)):
            pair = (rows[q][a], dfa.transitions[r][a])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return {q for q, r in seen if r in dfa.finals}


def _separator_from(
    rows: Rows, alphabet: Sequence[str], k_dfa: Dfa, l_dfa: Dfa, predicate: PseudovarietyPredicate
) -> Optional[Dfa]:
    """
    A separator recognized through the candidate, when the images of K and L
    under its transition morphism are disjoint.

    The candidate itself is used when K and L end in different states;
    otherwise the separator is phi^-1(phi(K)), read on the Cayley automaton.
    """
    candidate = Dfa(
        alphabet=tuple(alphabet), num_states=len(rows), transitions=rows, finals=frozenset()
    )
    semigroup, morphism = transition_semigroup(candidate)
    if not predicate.contains(semigroup):
        return None
    k_image = image_of_rational(morphism, k_dfa)
    if k_image & image_of_rational(morphism, l_dfa):
        return None
    k_states = _reached(rows, k_dfa)
    if not k_states & _reached(rows, l_dfa):
        return candidate.model_copy(update={"finals": frozenset(k_states)}).minimize()
    # Cayley automaton of the semigroup with a fresh start state
    start = semigroup.size
    letter_images = [morphism.images[x] for x in alphabet]
    cayley = {start: tuple(letter_images)}
    for s in range(semigroup.size):
        cayley[s] = tuple(semigroup.table[s][x] for x in letter_images)
    return canonical(alphabet, start, set(k_image), cayley).minimize()


def _first_separator(
    parallel: Parallel,
    candidates: Iterator[Rows],
    alphabet: Sequence[str],
    k_dfa: Dfa,
    l_dfa: Dfa,
    predicate: PseudovarietyPredicate,
    width: int,
) -> Optional[Dfa]:
    # joblib returns results in input order, so the first hit is schedule independent
    while batch := list(itertools.islice(candidates, width)):
        results = parallel(
            delayed(_separator_from)(rows, alphabet, k_dfa, l_dfa, predicate) for rows in batch
        )
        found = next((dfa for dfa in results if dfa is not None), None)
        if found is not None:
            return found
    return None


def _search(
    alphabet: Sequence[str],
    k_dfa: Dfa,
    l_dfa: Dfa,
    predicate: PseudovarietyPredicate,
    max_states: int,
    permutations: bool = False,
    workers: Optional[int] = None,
) -> Optional[Tuple[int, Dfa]]:
    """
    The first separator in (size, table) order, and the size it was found at.

    With more than one worker, candidates are checked in batches by a joblib
    process pool; the answer is the same as the sequential one.
    """
    workers = workers or config.workers
    with Parallel(n_jobs=workers) as parallel:
        for q in range(1, max_states + 1):
            candidates = iter_candidate_rows(q, len(alphabet), permutations)
            if workers > 1:
                width = workers * SEARCH_BATCH
                found = _first_separator(
                    parallel, candidates, alphabet, k_dfa, l_dfa, predicate, width
                )
            else:
                attempts = (
                    _separator_from(rows, alphabet, k_dfa, l_dfa, predicate) for rows in candidates
                )
                found = next((dfa for dfa in attempts if dfa is not None), None)
            logger.debug(f"Separator search at {q} states: {'found' if found else 'none'}")
            if found is not None:
                return q, found
    return None


def iter_cyclic_rows(n: int, letters: int) -> Iterator[Rows]:
    """
    Regular actions of Z/n on itself, one for each assignment of shifts
    x -> c_x that generates Z/n. State s goes to s + c_x mod n.
    """
    for shifts in itertools.product(range(n), repeat=letters):
        if math.gcd(n, *shifts) == 1:
            yield tuple(tuple((s + c) % n for c in shifts) for s in range(n))


def _cyclic_separator(
    alphabet: Sequence[str], k_dfa: Dfa, l_dfa: Dfa, max_order: int
) -> Optional[Tuple[int, Dfa]]:
    """
    The first cyclic quotient Z/n, 2 <= n <= max_order, mapping K and L to
    disjoint sets, with the preimage of the image of K.

    States of the regular action are group elements, so the image of a
    language is the set of states its nonempty words end in.
    """
    for n in range(2, max_order + 1):
        for rows in iter_cyclic_rows(n, len(alphabet)):
            k_states = _reached(rows, k_dfa)
            if k_states & _reached(rows, l_dfa):
                continue
            preimage = Dfa(
                alphabet=tuple(alphabet),
                num_states=n,
                transitions=rows,
                finals=frozenset(k_states),
            )
            return n, preimage.minimize()
    return None


def _verified(
    k: Language, l: Language, dfa: Dfa, predicate: PseudovarietyPredicate, separator: str
) -> Separable:
    if not check_separator(k, l, dfa, predicate):
        raise VerificationFailedError(f"separator ({separator}) failed its re-check")
    return Separable(pseudovariety=predicate.label(), recognizer=dfa, separator=separator)


# Separation over groups


def separate_by_g(
    k: RegexAst, l: RegexAst, max_states: Optional[int] = None, workers: Optional[int] = None
) -> SeparationVerdict:
    """
    Separation by group languages.

    Non-separability is decided exactly on closures in the free group. When the
    closures are disjoint, a group recognizer is searched for among permutation
    automata and then cyclic quotients; the verdict is Unknown if none is found.
    """
    group = PseudovarietyPredicate(name="G")
    alphabet = _alphabet(k, l)
    k_dfa, l_dfa = _as_dfa(k, alphabet), _as_dfa(l, alphabet)

    shared = lang_op("intersect", k_dfa, l_dfa).shortest_word()
    if shared is not None:
        return NotSeparable(pseudovariety="G", witness=GroupWord(symbols=tuple(shared)))

    witness = common_element(closure_g(k, alphabet), closure_g(l, alphabet))
    if witness is not None:
        logger.debug(f"Closures over G share {witness}")
        return NotSeparable(pseudovariety="G", witness=witness)

    for candidate, description in (
        (k_dfa, "K itself"),
        (lang_op("complementWithinXPlus", l_dfa), "complement of L in X+"),
    ):
        if check_separator(k_dfa, l_dfa, candidate, group):
            return _verified(k_dfa, l_dfa, candidate.minimize(), group, description)

    bound = max(config.group_search_states, max_states or 0)
    found = _search(alphabet, k_dfa, l_dfa, group, bound, permutations=True, workers=workers)
    if found is not None:
        q, dfa = found
        description = f"preimage of K under a {q}-state permutation automaton"
        return _verified(k, l, dfa, group, description)

    cyclic = _cyclic_separator(alphabet, k_dfa, l_dfa, config.group_cyclic_order)
    if cyclic is not None:
        n, dfa = cyclic
        return _verified(k, l, dfa, group, f"preimage of K under the cyclic group of order {n}")

    logger.warning(
        f"Closures are disjoint but no group recognizer was found within {bound} states "
        f"or cyclic order {config.group_cyclic_order}"
    )
    return Unknown(
        pseudovariety="G",
        budgets=SeparationBudgets(max_states=bound, max_terms=config.max_terms),
    )


# Separation over an arbitrary class


def _normal_form_match(
    k: RegexAst,
    l: RegexAst,
    k_dfa: Dfa,
    l_dfa: Dfa,
    predicate: PseudovarietyPredicate,
    max_terms: int,
) -> Optional[Tuple[KappaTerm, KappaTerm]]:
    """Closure terms of K and L with the same normal form over the class"""
    modulus = predicate.modulus
    k_forms: Dict[str, KappaTerm] = {}
    for term in enumerate_closure_terms(closure_expr(k), max_terms, check=False):
        k_forms.setdefault(normalize_term(term, modulus).to_text(), term)
    for term in enumerate_closure_terms(closure_expr(l), max_terms, check=False):
        match = k_forms.get(normalize_term(term, modulus).to_text())
        if match is None:
            continue
        if in_closure_s(match, k_dfa) and in_closure_s(term, l_dfa):
            return match, term
        logger.debug(f"Discarded normal-form pair {match} / {term}")
    return None


def separate_by_v(
    k: RegexAst,
    l: RegexAst,
    predicate: PseudovarietyPredicate,
    budgets: Optional[SeparationBudgets] = None,
    workers: Optional[int] = None,
) -> SeparationVerdict:
    """
    Separation by V-recognizable languages within budgets.

    Groups are delegated to separate_by_g. Otherwise: a common word, the two
    direct candidates, the recognizer search, the normal-form match of closure terms, and
    Unknown when all of them come back empty.
    """
    budgets = budgets or config.budgets()
    if predicate.name == "G":
        verdict = separate_by_g(k, l, budgets.max_states, workers)
        if isinstance(verdict, Unknown):
            return verdict
        return verdict.model_copy(update={"budgets": budgets})

    label = predicate.label()
    alphabet = _alphabet(k, l)
    k_dfa, l_dfa = _as_dfa(k, alphabet), _as_dfa(l, alphabet)

    shared = lang_op("intersect", k_dfa, l_dfa).shortest_word()
    if shared is not None:
        return NotSeparable(pseudovariety=label, witness=word("".join(shared)), budgets=budgets)

    direct = [
        (k_dfa, "K itself"),
        (lang_op("complementWithinXPlus", l_dfa), "complement of L in X+"),
    ]
    for candidate, description in direct:
        if check_separator(k_dfa, l_dfa, candidate, predicate):
            logger.debug(f"Direct separator over {label}: {description}")
            verdict = _verified(k_dfa, l_dfa, candidate.minimize(), predicate, description)
            return verdict.model_copy(update={"budgets": budgets})

    found = _search(alphabet, k_dfa, l_dfa, predicate, budgets.max_states, workers=workers)
    if found is not None:
        q, dfa = found
        description = f"preimage of K under a {q}-state automaton"
        verdict = _verified(k_dfa, l_dfa, dfa, predicate, description)
        return verdict.model_copy(update={"budgets": budgets})

    pair = _normal_form_match(k, l, k_dfa, l_dfa, predicate, budgets.max_terms)
    if pair is not None:
        x, y = pair
        logger.debug(f"{x} and {y} agree over {label}")
        return NotSeparable(pseudovariety=label, witness=x, partner=y, budgets=budgets)

    logger.warning(f"Separation over {label} is undecided within {budgets.to_json()}")
    return Unknown(pseudovariety=label, budgets=budgets)
