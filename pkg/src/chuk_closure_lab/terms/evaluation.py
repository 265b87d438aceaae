# src/chuk_closure_lab/terms/evaluation.py
"""
Interpretations of terms.

Terms are evaluated in finite semigroups (omega powers through index and
period), expanded into their approximating words, and mapped into the free
group where x^w is the identity and x^(w-1) the inverse of x.
"""

import logging
from typing import Iterable, List, Mapping, Optional

from ..config import config
from ..errors import BudgetExceededError, EmptyTermError
from ..freegroup.words import GroupWord
from ..languages.automata import Dfa
from ..languages.syntactic import syntactic_image
from ..semigroups.catalog import catalog_morphisms, default_catalog
from ..semigroups.finite import FiniteSemigroup, SemigroupMorphism, power, power_int
from .kappa import KappaTerm, Word

logger = logging.getLogger(__name__)

MIN_EXPANSION_N = 4


def _check_n(n: int) -> None:
    if n < MIN_EXPANSION_N:
        raise ValueError(f"expansion index must be >= {MIN_EXPANSION_N}, got {n}")


def expansion_length(term: KappaTerm, n: int) -> int:
    """|epsilon_n(t)|, computed without building the word"""
    _check_n(n)
    total = 0
    for f in term.factors:
        if isinstance(f, Word):
            total += len(f.letters)
        else:
            total += f.exponent.approximant(n) * expansion_length(f.base, n)
    return total


def _expand(term: KappaTerm, n: int) -> str:
    parts: List[str] = []
    for f in term.factors:
        if isinstance(f, Word):
            parts.append(f.letters)
        else:
            parts.append(_expand(f.base, n) * f.exponent.approximant(n))
    return "".join(parts)


def epsilon_expand(term: KappaTerm, n: int, max_length: Optional[int] = None) -> str:
    """The word epsilon_n(t): every omega + k becomes n! + k"""
    limit = max_length if max_length is not None else config.max_expansion_length
    length = expansion_length(term, n)
    if length > limit:
        raise BudgetExceededError(
            f"epsilon_{n}({term.to_text()}) has {length} letters, above the limit {limit}"
        )
    return _expand(term, n)


def variables_of(term: KappaTerm) -> List[str]:
    return sorted(term.letters())


def eval_term_in(semigroup: FiniteSemigroup, images: Mapping[str, int], term: KappaTerm) -> int:
    """Value of a nonempty term under an assignment of elements to letters"""
    if term.is_empty:
        raise EmptyTermError("cannot evaluate the empty term")
    values: List[int] = []
    for f in term.factors:
        if isinstance(f, Word):
            values.extend(images[x] for x in f.letters)
        else:
            base = eval_term_in(semigroup, images, f.base)
            values.append(power(semigroup, base, f.exponent))
    return semigroup.product(values)


def eval_term(morphism: SemigroupMorphism, term: KappaTerm) -> int:
    """The image of a term under the continuous extension of a morphism"""
    for x in term.letters():
        morphism.letter_image(x)
    return eval_term_in(morphism.target, morphism.images, term)


def eval_approximant(morphism: SemigroupMorphism, term: KappaTerm, n: int) -> int:
    """Image of epsilon_n(t), computed with integer powers"""
    _check_n(n)
    if term.is_empty:
        raise EmptyTermError("cannot evaluate the empty term")
    semigroup = morphism.target
    values: List[int] = []
    for f in term.factors:
        if isinstance(f, Word):
            values.extend(morphism.letter_image(x) for x in f.letters)
        else:
            base = eval_approximant(morphism, f.base, n)
            values.append(power_int(semigroup, base, f.exponent.approximant(n)))
    return semigroup.product(values)


def to_free_group_word(term: KappaTerm) -> GroupWord:
    """Image in the free group: x^(w+n) goes to x^n"""
    result = GroupWord()
    for f in term.factors:
        if isinstance(f, Word):
            result = result * GroupWord(symbols=tuple(f.letters))
        else:
            result = result * to_free_group_word(f.base).power(f.exponent.value)
    return result


def equal_over_g(left: KappaTerm, right: KappaTerm) -> bool:
    """Equality over all finite groups, decided in the free group"""
    return to_free_group_word(left) == to_free_group_word(right)


def refute_over_s(
    left: KappaTerm,
    right: KappaTerm,
    catalog: Optional[Iterable[SemigroupMorphism]] = None,
    budget: Optional[int] = None,
) -> Optional[SemigroupMorphism]:
    """
    A morphism separating the two terms, or None once the budget is spent.

    The default catalog assigns elements of every default catalog semigroup to
    the letters of both terms.
    """
    budget = budget if budget is not None else config.refute_budget
    if catalog is None:
        alphabet = sorted(left.letters() | right.letters())
        catalog = catalog_morphisms(alphabet, default_catalog())
    for examined, morphism in enumerate(catalog):
        if examined >= budget:
            logger.warning(f"Refutation budget of {budget} morphisms exhausted")
            return None
        if eval_term(morphism, left) != eval_term(morphism, right):
            logger.debug(f"{left} != {right} under {morphism.describe()}")
            return morphism
    return None


def in_closure_s(term: KappaTerm, dfa: Dfa) -> bool:
    """Whether the term lies in the closure of L(A) in the free profinite semigroup"""
    if not term.letters() <= set(dfa.alphabet):
        return False
    morphism, image = syntactic_image(dfa)
    return eval_term(morphism, term) in image
