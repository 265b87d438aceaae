# src/chuk_closure_lab/separation/closure_terms.py
"""
Closure expressions and the kappa-terms they enumerate.

The closure of a rational language is built recursively: finite sets are
closed, cl(K + L) = cl(K) + cl(L), cl(KL) = cl(K) cl(L), and cl(L+) is the
closed subalgebra generated by cl(L) under products and the (w-1)-power.
Enumerating these constructions yields kappa-terms that all lie in the
closure; ClosureWords stands for a language taken as raw words only, with no
closure of its own.
"""

import heapq
import itertools
import logging
from typing import Dict, Iterator, List, Optional, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..config import config
from ..errors import VerificationFailedError
from ..languages.automata import Dfa, compile_regex, iter_words
from ..languages.regex import (
    RegexAst,
    RegexConcat,
    RegexPlus,
    RegexUnion,
    regex_from_words,
    regex_symbols,
)
from ..terms.evaluation import in_closure_s
from ..terms.kappa import KappaTerm, concat, omega_power, word

logger = logging.getLogger(__name__)


class ClosureBase(BaseModel):
    """A finite set of words, closed as it stands"""

    model_config = ConfigDict(frozen=True)

    words: Tuple[str, ...] = Field(default=())

    def to_regex(self) -> RegexAst:
        return regex_from_words(self.words)


class ClosureWords(BaseModel):
    """The words of a language, without their limits"""

    model_config = ConfigDict(frozen=True)

    regex: RegexAst

    def to_regex(self) -> RegexAst:
        return self.regex


class ClosureUnion(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: "ClosureExpr"
    right: "ClosureExpr"

    def to_regex(self) -> RegexAst:
        return RegexUnion(left=self.left.to_regex(), right=self.right.to_regex())


class ClosureProduct(BaseModel):
    model_config = ConfigDict(frozen=True)

    left: "ClosureExpr"
    right: "ClosureExpr"

    def to_regex(self) -> RegexAst:
        return RegexConcat(left=self.left.to_regex(), right=self.right.to_regex())


class ClosureSigmaPlus(BaseModel):
    """The closed subalgebra generated by the closure of the inner expression"""

    model_config = ConfigDict(frozen=True)

    inner: "ClosureExpr"

    def to_regex(self) -> RegexAst:
        return RegexPlus(inner=self.inner.to_regex())


ClosureExpr = Union[ClosureBase, ClosureWords, ClosureUnion, ClosureProduct, ClosureSigmaPlus]

ClosureUnion.model_rebuild()
ClosureProduct.model_rebuild()
ClosureSigmaPlus.model_rebuild()


def _is_finite(node: RegexAst) -> bool:
    if isinstance(node, RegexPlus):
        return False
    if isinstance(node, (RegexUnion, RegexConcat)):
        return _is_finite(node.left) and _is_finite(node.right)
    return True


def closure_expr(node: RegexAst) -> ClosureExpr:
    """The closure expression mirroring a regular expression"""
    if _is_finite(node):
        if not regex_symbols(node):
            return ClosureBase()
        return ClosureBase(words=tuple(iter_words(compile_regex(node))))
    if isinstance(node, RegexUnion):
        return ClosureUnion(left=closure_expr(node.left), right=closure_expr(node.right))
    if isinstance(node, RegexConcat):
        return ClosureProduct(left=closure_expr(node.left), right=closure_expr(node.right))
    assert isinstance(node, RegexPlus)
    return ClosureSigmaPlus(inner=closure_expr(node.inner))


def raw_plus(node: RegexAst) -> ClosureSigmaPlus:
    """SigmaPlus over the raw words of a language"""
    return ClosureSigmaPlus(inner=ClosureWords(regex=node))


class _Cache:
    """Random access into a stream, pulled on demand"""

    def __init__(self, stream: Iterator[KappaTerm]):
        self.stream = stream
        self.items: List[KappaTerm] = []
        self.exhausted = False

    def get(self, i: int) -> Optional[KappaTerm]:
        while len(self.items) <= i and not self.exhausted:
            item = next(self.stream, None)
            if item is None:
                self.exhausted = True
            else:
                self.items.append(item)
        return self.items[i] if i < len(self.items) else None


def _key(term: KappaTerm) -> Tuple[int, str]:
    return term.node_count(), term.to_text()


def _union(left: Iterator[KappaTerm], right: Iterator[KappaTerm]) -> Iterator[KappaTerm]:
    streams = [left, right]
    while streams:
        for stream in list(streams):
            item = next(stream, None)
            if item is None:
                streams.remove(stream)
            else:
                yield item


def _product(left: Iterator[KappaTerm], right: Iterator[KappaTerm]) -> Iterator[KappaTerm]:
    """Pairs by diagonals i + j = d"""
    lefts, rights = _Cache(left), _Cache(right)
    for d in itertools.count():
        for i in range(d + 1):
            x, y = lefts.get(i), rights.get(d - i)
            if x is not None and y is not None:
                yield concat(x, y)
        if lefts.exhausted and rights.exhausted:
            if d >= len(lefts.items) + len(rights.items):
                return


def _round(fresh: List[KappaTerm], known: List[KappaTerm]) -> Iterator[KappaTerm]:
    """Powers of the fresh terms and products with known ones, smallest first"""
    heap: List[Tuple[int, str, int, KappaTerm]] = []
    streams: List[Iterator[KappaTerm]] = []

    def push(stream: Iterator[KappaTerm]) -> None:
        item = next(stream, None)
        if item is not None:
            size, text = _key(item)
            heapq.heappush(heap, (size, text, len(streams), item))
            streams.append(stream)

    def refill(index: int) -> None:
        item = next(streams[index], None)
        if item is not None:
            size, text = _key(item)
            heapq.heappush(heap, (size, text, index, item))

    for x in fresh:
        push(iter((omega_power(x), omega_power(x, -1))))
        push(concat(x, y) for y in known)
        push(concat(y, x) for y in known)
    while heap:
        _, _, index, item = heapq.heappop(heap)
        yield item
        refill(index)


def _sigma_plus(inner: Iterator[KappaTerm]) -> Iterator[KappaTerm]:
    """Rounds: one new generator, then everything one construction deeper"""
    known: List[KappaTerm] = []
    fresh: List[KappaTerm] = []
    seen: Set[str] = set()
    inner_done = False
    while True:
        if not inner_done:
            generator = next(inner, None)
            if generator is None:
                inner_done = True
            elif generator.to_text() not in seen:
                seen.add(generator.to_text())
                known.append(generator)
                fresh.append(generator)
                yield generator
        produced: List[KappaTerm] = []
        for term in _round(fresh, list(known)):
            text = term.to_text()
            if text not in seen:
                seen.add(text)
                produced.append(term)
                yield term
        if not produced and inner_done:
            return
        known.extend(produced)
        fresh = produced


def _stream(expr: ClosureExpr) -> Iterator[KappaTerm]:
    if isinstance(expr, ClosureBase):
        return (word(w) for w in expr.words)
    if isinstance(expr, ClosureWords):
        if not regex_symbols(expr.regex):
            return iter(())
        return (word(w) for w in iter_words(compile_regex(expr.regex)))
    if isinstance(expr, ClosureUnion):
        return _union(_stream(expr.left), _stream(expr.right))
    if isinstance(expr, ClosureProduct):
        return _product(_stream(expr.left), _stream(expr.right))
    return _sigma_plus(_stream(expr.inner))


def underlying_language(expr: ClosureExpr, alphabet: Optional[List[str]] = None) -> Dfa:
    """The rational language of the expression, closures forgotten"""
    regex = expr.to_regex()
    letters = sorted(regex_symbols(regex) | set(alphabet or []))
    return compile_regex(regex, letters)


def enumerate_closure_terms(
    expr: ClosureExpr, budget: Optional[int] = None, check: bool = True
) -> Iterator[KappaTerm]:
    """
    Distinct kappa-terms of the closure of the expression's language.

    With check, every term is re-tested against the syntactic image of the
    underlying language before it is yielded.
    """
    budget = budget if budget is not None else config.max_terms
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    dfa = underlying_language(expr) if check and regex_symbols(expr.to_regex()) else None
    emitted: Dict[str, KappaTerm] = {}
    for term in _stream(expr):
        if len(emitted) >= budget:
            break
        text = term.to_text()
        if text in emitted:
            continue
        if dfa is not None:
            if not in_closure_s(term, dfa):
                raise VerificationFailedError(f"{text} escaped the closure")
        emitted[text] = term
        yield term
    logger.debug(f"Enumerated {len(emitted)} closure terms (budget {budget})")
