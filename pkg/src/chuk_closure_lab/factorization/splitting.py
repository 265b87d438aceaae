# src/chuk_closure_lab/factorization/splitting.py
"""
Filtered factorization data and the terms it converges to.

A sequence of splits of epsilon_n(t), sampled at increasing n, is filtered when
the simplified histories agree and every exponent coordinate is either constant
or strictly increasing. From such data the split is lifted to the term itself:
blocks cut by the split keep their total exponent, constant gaps of copies stay
finite and growing gaps become omega powers.
"""

import logging
from typing import Any, Dict, List, Literal, NamedTuple, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..errors import UnsupportedClassificationError, VerificationFailedError
from ..languages.automata import Dfa
from ..semigroups.finite import SemigroupMorphism, image_of_rational
from ..terms.evaluation import eval_term, in_closure_s
from ..terms.exponent import Exponent
from ..terms.kappa import EMPTY, KappaTerm, Power, RawTerm, concat, power, simplify_over_s
from .histories import History, history_at

logger = logging.getLogger(__name__)


class Coordinate(BaseModel):
    """Classification of one exponent coordinate across the samples"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["constant", "unbounded"]
    values: Tuple[int, ...] = Field(..., description="The coordinate in each sample")

    @property
    def value(self) -> int:
        """The constant, or the latest value of an unbounded coordinate"""
        return self.values[-1]


class Sample(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    position: int
    history: History


class FilteredData(BaseModel):
    """Splits of epsilon_n(t) with a constant simplified history"""

    model_config = ConfigDict(frozen=True)

    term: KappaTerm
    samples: Tuple[Sample, ...]
    simplified: Tuple[Tuple[Any, ...], ...] = Field(
        ..., description="Common simplified history, terminal pair included"
    )
    coordinates: Tuple[Coordinate, ...] = Field(
        default=(), description="k, l of each rule 2 letter, in history order"
    )

    @property
    def ns(self) -> Tuple[int, ...]:
        return tuple(s.n for s in self.samples)


class Inconclusive(BaseModel):
    """The samples certify nothing"""

    model_config = ConfigDict(frozen=True)

    reason: str


def _classify(values: Sequence[int]) -> Optional[str]:
    if all(v == values[0] for v in values):
        return "constant"
    if all(a < b for a, b in zip(values, values[1:])):
        return "unbounded"
    return None


def filter_samples(
    term: KappaTerm, samples: Sequence[Tuple[int, int]]
) -> Union[FilteredData, Inconclusive]:
    """Classify splits given as (n, position) pairs"""
    if len(samples) < 3:
        raise ValueError(f"filtering needs at least 3 samples, got {len(samples)}")
    ns = [n for n, _ in samples]
    if any(a >= b for a, b in zip(ns, ns[1:])):
        raise ValueError(f"sample indices must strictly increase, got {ns}")

    taken = tuple(
        Sample(n=n, position=p, history=history_at(term, n, p)) for n, p in samples
    )
    simplified = taken[0].history.simplified
    for s in taken[1:]:
        if s.history.simplified != simplified:
            return Inconclusive(reason=f"simplified histories differ at n={s.n}")

    vectors = [s.history.exponent_vector for s in taken]
    coordinates = []
    for i in range(len(vectors[0])):
        values = tuple(v[i] for v in vectors)
        kind = _classify(values)
        if kind is None:
            return Inconclusive(reason=f"coordinate {i} is neither constant nor increasing")
        coordinates.append(Coordinate(kind=kind, values=values))  # type: ignore[arg-type]

    logger.debug(f"Filtered {len(taken)} samples of {term}: {simplified}")
    return FilteredData(
        term=term, samples=taken, simplified=simplified, coordinates=tuple(coordinates)
    )


class _Step(NamedTuple):
    rule: int
    j: int
    k: Tuple[int, ...]


# a cut: the remaining history steps and the terminal pair
_Cut = Tuple[Tuple[_Step, ...], Tuple[str, str]]

_CUT = object()


def _cut_of(fd: FilteredData) -> _Cut:
    steps = []
    for i, letter in enumerate(fd.samples[0].history.letters):
        if letter.rule == 1:
            steps.append(_Step(1, letter.j, ()))
        else:
            ks = tuple(s.history.letters[i].k for s in fd.samples)
            steps.append(_Step(2, letter.j, ks))  # type: ignore[arg-type]
    return tuple(steps), fd.samples[0].history.terminal


def _rest(cut: _Cut) -> _Cut:
    return cut[0][1:], cut[1]


def _interleave(pieces: List[KappaTerm]) -> List[Any]:
    tokens: List[Any] = [pieces[0]]
    for piece in pieces[1:]:
        tokens.extend((_CUT, piece))
    return tokens


def _gap(base: KappaTerm, values: Tuple[int, ...]) -> Tuple[str, int]:
    kind = _classify(values)
    if kind is None:
        raise UnsupportedClassificationError(
            f"copies of {base} between cuts vary without growing: {values}"
        )
    return kind, values[-1]


def _block_tokens(block: Power, cuts: List[_Cut], ns: Sequence[int]) -> List[Any]:
    """A power cut inside: copies grouped by cut, gaps resolved around them"""
    gammas = tuple(block.exponent.approximant(n) for n in ns)
    copies: List[Tuple[Tuple[int, ...], List[_Cut]]] = []
    for cut in cuts:
        k = cut[0][0].k
        if copies and copies[-1][0] == k:
            copies[-1][1].append(cut)
        else:
            copies.append((k, [cut]))
    for (left, _), (right, _) in zip(copies, copies[1:]):
        if any(a >= b for a, b in zip(left, right)):
            raise UnsupportedClassificationError("cuts inside a block are out of order")

    gaps = [_gap(block.base, copies[0][0])]
    for (left, _), (right, _) in zip(copies, copies[1:]):
        gaps.append(_gap(block.base, tuple(b - a - 1 for a, b in zip(left, right))))
    last = copies[-1][0]
    gaps.append(_gap(block.base, tuple(g - k - 1 for g, k in zip(gammas, last))))

    unbounded = [i for i, (kind, _) in enumerate(gaps) if kind == "unbounded"]
    if not unbounded:
        raise UnsupportedClassificationError(
            f"every gap in {block.to_text()} is constant, so the block cannot grow"
        )
    first = unbounded[0]
    fixed = len(copies) + sum(v for i, (_, v) in enumerate(gaps) if i != first)

    def gap_term(i: int) -> KappaTerm:
        kind, v = gaps[i]
        if i == first:
            return power(block.base, Exponent.omega_plus(block.exponent.value - fixed))
        if kind == "unbounded":
            return power(block.base, Exponent.omega_plus(v))
        return power(block.base, Exponent.finite(v)) if v > 0 else EMPTY

    tokens: List[Any] = []
    for i, (_, group) in enumerate(copies):
        tokens.append(gap_term(i))
        tokens.extend(_interleave(_split(block.base, [_rest(c) for c in group], ns)))
    tokens.append(gap_term(len(copies)))
    return tokens


def _split(term: KappaTerm, cuts: List[_Cut], ns: Sequence[int]) -> List[KappaTerm]:
    """len(cuts) + 1 pieces, possibly empty, whose product is the term"""
    if not cuts:
        return [term]
    if term.rank == 0:
        w = term.word()
        pieces, start = [], 0
        for steps, (x, _) in cuts:
            if steps:
                raise UnsupportedClassificationError("history is longer than the rank allows")
            pieces.append(concat(w[start : len(x)]))
            start = len(x)
        pieces.append(concat(w[start:]))
        return pieces

    layout = term.layout()
    by_item: Dict[Tuple[int, int], List[_Cut]] = {}
    order = []
    for cut in cuts:
        step = cut[0][0]
        by_item.setdefault((step.rule, step.j), []).append(cut)
        order.append(2 * step.j if step.rule == 1 else 2 * step.j - 1)
    if order != sorted(order):
        raise UnsupportedClassificationError("cuts are not in increasing position")

    tokens: List[Any] = []
    for j, filler in enumerate(layout.fillers):
        inner = by_item.get((1, j))
        if inner:
            tokens.extend(_interleave(_split(filler, [_rest(c) for c in inner], ns)))
        else:
            tokens.append(filler)
        if j < len(layout.blocks):
            block = layout.blocks[j]
            inner = by_item.get((2, j + 1))
            if inner:
                tokens.extend(_block_tokens(block, inner, ns))
            else:
                tokens.append(KappaTerm(factors=(block,)))

    pieces: List[List[RawTerm]] = [[]]
    for token in tokens:
        if token is _CUT:
            pieces.append([])
        else:
            pieces[-1].append(token)
    return [concat(*parts) for parts in pieces]


def _tidy(term: KappaTerm, target: Optional[Tuple[int, int]] = None) -> KappaTerm:
    """Simplified form when it keeps (rank, nu)"""
    if term.is_empty:
        return term
    wanted = target if target is not None else term.rank_nu()
    simpler = simplify_over_s(term)
    return simpler if simpler.rank_nu() == wanted else term


def limit_terms(fd: FilteredData) -> Tuple[KappaTerm, KappaTerm]:
    """(x, y) with x y equal to t; x is empty when the split is at position 0"""
    x, y = _split(fd.term, [_cut_of(fd)], fd.ns)
    return _tidy(x), _tidy(y)


def balance_splitting(
    term: KappaTerm,
    fds: Sequence[FilteredData],
    recognizers: Sequence[SemigroupMorphism],
    languages: Sequence[Dfa] = (),
    factors: Optional[Sequence[KappaTerm]] = None,
) -> List[KappaTerm]:
    """
    Lift a splitting of t, one FilteredData per boundary, to terms z_1 .. z_m.

    The product of the z_i must agree with t on every recognizer. When languages
    are given, each z_i must lie in the closure of L_i and map into phi(L_i);
    when the original factors are given, each z_i keeps their (rank, nu).
    """
    if not fds:
        raise ValueError("balancing needs at least one boundary")
    ns = fds[0].ns
    for fd in fds:
        if fd.term != term:
            raise ValueError("filtered data was taken on a different term")
        if fd.ns != ns:
            raise ValueError(f"boundaries sampled at different indices: {fd.ns} vs {ns}")
    for i in range(len(ns)):
        positions = [fd.samples[i].position for fd in fds]
        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise ValueError(f"boundaries at n={ns[i]} are not increasing: {positions}")
    m = len(fds) + 1
    if languages and len(languages) != m:
        raise ValueError(f"expected {m} languages, got {len(languages)}")
    if factors is not None and len(factors) != m:
        raise ValueError(f"expected {m} factors, got {len(factors)}")

    pieces = _split(term, [_cut_of(fd) for fd in fds], ns)
    if any(p.is_empty for p in pieces):
        raise UnsupportedClassificationError("a boundary at position 0 leaves an empty factor")

    z: List[KappaTerm] = []
    for i, piece in enumerate(pieces):
        target = factors[i].rank_nu() if factors is not None else None
        if target is not None and piece.rank_nu() != target:
            raise VerificationFailedError(
                f"factor {i + 1} has (rank, nu) {piece.rank_nu()}, expected {target}"
            )
        z.append(_tidy(piece, target))

    product = concat(*z)
    for phi in recognizers:
        if eval_term(phi, product) != eval_term(phi, term):
            raise VerificationFailedError(f"{phi.describe()} separates the product from {term}")
        for i, language in enumerate(languages):
            if eval_term(phi, z[i]) not in image_of_rational(phi, language):
                raise VerificationFailedError(
                    f"{phi.describe()} maps factor {i + 1} outside the image of its language"
                )
    for i, language in enumerate(languages):
        if not in_closure_s(z[i], language):
            raise VerificationFailedError(
                f"factor {i + 1} = {z[i]} is not in the closure of L_{i + 1}"
            )

    logger.debug(f"Balanced {term} into {' | '.join(str(p) for p in z)}")
    return z
