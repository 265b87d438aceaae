# src/chuk_closure_lab/semigroups/finite.py
"""
Finite semigroups given by multiplication tables.

Elements are dense indices 0..m-1; generator labels live in SemigroupMorphism,
so tables stay anonymous. Tables are validated on construction (entries in
range, identity two-sided); associativity is checked separately because it
costs O(m^3).
"""

import math
from collections import deque
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import AlphabetError, EmptyWordError
from ..terms.exponent import Exponent

if TYPE_CHECKING:
    from ..languages.automata import Dfa


class FiniteSemigroup(BaseModel):
    """Multiplication-table semigroup with an optional two-sided identity"""

    model_config = ConfigDict(frozen=True)

    table: Tuple[Tuple[int, ...], ...] = Field(..., description="table[i][j] = i*j")
    identity: Optional[int] = Field(default=None, description="Identity element, if any")
    name: str = Field(default="", description="Display name (catalog entries)")

    @model_validator(mode="after")
    def check_table(self) -> "FiniteSemigroup":
        m = len(self.table)
        if m == 0:
            raise ValueError("a semigroup needs at least one element")
        for i, row in enumerate(self.table):
            if len(row) != m:
                raise ValueError(f"row {i} has {len(row)} entries, expected {m}")
            for entry in row:
                if not 0 <= entry < m:
                    raise ValueError(f"table entry {entry} out of range 0..{m - 1}")
        if self.identity is not None:
            e = self.identity
            if not 0 <= e < m:
                raise ValueError(f"identity {e} out of range")
            for i in range(m):
                if self.table[e][i] != i or self.table[i][e] != i:
                    raise ValueError(f"element {e} is not a two-sided identity")
        return self

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def product(self, elements: Sequence[int]) -> int:
        """Left-to-right product of a nonempty sequence"""
        if not elements:
            raise EmptyWordError("product of an empty sequence")
        result = elements[0]
        for x in elements[1:]:
            result = self.table[result][x]
        return result

    def to_array(self) -> "np.ndarray":
        return np.asarray(self.table, dtype=np.int64)

    def is_idempotent(self, s: int) -> bool:
        return self.table[s][s] == s

    def idempotents(self) -> List[int]:
        diagonal = np.diagonal(self.to_array())
        return [int(i) for i in np.nonzero(diagonal == np.arange(self.size))[0]]

    def adjoin_identity(self) -> "FiniteSemigroup":
        """S with a fresh identity element appended (index m)"""
        m = self.size
        rows = [tuple(row) + (i,) for i, row in enumerate(self.table)]
        rows.append(tuple(range(m + 1)))
        return FiniteSemigroup(table=tuple(rows), identity=m, name=f"{self.name}^1")


def check_associative(table: Sequence[Sequence[int]]) -> bool:
    """True iff (i*j)*k = i*(j*k) for all i, j, k"""
    t = np.asarray(table, dtype=np.int64)
    if t.size == 0:
        return True
    left = t[t, :]  # left[i, j, k] = (i*j)*k
    right = t[:, t]  # right[i, j, k] = i*(j*k)
    return bool(np.array_equal(left, right))


def _powers(semigroup: FiniteSemigroup, s: int) -> Tuple[List[int], int, int]:
    """Powers s^1, s^2, ... up to the first repetition, with index and period"""
    seen: Dict[int, int] = {}
    powers: List[int] = []
    x, k = s, 1
    while x not in seen:
        seen[x] = k
        powers.append(x)
        x = semigroup.table[x][s]
        k += 1
    index = seen[x]
    return powers, index, k - index


def index_period(semigroup: FiniteSemigroup, s: int) -> Tuple[int, int]:
    """Smallest (i, p) with s^(i+p) = s^i"""
    _, index, period = _powers(semigroup, s)
    return index, period


def max_index_period(semigroup: FiniteSemigroup) -> Tuple[int, int]:
    """(m, p) with a^(m+p) = a^m for every element a"""
    max_index, period = 1, 1
    for s in range(semigroup.size):
        i, p = index_period(semigroup, s)
        max_index = max(max_index, i)
        period = math.lcm(period, p)
    return max_index, period


def power_int(semigroup: FiniteSemigroup, s: int, k: int) -> int:
    """s^k for k >= 1, reduced through index and period"""
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    powers, index, period = _powers(semigroup, s)
    if k >= index:
        k = index + (k - index) % period
    return powers[k - 1]


def power(semigroup: FiniteSemigroup, s: int, alpha: Exponent) -> int:
    """
    s^alpha.

    s^w is the idempotent power of s; s^(w+n) = s^(e + (n mod p)) where e is the
    least multiple of the period p with e >= index, which also covers n < 0.
    """
    if alpha.is_finite:
        return power_int(semigroup, s, alpha.value)
    powers, index, period = _powers(semigroup, s)
    e = period * math.ceil(index / period)
    k = e + alpha.value % period
    k = index + (k - index) % period
    return powers[k - 1]


def direct_product(left: FiniteSemigroup, right: FiniteSemigroup) -> FiniteSemigroup:
    """S x T with element (i, j) stored at i * |T| + j"""
    n = right.size
    size = left.size * n
    rows = []
    for x in range(size):
        i1, j1 = divmod(x, n)
        rows.append(
            tuple(
                left.table[i1][y // n] * n + right.table[j1][y % n] for y in range(size)
            )
        )
    identity = None
    if left.identity is not None and right.identity is not None:
        identity = left.identity * n + right.identity
    return FiniteSemigroup(
        table=tuple(rows), identity=identity, name=f"{left.name}x{right.name}"
    )


def transformation_semigroup(
    generators: Sequence[Sequence[int]], degree: int
) -> Tuple[FiniteSemigroup, List[int]]:
    """
    Close transformations of {0..degree-1} under composition.

    Transformations act on the right: the product f*g applies f first, then g.
    Returns the semigroup and the element index of each generator. Elements are
    numbered in discovery order (generators first, then breadth-first).
    """
    index: Dict[Tuple[int, ...], int] = {}
    elements: List[Tuple[int, ...]] = []
    generator_indices: List[int] = []
    for g in generators:
        t = tuple(int(q) for q in g)
        if len(t) != degree:
            raise ValueError(f"transformation {t} does not have degree {degree}")
        if t not in index:
            index[t] = len(elements)
            elements.append(t)
        generator_indices.append(index[t])

    gens = [elements[i] for i in dict.fromkeys(generator_indices)]
    queue = deque(range(len(elements)))
    while queue:
        f = elements[queue.popleft()]
        for g in gens:
            h = tuple(g[q] for q in f)
            if h not in index:
                index[h] = len(elements)
                elements.append(h)
                queue.append(index[h])

    t = np.asarray(elements, dtype=np.int64)
    rows = []
    for i in range(len(elements)):
        # composed[j, q] = elements[j][elements[i][q]]: apply i, then j
        composed = t[:, t[i]]
        rows.append(tuple(index[tuple(int(q) for q in row)] for row in composed))

    identity = index.get(tuple(range(degree)))
    return FiniteSemigroup(table=tuple(rows), identity=identity), generator_indices


class SemigroupMorphism(BaseModel):
    """A morphism X+ -> S given by the images of the letters"""

    model_config = ConfigDict(frozen=True)

    alphabet: Tuple[str, ...] = Field(..., description="Ordered letters of X")
    target: FiniteSemigroup = Field(..., description="Finite target semigroup")
    images: Dict[str, int] = Field(..., description="letter -> element index")

    @model_validator(mode="after")
    def check_images(self) -> "SemigroupMorphism":
        for letter in self.alphabet:
            if letter not in self.images:
                raise ValueError(f"letter {letter!r} has no image")
            if not 0 <= self.images[letter] < self.target.size:
                raise ValueError(f"image of {letter!r} out of range")
        return self

    def letter_image(self, letter: str) -> int:
        if letter not in self.images:
            raise AlphabetError(f"letter {letter!r} is not in the alphabet {self.alphabet}")
        return self.images[letter]

    def describe(self) -> str:
        mapping = ", ".join(f"{x}->{self.images[x]}" for x in self.alphabet)
        return f"{self.target.name or 'S'}[{self.target.size}] ({mapping})"


def eval_word(morphism: SemigroupMorphism, word: Sequence[str], allow_empty: bool = False) -> int:
    """Image of a word; the empty word maps to the identity only when allowed"""
    if len(word) == 0:
        if allow_empty and morphism.target.identity is not None:
            return morphism.target.identity
        raise EmptyWordError("cannot evaluate the empty word in a semigroup")
    return morphism.target.product([morphism.letter_image(x) for x in word])


def image_of_rational(morphism: SemigroupMorphism, dfa: "Dfa") -> Set[int]:
    """
    { phi(w) : w in L(A), w nonempty }.

    Reachability over pairs (state, element), seeded by single letters; no word
    is enumerated. The empty word contributes the identity when the target is a
    monoid and the automaton accepts it.
    """
    target = morphism.target
    letter_images = [morphism.letter_image(x) for x in dfa.alphabet]
    start = []
    for a, s in enumerate(letter_images):
        start.append((dfa.transitions[dfa.initial][a], s))
    seen = set(start)
    queue = deque(start)
    image: Set[int] = set()
    while queue:
        q, s = queue.popleft()
        if q in dfa.finals:
            image.add(s)
        for a, x in enumerate(letter_images):
            nxt = (dfa.transitions[q][a], target.table[s][x])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    if target.identity is not None and dfa.initial in dfa.finals:
        image.add(target.identity)
    return image
