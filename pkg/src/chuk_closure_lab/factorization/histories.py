# src/chuk_closure_lab/factorization/histories.py
"""
Factorizations of expanded terms and their histories.

For t = t0 s1^a1 t1 ... sm^am tm of positive rank, a split x.y of epsilon_n(t)
(y nonempty) falls either inside a filler t_j, recorded by the letter (1, j), or
inside copy k of some block s_j^E, with l = E - k - 1 copies after it, recorded
by (2, j, k, l). The history continues in t_j or s_j respectively and ends with
the terminal pair (x', y') of a rank-0 word. Positions are tracked through
expansion lengths, so the expanded word itself is never built.
"""

import logging
from typing import Any, Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import InvalidHistoryError
from ..terms.evaluation import expansion_length
from ..terms.kappa import KappaTerm

logger = logging.getLogger(__name__)


class RuleLetter(BaseModel):
    """(1, j) or (2, j, k, l)"""

    model_config = ConfigDict(frozen=True)

    rule: int = Field(..., ge=1, le=2)
    j: int = Field(..., ge=0)
    k: Optional[int] = Field(default=None, ge=0)
    l: Optional[int] = Field(default=None, ge=0)  # noqa: E741

    @model_validator(mode="after")
    def check_shape(self) -> "RuleLetter":
        if self.rule == 1 and (self.k is not None or self.l is not None):
            raise ValueError("rule 1 letters carry no exponents")
        if self.rule == 2 and (self.k is None or self.l is None or self.j < 1):
            raise ValueError("rule 2 letters need j >= 1, k and l")
        return self

    @property
    def simplified(self) -> Tuple[int, int]:
        return self.rule, self.j

    def to_json(self) -> List[int]:
        if self.rule == 1:
            return [1, self.j]
        assert self.k is not None and self.l is not None
        return [2, self.j, self.k, self.l]


class History(BaseModel):
    """Rule letters followed by the terminal pair (x, y)"""

    model_config = ConfigDict(frozen=True)

    letters: Tuple[RuleLetter, ...] = Field(default=())
    terminal: Tuple[str, str] = Field(..., description="Split (x, y) of a rank-0 word")

    @property
    def simplified(self) -> Tuple[Tuple[Any, ...], ...]:
        """Letters (2, j, k, l) replaced by (2, j); the terminal pair is kept"""
        return tuple(letter.simplified for letter in self.letters) + (self.terminal,)

    @property
    def exponent_vector(self) -> Tuple[int, ...]:
        """(k, l) of every rule 2 letter, flattened"""
        vector: List[int] = []
        for letter in self.letters:
            if letter.rule == 2:
                assert letter.k is not None and letter.l is not None
                vector.extend((letter.k, letter.l))
        return tuple(vector)

    def __len__(self) -> int:
        return len(self.letters) + 1

    def to_json(self) -> List[List[Any]]:
        return [letter.to_json() for letter in self.letters] + [list(self.terminal)]

    @classmethod
    def from_json(cls, data: List[List[Any]]) -> "History":
        if not data:
            raise InvalidHistoryError("a history ends with its terminal pair")
        letters = []
        for item in data[:-1]:
            if item[:1] == [1] and len(item) == 2:
                letters.append(RuleLetter(rule=1, j=item[1]))
            elif item[:1] == [2] and len(item) == 4:
                letters.append(RuleLetter(rule=2, j=item[1], k=item[2], l=item[3]))
            else:
                raise InvalidHistoryError(f"malformed history letter {item!r}")
        x, y = data[-1]
        return cls(letters=tuple(letters), terminal=(str(x), str(y)))


def _lengths(term: KappaTerm, n: int) -> Dict[str, Any]:
    layout = term.layout()
    return {
        "layout": layout,
        "fillers": [expansion_length(f, n) for f in layout.fillers],
        "bases": [expansion_length(b.base, n) for b in layout.blocks],
        "exponents": [b.exponent.approximant(n) for b in layout.blocks],
    }


def history_at(term: KappaTerm, n: int, position: int) -> History:
    """History of the split of epsilon_n(t) before the given position"""
    total = expansion_length(term, n)
    if not 0 <= position < total:
        raise ValueError(f"position {position} outside 0..{total - 1}")
    letters: List[RuleLetter] = []
    current, p = term, position
    while current.rank > 0:
        info = _lengths(current, n)
        offset = 0
        for j, filler in enumerate(info["layout"].fillers):
            if p < offset + info["fillers"][j]:
                letters.append(RuleLetter(rule=1, j=j))
                current, p = filler, p - offset
                break
            offset += info["fillers"][j]
            if j < len(info["layout"].blocks):
                base_len, e = info["bases"][j], info["exponents"][j]
                if p < offset + e * base_len:
                    k = (p - offset) // base_len
                    letters.append(RuleLetter(rule=2, j=j + 1, k=k, l=e - k - 1))
                    current, p = info["layout"].blocks[j].base, p - offset - k * base_len
                    break
                offset += e * base_len
    w = current.word()
    return History(letters=tuple(letters), terminal=(w[:p], w[p:]))


def reconstruct(term: KappaTerm, n: int, history: History) -> int:
    """The split position a history describes"""
    position = 0
    current = term
    for letter in history.letters:
        if current.rank == 0:
            raise InvalidHistoryError("history is longer than the rank allows")
        info = _lengths(current, n)
        m = len(info["layout"].blocks)
        if letter.rule == 1:
            if not 0 <= letter.j <= m:
                raise InvalidHistoryError(f"filler index {letter.j} outside 0..{m}")
            position += sum(info["fillers"][: letter.j])
            position += sum(e * b for e, b in zip(info["exponents"][: letter.j], info["bases"]))
            current = info["layout"].fillers[letter.j]
        else:
            j = letter.j
            if not 1 <= j <= m:
                raise InvalidHistoryError(f"block index {j} outside 1..{m}")
            e = info["exponents"][j - 1]
            assert letter.k is not None and letter.l is not None
            if letter.k + letter.l + 1 != e:
                raise InvalidHistoryError(f"k + l + 1 = {letter.k + letter.l + 1}, expected {e}")
            position += sum(info["fillers"][:j])
            position += sum(x * b for x, b in zip(info["exponents"][: j - 1], info["bases"]))
            position += letter.k * info["bases"][j - 1]
            current = info["layout"].blocks[j - 1].base
    if current.rank != 0:
        raise InvalidHistoryError("history stops above rank 0")
    x, y = history.terminal
    if not y or x + y != current.word():
        raise InvalidHistoryError(f"terminal pair {history.terminal} does not split {current}")
    return position + len(x)


def _enumerate(
    term: KappaTerm, n: int
) -> Iterator[Tuple[int, Tuple[RuleLetter, ...], Tuple[str, str]]]:
    if term.rank == 0:
        w = term.word()
        for i in range(len(w)):
            yield i, (), (w[:i], w[i:])
        return
    info = _lengths(term, n)
    layout = info["layout"]
    offset = 0
    for j, filler in enumerate(layout.fillers):
        for pos, letters, terminal in _enumerate(filler, n):
            yield offset + pos, (RuleLetter(rule=1, j=j),) + letters, terminal
        offset += info["fillers"][j]
        if j < len(layout.blocks):
            base_len, e = info["bases"][j], info["exponents"][j]
            inner = list(_enumerate(layout.blocks[j].base, n))
            for k in range(e):
                letter = RuleLetter(rule=2, j=j + 1, k=k, l=e - k - 1)
                for pos, letters, terminal in inner:
                    yield offset + k * base_len + pos, (letter,) + letters, terminal
            offset += e * base_len


def enumerate_factorizations(
    term: KappaTerm, n: int, limit: Optional[int] = None
) -> Iterator[Tuple[int, History]]:
    """Every split of epsilon_n(t) with its history, by increasing position"""
    expected = 0
    for position, letters, terminal in _enumerate(term, n):
        if limit is not None and expected >= limit:
            return
        # each position is derived by exactly one rule chain
        assert position == expected, f"position {position} derived out of order"
        yield position, History(letters=letters, terminal=terminal)
        expected += 1
