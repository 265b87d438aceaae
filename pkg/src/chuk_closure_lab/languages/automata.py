# src/chuk_closure_lab/languages/automata.py
"""
Finite automata over a fixed ordered alphabet.

Dfa values are complete and, once produced by compile_regex() or minimize(), minimal
with states numbered in breadth-first order from the initial state (letters in
alphabet order). Two Dfas for the same language over the same alphabet are then
equal as values, which makes outputs reproducible.
"""

import logging
from collections import defaultdict, deque
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    Iterator,
    List,
    Literal,
    Optional,
    Sequence,
    Set,
    Tuple,
)

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import AlphabetError
from .regex import RegexAst, RegexConcat, RegexEmpty, RegexLetter, RegexPlus, RegexUnion
from .regex import regex_symbols

logger = logging.getLogger(__name__)

LangOpKind = Literal["union", "intersect", "concat", "plus", "complementWithinXPlus"]


class Dfa(BaseModel):
    """Complete deterministic automaton; transitions[q][i] is the target on alphabet[i]"""

    model_config = ConfigDict(frozen=True)

    alphabet: Tuple[str, ...] = Field(..., description="Ordered symbols")
    num_states: int = Field(..., ge=1, description="States are 0..num_states-1")
    initial: int = Field(default=0, description="Initial state")
    finals: FrozenSet[int] = Field(default=frozenset(), description="Accepting states")
    transitions: Tuple[Tuple[int, ...], ...] = Field(..., description="One row per state")

    @model_validator(mode="after")
    def check_complete(self) -> "Dfa":
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet symbols must be distinct")
        if len(self.transitions) != self.num_states:
            raise ValueError(f"expected {self.num_states} transition rows")
        for q, row in enumerate(self.transitions):
            if len(row) != len(self.alphabet):
                expected = len(self.alphabet)
                raise ValueError(f"state {q} has {len(row)} transitions, expected {expected}")
            for target in row:
                if not 0 <= target < self.num_states:
                    raise ValueError(f"transition target {target} out of range")
        if not 0 <= self.initial < self.num_states:
            raise ValueError(f"initial state {self.initial} out of range")
        for f in self.finals:
            if not 0 <= f < self.num_states:
                raise ValueError(f"final state {f} out of range")
        return self

    def letter_index(self, symbol: str) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise AlphabetError(f"symbol {symbol!r} is not in the alphabet {self.alphabet}")

    def step(self, state: int, symbol: str) -> int:
        return self.transitions[state][self.letter_index(symbol)]

    def run(self, word: Sequence[str], start: Optional[int] = None) -> int:
        state = self.initial if start is None else start
        for symbol in word:
            state = self.step(state, symbol)
        return state

    def accepts(self, word: Sequence[str]) -> bool:
        return self.run(word) in self.finals

    @property
    def accepts_empty(self) -> bool:
        return self.initial in self.finals

    def reachable(self) -> List[int]:
        """States reachable from the initial state, in BFS order"""
        order = [self.initial]
        seen = {self.initial}
        queue = deque(order)
        while queue:
            q = queue.popleft()
            for target in self.transitions[q]:
                if target not in seen:
                    seen.add(target)
                    order.append(target)
                    queue.append(target)
        return order

    def live_states(self) -> Set[int]:
        """States from which some final state is reachable"""
        predecessors: Dict[int, Set[int]] = defaultdict(set)
        for q, row in enumerate(self.transitions):
            for target in row:
                predecessors[target].add(q)
        live = set(self.finals)
        queue = deque(live)
        while queue:
            q = queue.popleft()
            for p in predecessors[q]:
                if p not in live:
                    live.add(p)
                    queue.append(p)
        return live

    def is_empty(self) -> bool:
        return not (set(self.reachable()) & self.finals)

    def shortest_word(self) -> Optional[List[str]]:
        """Shortest accepted word, least in alphabet order among equals"""
        parent: Dict[int, Tuple[int, int]] = {}
        seen = {self.initial}
        queue = deque([self.initial])
        while queue:
            q = queue.popleft()
            if q in self.finals:
                letters: List[str] = []
                while q in parent:
                    q, a = parent[q]
                    letters.append(self.alphabet[a])
                return letters[::-1]
            for a, target in enumerate(self.transitions[q]):
                if target not in seen:
                    seen.add(target)
                    parent[target] = (q, a)
                    queue.append(target)
        return None

    def minimize(self) -> "Dfa":
        """Hopcroft minimization followed by canonical renumbering"""
        states = self.reachable()
        blocks = _hopcroft(self, states)
        block_of: Dict[int, int] = {}
        for i, block in enumerate(blocks):
            for q in block:
                block_of[q] = i
        rows: Dict[int, Tuple[int, ...]] = {}
        finals = set()
        for q in states:
            b = block_of[q]
            rows[b] = tuple(block_of[t] for t in self.transitions[q])
            if q in self.finals:
                finals.add(b)
        return canonical(self.alphabet, block_of[self.initial], finals, rows)

    def renumbered(self) -> "Dfa":
        """BFS renumbering from the initial state, without merging states"""
        rows = {q: self.transitions[q] for q in range(self.num_states)}
        return canonical(self.alphabet, self.initial, self.finals, rows)

    def with_alphabet(self, alphabet: Sequence[str]) -> "Dfa":
        """The same language over a larger alphabet; new symbols lead to a sink"""
        alphabet = tuple(alphabet)
        missing = [x for x in self.alphabet if x not in alphabet]
        if missing:
            raise AlphabetError(f"symbols {missing} are missing from {alphabet}")
        if alphabet == self.alphabet:
            return self
        sink = self.num_states
        rows = []
        for q in range(self.num_states):
            rows.append(
                tuple(
                    self.transitions[q][self.alphabet.index(x)] if x in self.alphabet else sink
                    for x in alphabet
                )
            )
        rows.append(tuple(sink for _ in alphabet))
        return Dfa(
            alphabet=alphabet,
            num_states=self.num_states + 1,
            initial=self.initial,
            finals=self.finals,
            transitions=tuple(rows),
        ).minimize()

    def complement(self) -> "Dfa":
        """Complement within X* (the empty word included)"""
        finals = frozenset(range(self.num_states)) - self.finals
        return self.model_copy(update={"finals": finals}).minimize()

    def equivalent(self, other: "Dfa") -> bool:
        """Same language (over the union of both alphabets)"""
        a, b = align(self, other)
        return a.minimize() == b.minimize()

    def to_nfa(self) -> "Nfa":
        edges = [
            (q, x, target)
            for q, row in enumerate(self.transitions)
            for x, target in zip(self.alphabet, row)
        ]
        return Nfa(
            alphabet=self.alphabet,
            num_states=self.num_states,
            initials=frozenset([self.initial]),
            finals=self.finals,
            edges=tuple(edges),
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "alphabet": list(self.alphabet),
            "states": self.num_states,
            "initial": self.initial,
            "finals": sorted(self.finals),
            "transitions": [
                {x: target for x, target in zip(self.alphabet, row)} for row in self.transitions
            ],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Dfa":
        alphabet = tuple(data["alphabet"])
        rows = tuple(tuple(row[x] for x in alphabet) for row in data["transitions"])
        return cls(
            alphabet=alphabet,
            num_states=data["states"],
            initial=data["initial"],
            finals=frozenset(data["finals"]),
            transitions=rows,
        )


def canonical(
    alphabet: Sequence[str],
    initial: int,
    finals: Set[int] | FrozenSet[int],
    rows: Dict[int, Tuple[int, ...]],
) -> Dfa:
    """Renumber reachable states in BFS order from the initial state"""
    number = {initial: 0}
    order = [initial]
    i = 0
    while i < len(order):
        for target in rows[order[i]]:
            if target not in number:
                number[target] = len(order)
                order.append(target)
        i += 1
    return Dfa(
        alphabet=tuple(alphabet),
        num_states=len(order),
        initial=0,
        finals=frozenset(number[q] for q in order if q in finals),
        transitions=tuple(tuple(number[t] for t in rows[q]) for q in order),
    )


def _hopcroft(dfa: Dfa, states: Sequence[int]) -> List[FrozenSet[int]]:
    """Coarsest partition of the given (closed) state set compatible with acceptance"""
    finals = frozenset(q for q in states if q in dfa.finals)
    others = frozenset(states) - finals
    partition = {block for block in (finals, others) if block}
    if len(partition) <= 1:
        return list(partition)

    inverse: Dict[Tuple[int, int], Set[int]] = defaultdict(set)
    for q in states:
        for a, target in enumerate(dfa.transitions[q]):
            inverse[(a, target)].add(q)

    block_of = {q: block for block in partition for q in block}
    work = {finals if len(finals) <= len(others) else others}
    while work:
        splitter = work.pop()
        for a in range(len(dfa.alphabet)):
            affected: Dict[FrozenSet[int], Set[int]] = {}
            for target in splitter:
                for q in inverse.get((a, target), ()):
                    affected.setdefault(block_of[q], set()).add(q)
            for block, overlap in affected.items():
                if len(overlap) == len(block):
                    continue
                inside = frozenset(overlap)
                outside = block - inside
                partition.remove(block)
                partition.update((inside, outside))
                for q in inside:
                    block_of[q] = inside
                for q in outside:
                    block_of[q] = outside
                if block in work:
                    work.remove(block)
                    work.update((inside, outside))
                else:
                    work.add(inside if len(inside) <= len(outside) else outside)
    return list(partition)


def crawl(
    alphabet: Sequence[str],
    initial: Hashable,
    final: Callable[[Any], bool],
    follow: Callable[[Any, str], Hashable],
) -> Dfa:
    """Explore a deterministic transition function from an initial state into a Dfa"""
    states: List[Hashable] = [initial]
    index = {initial: 0}
    finals: Set[int] = set()
    rows: Dict[int, Tuple[int, ...]] = {}
    i = 0
    while i < len(states):
        state = states[i]
        if final(state):
            finals.add(i)
        row = []
        for symbol in alphabet:
            nxt = follow(state, symbol)
            if nxt not in index:
                index[nxt] = len(states)
                states.append(nxt)
            row.append(index[nxt])
        rows[i] = tuple(row)
        i += 1
    return canonical(alphabet, 0, finals, rows)


class Nfa(BaseModel):
    """Automaton with several initial states and epsilon moves (symbol None)"""

    model_config = ConfigDict(frozen=True)

    alphabet: Tuple[str, ...] = Field(..., description="Ordered symbols")
    num_states: int = Field(..., ge=1)
    initials: FrozenSet[int] = Field(default=frozenset())
    finals: FrozenSet[int] = Field(default=frozenset())
    edges: Tuple[Tuple[int, Optional[str], int], ...] = Field(
        default=(), description="(source, symbol or None, target)"
    )

    def successors(self) -> Dict[Tuple[int, Optional[str]], Set[int]]:
        table: Dict[Tuple[int, Optional[str]], Set[int]] = defaultdict(set)
        for p, x, q in self.edges:
            table[(p, x)].add(q)
        return table

    def epsilon_closure(
        self, states: Set[int] | FrozenSet[int], table: Optional[Dict] = None
    ) -> FrozenSet[int]:
        table = table if table is not None else self.successors()
        closure = set(states)
        stack = list(states)
        while stack:
            p = stack.pop()
            for q in table.get((p, None), ()):
                if q not in closure:
                    closure.add(q)
                    stack.append(q)
        return frozenset(closure)

    def is_trim(self) -> bool:
        """Every state lies on a path from an initial to a final state"""
        return len(self.useful_states()) == self.num_states

    def useful_states(self) -> Set[int]:
        forward: Dict[int, Set[int]] = defaultdict(set)
        backward: Dict[int, Set[int]] = defaultdict(set)
        for p, _, q in self.edges:
            forward[p].add(q)
            backward[q].add(p)
        return _closure(self.initials, forward) & _closure(self.finals, backward)

    def determinize(self) -> Dfa:
        """Subset construction; the result is minimized"""
        table = self.successors()
        start = self.epsilon_closure(self.initials, table)

        def follow(subset: FrozenSet[int], symbol: str) -> FrozenSet[int]:
            moved: Set[int] = set()
            for p in subset:
                moved |= table.get((p, symbol), set())
            return self.epsilon_closure(moved, table)

        dfa = crawl(self.alphabet, start, lambda s: bool(s & self.finals), follow)
        logger.debug(f"Determinized {self.num_states}-state Nfa into {dfa.num_states} states")
        return dfa.minimize()

    def accepts(self, word: Sequence[str]) -> bool:
        table = self.successors()
        current = self.epsilon_closure(self.initials, table)
        for symbol in word:
            if symbol not in self.alphabet:
                raise AlphabetError(f"symbol {symbol!r} is not in the alphabet {self.alphabet}")
            moved: Set[int] = set()
            for p in current:
                moved |= table.get((p, symbol), set())
            current = self.epsilon_closure(moved, table)
        return bool(current & self.finals)


def _closure(seeds: FrozenSet[int] | Set[int], graph: Dict[int, Set[int]]) -> Set[int]:
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        p = stack.pop()
        for q in graph[p]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


class _NfaBuilder:
    """Mutable helper for Thompson-style constructions"""

    def __init__(self, alphabet: Sequence[str]):
        self.alphabet = tuple(alphabet)
        self.count = 0
        self.edges: List[Tuple[int, Optional[str], int]] = []

    def state(self) -> int:
        self.count += 1
        return self.count - 1

    def edge(self, p: int, symbol: Optional[str], q: int) -> None:
        self.edges.append((p, symbol, q))

    def fragment(self, node: RegexAst) -> Tuple[int, int]:
        start, end = self.state(), self.state()
        if isinstance(node, RegexLetter):
            self.edge(start, node.symbol, end)
        elif isinstance(node, RegexUnion):
            for side in (node.left, node.right):
                s, e = self.fragment(side)
                self.edge(start, None, s)
                self.edge(e, None, end)
        elif isinstance(node, RegexConcat):
            s1, e1 = self.fragment(node.left)
            s2, e2 = self.fragment(node.right)
            self.edge(start, None, s1)
            self.edge(e1, None, s2)
            self.edge(e2, None, end)
        elif isinstance(node, RegexPlus):
            s, e = self.fragment(node.inner)
            self.edge(start, None, s)
            self.edge(e, None, s)
            self.edge(e, None, end)
        # RegexEmpty: no path from start to end
        return start, end

    def build(self, initials: Set[int], finals: Set[int]) -> Nfa:
        return Nfa(
            alphabet=self.alphabet,
            num_states=max(self.count, 1),
            initials=frozenset(initials),
            finals=frozenset(finals),
            edges=tuple(self.edges),
        )


def regex_to_nfa(node: RegexAst, alphabet: Sequence[str]) -> Nfa:
    builder = _NfaBuilder(alphabet)
    start, end = builder.fragment(node)
    return builder.build({start}, {end})


def compile_regex(node: RegexAst, alphabet: Optional[Sequence[str]] = None) -> Dfa:
    """Minimal complete Dfa of a regular expression"""
    symbols = regex_symbols(node)
    if alphabet is None:
        alphabet = sorted(symbols)
        if not alphabet:
            raise AlphabetError("cannot infer an alphabet from an expression without symbols")
    outside = symbols - set(alphabet)
    if outside:
        raise AlphabetError(f"symbols {sorted(outside)} are not in the alphabet {tuple(alphabet)}")
    dfa = regex_to_nfa(node, alphabet).determinize()
    logger.debug(f"Compiled {node.to_text()!r} into a {dfa.num_states}-state Dfa")
    return dfa


def empty_language(alphabet: Sequence[str]) -> Dfa:
    return compile_regex(RegexEmpty(), alphabet)


def plus_language(alphabet: Sequence[str]) -> Dfa:
    """X+ over the given alphabet"""
    alphabet = tuple(alphabet)
    rows = (tuple(1 for _ in alphabet), tuple(1 for _ in alphabet))
    return Dfa(alphabet=alphabet, num_states=2, initial=0, finals=frozenset([1]), transitions=rows)


def align(a: Dfa, b: Dfa) -> Tuple[Dfa, Dfa]:
    """Both automata over the union of their alphabets (first alphabet order first)"""
    if a.alphabet == b.alphabet:
        return a, b
    alphabet = tuple(a.alphabet) + tuple(x for x in b.alphabet if x not in a.alphabet)
    return a.with_alphabet(alphabet), b.with_alphabet(alphabet)


def product(a: Dfa, b: Dfa, accept: Callable[[bool, bool], bool]) -> Dfa:
    """Product automaton with a Boolean acceptance combinator"""
    a, b = align(a, b)

    def follow(pair: Tuple[int, int], symbol: str) -> Tuple[int, int]:
        return a.step(pair[0], symbol), b.step(pair[1], symbol)

    def final(pair: Tuple[int, int]) -> bool:
        return accept(pair[0] in a.finals, pair[1] in b.finals)

    return crawl(a.alphabet, (a.initial, b.initial), final, follow).minimize()


def _concat(a: Dfa, b: Dfa) -> Dfa:
    a, b = align(a, b)
    shift = a.num_states
    edges: List[Tuple[int, Optional[str], int]] = []
    for p, x, q in a.to_nfa().edges:
        edges.append((p, x, q))
    for p, x, q in b.to_nfa().edges:
        edges.append((p + shift, x, q + shift))
    for f in a.finals:
        edges.append((f, None, b.initial + shift))
    nfa = Nfa(
        alphabet=a.alphabet,
        num_states=a.num_states + b.num_states,
        initials=frozenset([a.initial]),
        finals=frozenset(f + shift for f in b.finals),
        edges=tuple(edges),
    )
    return nfa.determinize()


def _plus(a: Dfa) -> Dfa:
    edges = list(a.to_nfa().edges)
    edges.extend((f, None, a.initial) for f in a.finals)
    nfa = Nfa(
        alphabet=a.alphabet,
        num_states=a.num_states,
        initials=frozenset([a.initial]),
        finals=a.finals,
        edges=tuple(edges),
    )
    return nfa.determinize()


def lang_op(kind: LangOpKind, a: Dfa, b: Optional[Dfa] = None) -> Dfa:
    """Rational operation on automata; the result is minimal"""
    if kind == "plus":
        return _plus(a)
    if kind == "complementWithinXPlus":
        return product(a, plus_language(a.alphabet), lambda x, y: y and not x)
    if b is None:
        raise ValueError(f"{kind} needs two automata")
    if kind == "union":
        return product(a, b, lambda x, y: x or y)
    if kind == "intersect":
        return product(a, b, lambda x, y: x and y)
    if kind == "concat":
        return _concat(a, b)
    raise ValueError(f"unknown language operation: {kind}")


def intersection_is_empty(a: Dfa, b: Dfa) -> bool:
    return lang_op("intersect", a, b).is_empty()


def includes(a: Dfa, b: Dfa) -> bool:
    """L(b) is contained in L(a)"""
    return product(a, b, lambda x, y: y and not x).is_empty()


def iter_factorizations(dfa: Dfa, word: str, limit: Optional[int] = None) -> Iterator[List[str]]:
    """
    Factorizations of a word into nonempty factors accepted by the automaton.

    Cut positions are explored left to right, shorter first factors first.
    """
    n = len(word)
    ends: List[List[int]] = [[] for _ in range(n)]
    for i in range(n):
        state = dfa.initial
        for j in range(i, n):
            state = dfa.step(state, word[j])
            if state in dfa.finals:
                ends[i].append(j + 1)
    completes = [False] * (n + 1)
    completes[n] = True
    for i in range(n - 1, -1, -1):
        completes[i] = any(completes[j] for j in ends[i])

    count = 0

    def walk(i: int, prefix: List[str]) -> Iterator[List[str]]:
        nonlocal count
        if i == n:
            count += 1
            yield list(prefix)
            return
        for j in ends[i]:
            if limit is not None and count >= limit:
                return
            if completes[j]:
                prefix.append(word[i:j])
                yield from walk(j, prefix)
                prefix.pop()

    if n and completes[0]:
        yield from walk(0, [])


def iter_words(dfa: Dfa, max_length: Optional[int] = None) -> Iterator[str]:
    """Accepted nonempty words in shortlex order; ends when no longer word is accepted"""
    live = dfa.live_states()
    layer = [("", dfa.initial)] if dfa.initial in live else []
    length = 0
    while layer and (max_length is None or length < max_length):
        length += 1
        layer = [
            (w + x, target)
            for w, q in layer
            for x, target in zip(dfa.alphabet, dfa.transitions[q])
            if target in live
        ]
        for w, q in layer:
            if q in dfa.finals:
                yield w
