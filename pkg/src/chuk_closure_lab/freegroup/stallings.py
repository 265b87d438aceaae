# src/chuk_closure_lab/freegroup/stallings.py
"""
Stallings graphs of finitely generated subgroups of the free group.

The bouquet of generator loops at the base vertex is folded (two edges with the
same label leaving or entering a vertex are identified) and then trimmed to its
core. Vertices are renumbered breadth-first from the base, reading symbols in
the order a, a', b, b', ..., so equal subgroups give equal graphs.
"""

import logging
from collections import deque
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .words import GroupWord, doubled_alphabet, invert_symbol, is_inverse, letter_of

if TYPE_CHECKING:
    from .rational import GroupAutomaton

logger = logging.getLogger(__name__)

Edge = Tuple[int, str, int]


class StallingsGraph(BaseModel):
    """Folded core graph; edges carry positive letters and are read backwards for inverses"""

    model_config = ConfigDict(frozen=True)

    num_vertices: int = Field(..., ge=1)
    base: int = Field(default=0)
    edges: Tuple[Edge, ...] = Field(default=(), description="(source, letter, target)")
    alphabet: Tuple[str, ...] = Field(default=(), description="Letters of the ambient free group")

    @model_validator(mode="after")
    def check_folded(self) -> "StallingsGraph":
        outgoing: Set[Tuple[int, str]] = set()
        incoming: Set[Tuple[int, str]] = set()
        for p, x, q in self.edges:
            if is_inverse(x):
                raise ValueError("edges carry positive letters only")
            if (p, x) in outgoing or (q, x) in incoming:
                raise ValueError(f"graph is not folded at the {x}-edge {p}->{q}")
            outgoing.add((p, x))
            incoming.add((q, x))
        return self

    @property
    def is_trivial(self) -> bool:
        """The trivial subgroup"""
        return not self.edges

    def moves(self) -> Dict[Tuple[int, str], int]:
        """(vertex, symbol) -> vertex, inverse symbols following edges backwards"""
        table: Dict[Tuple[int, str], int] = {}
        for p, x, q in self.edges:
            table[(p, x)] = q
            table[(q, invert_symbol(x))] = p
        return table

    def read(self, word: GroupWord) -> Optional[int]:
        """End vertex of the path labelled by the word from the base, if it exists"""
        table = self.moves()
        vertex = self.base
        for symbol in word.symbols:
            nxt = table.get((vertex, symbol))
            if nxt is None:
                return None
            vertex = nxt
        return vertex

    def rank(self) -> int:
        """Number of free generators of the subgroup"""
        return len(self.edges) - self.num_vertices + 1

    def spanning_paths(self) -> Dict[int, GroupWord]:
        """A reduced label from the base to each vertex, along a BFS spanning tree"""
        table = self.moves()
        symbols = doubled_alphabet(self.alphabet or [x for _, x, _ in self.edges])
        paths = {self.base: GroupWord()}
        queue = deque([self.base])
        while queue:
            v = queue.popleft()
            for symbol in symbols:
                w = table.get((v, symbol))
                if w is not None and w not in paths:
                    paths[w] = GroupWord(symbols=paths[v].symbols + (symbol,))
                    queue.append(w)
        return paths

    def generators(self) -> List[GroupWord]:
        """A free basis: one generator per edge outside the spanning tree"""
        paths = self.spanning_paths()
        tree: Set[Edge] = set()
        for v, path in paths.items():
            if path.symbols:
                symbol = path.symbols[-1]
                u = self.read(GroupWord(symbols=path.symbols[:-1]))
                assert u is not None
                tree.add((u, symbol, v) if not is_inverse(symbol) else (v, letter_of(symbol), u))
        basis = []
        for p, x, q in self.edges:
            if (p, x, q) not in tree:
                basis.append((paths[p] * GroupWord(symbols=(x,))) * paths[q].inverse())
        return basis

    def to_automaton(self) -> "GroupAutomaton":
        """Reduced-form automaton of the subgroup"""
        from .rational import subgroup_automaton

        return subgroup_automaton(self)


def _bouquet(generators: Iterable[GroupWord]) -> Tuple[int, List[Edge]]:
    count = 1
    edges: List[Edge] = []
    for g in generators:
        symbols = g.reduced().symbols
        if not symbols:
            continue
        vertex = 0
        for i, symbol in enumerate(symbols):
            if i == len(symbols) - 1:
                nxt = 0
            else:
                nxt = count
                count += 1
            if is_inverse(symbol):
                edges.append((nxt, letter_of(symbol), vertex))
            else:
                edges.append((vertex, symbol, nxt))
            vertex = nxt
    return count, edges


def _find(parent: List[int], v: int) -> int:
    root = v
    while parent[root] != root:
        root = parent[root]
    while parent[v] != root:
        parent[v], v = root, parent[v]
    return root


def _fold(count: int, edges: List[Edge]) -> Set[Edge]:
    """Identify edges sharing a label and a source, or a label and a target"""
    parent = list(range(count))
    current = set(edges)
    changed = True
    while changed:
        changed = False
        outgoing: Dict[Tuple[int, str], int] = {}
        incoming: Dict[Tuple[int, str], int] = {}
        for p, x, q in sorted(current):
            if (p, x) in outgoing and outgoing[(p, x)] != q:
                a, b = _find(parent, outgoing[(p, x)]), _find(parent, q)
            elif (q, x) in incoming and incoming[(q, x)] != p:
                a, b = _find(parent, incoming[(q, x)]), _find(parent, p)
            else:
                outgoing[(p, x)] = q
                incoming[(q, x)] = p
                continue
            # base stays its own representative
            parent[max(a, b)] = min(a, b)
            current = {(_find(parent, p), x, _find(parent, q)) for p, x, q in current}
            changed = True
            break
    return current


def _core(edges: Set[Edge], base: int) -> Set[Edge]:
    """Remove hanging trees: non-base vertices of degree one, repeatedly"""
    edges = set(edges)
    while True:
        degree: Dict[int, int] = {}
        for p, _, q in edges:
            degree[p] = degree.get(p, 0) + 1
            degree[q] = degree.get(q, 0) + 1
        leaves = {v for v, d in degree.items() if d == 1 and v != base}
        if not leaves:
            return edges
        edges = {(p, x, q) for p, x, q in edges if p not in leaves and q not in leaves}


def _canonical(edges: Set[Edge], base: int, alphabet: Tuple[str, ...]) -> StallingsGraph:
    table: Dict[Tuple[int, str], int] = {}
    for p, x, q in edges:
        table[(p, x)] = q
        table[(q, invert_symbol(x))] = p
    number = {base: 0}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for symbol in doubled_alphabet(alphabet):
            w = table.get((v, symbol))
            if w is not None and w not in number:
                number[w] = len(number)
                queue.append(w)
    renumbered = sorted((number[p], x, number[q]) for p, x, q in edges)
    return StallingsGraph(
        num_vertices=len(number), base=0, edges=tuple(renumbered), alphabet=alphabet
    )


def fold_stallings(
    generators: Sequence[GroupWord], alphabet: Optional[Sequence[str]] = None
) -> StallingsGraph:
    """Folded core graph of the subgroup generated by the given words"""
    letters = set(alphabet or [])
    for g in generators:
        letters.update(g.letters())
    count, edges = _bouquet(generators)
    folded = _fold(count, edges)
    core = _core(folded, 0)
    graph = _canonical(core, 0, tuple(sorted(letters)))
    logger.debug(
        f"Folded {len(generators)} generators into {graph.num_vertices} vertices, "
        f"{len(graph.edges)} edges"
    )
    return graph


def subgroup_member(graph: StallingsGraph, word: GroupWord) -> bool:
    """Whether the word lies in the subgroup: its reduced form reads a loop at the base"""
    return graph.read(word.reduced()) == graph.base
