# src/chuk_closure_lab/factorization/graph.py
"""
Factorization multigraphs for terms t = t0 s^a t1 with a single top block.

Let phi: X* -> M be the syntactic morphism of L with a fresh identity, so only
the empty word maps to 1. A vertex (a, b) records how one copy of epsilon_k(s)
is cut: epsilon_k(s) = u z v with phi(u) = a, z in L*, phi(v) = b. Edges record
the factors of L that cross copies:

    (a1, b1) -e+1-> (a2, b2)   some word of L lies in phi^-1(b1) s^e phi^-1(a2)
    INITIAL  -e->   (a, b)      some word of L lies in t0 s^e phi^-1(a)
    (a, b)   -e+1-> FINAL       some word of L lies in phi^-1(b) s^e t1
    INITIAL  -e->   FINAL       t0 s^e t1 lies in L

Paths from INITIAL to FINAL of total weight epsilon_k(a) are the factorizations
of epsilon_k(t) into words of L. Since phi recognizes L, every condition is a
product in M checked against phi(L).
"""

import logging
from typing import Dict, FrozenSet, List, Literal, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import config
from ..errors import BudgetExceededError, ShapeError
from ..languages.automata import Dfa, lang_op
from ..languages.syntactic import syntactic_monoid
from ..semigroups.finite import (
    FiniteSemigroup,
    SemigroupMorphism,
    eval_word,
    image_of_rational,
    max_index_period,
    power_int,
)
from ..terms.evaluation import epsilon_expand
from ..terms.kappa import KappaTerm

logger = logging.getLogger(__name__)

Vertex = Tuple[int, int]
INITIAL: Vertex = (-1, -1)
FINAL: Vertex = (-2, -2)

GraphMode = Literal["explicit", "symbolic"]


def vertex_name(vertex: Vertex) -> str:
    if vertex == INITIAL:
        return "initial"
    if vertex == FINAL:
        return "final"
    return f"({vertex[0]},{vertex[1]})"


class GraphEdge(BaseModel):
    """An edge of explicit weight, or a class of weights r mod p above m"""

    model_config = ConfigDict(frozen=True)

    source: Vertex
    target: Vertex
    weight: Optional[int] = Field(default=None, ge=0, description="Explicit weight")
    residue: Optional[int] = Field(default=None, ge=0, description="r of a symbolic class")

    @model_validator(mode="after")
    def check_kind(self) -> "GraphEdge":
        if (self.weight is None) == (self.residue is None):
            raise ValueError("an edge has either an explicit weight or a residue class")
        return self

    @property
    def is_symbolic(self) -> bool:
        return self.residue is not None

    def label(self, m: int, p: int) -> str:
        if self.weight is not None:
            return str(self.weight)
        return f"{self.residue} mod {p}, >={m}"


class Witness(BaseModel):
    """epsilon_k(s) = u z v for one vertex"""

    model_config = ConfigDict(frozen=True)

    u: str
    z: str
    v: str


class FactorizationGraph(BaseModel):
    """Factorizations of epsilon_k(t0 s^a t1) into words of L"""

    model_config = ConfigDict(frozen=True)

    term: KappaTerm
    language: Dfa
    k: int = Field(..., description="Expansion index")
    mode: GraphMode = Field(default="explicit")
    monoid: FiniteSemigroup = Field(..., description="Syntactic monoid of L")
    morphism: SemigroupMorphism = Field(..., description="X* -> monoid")
    accepted: FrozenSet[int] = Field(..., description="phi(L)")
    m: int = Field(..., ge=1, description="a^(m+p) = a^m shifted past every edge offset")
    p: int = Field(..., ge=1)
    copies: int = Field(..., ge=1, description="epsilon_k of the block exponent")
    prefix: str = Field(..., description="epsilon_k(t0)")
    base: str = Field(..., description="epsilon_k(s)")
    suffix: str = Field(..., description="epsilon_k(t1)")
    vertices: Tuple[Vertex, ...]
    witnesses: Dict[Vertex, Witness]
    edges: Tuple[GraphEdge, ...]

    def value_of(self, word: str) -> int:
        """phi(word), the empty word included"""
        return eval_word(self.morphism, word, allow_empty=True)

    def _power(self, e: int) -> int:
        identity = self.monoid.identity
        assert identity is not None
        if e == 0:
            return identity
        return power_int(self.monoid, self.value_of(self.base), e)

    def has_edge(self, source: Vertex, target: Vertex, weight: int) -> bool:
        """Whether source -weight-> target is an edge, for any weight"""
        if source == FINAL or target == INITIAL or weight < 0:
            return False
        if source != INITIAL and source not in self.witnesses:
            return False
        if target != FINAL and target not in self.witnesses:
            return False
        if self.mode == "explicit" and weight > self.copies:
            return False
        e = weight if source == INITIAL else weight - 1
        if e < 0:
            return False
        left = self.value_of(self.prefix) if source == INITIAL else source[1]
        right = self.value_of(self.suffix) if target == FINAL else target[0]
        return self.monoid.product([left, self._power(e), right]) in self.accepted

    def out_edges(self, vertex: Vertex) -> List[GraphEdge]:
        return [edge for edge in self.edges if edge.source == vertex]

    def to_networkx(self) -> nx.MultiDiGraph:
        """Multigraph keyed by weight, or by the class label in symbolic mode"""
        graph = nx.MultiDiGraph()
        graph.add_node(INITIAL)
        graph.add_nodes_from(self.vertices)
        graph.add_node(FINAL)
        for edge in self.edges:
            key = edge.weight if edge.weight is not None else edge.label(self.m, self.p)
            graph.add_edge(edge.source, edge.target, key=key, label=edge.label(self.m, self.p))
        return graph


def _vertices(base: str, plus: Dfa, values: Dict[str, int]) -> Dict[Vertex, Witness]:
    """(phi(u), phi(v)) over every split u z v of the base with z in L*"""
    n = len(base)
    star: List[List[bool]] = []
    for i in range(n + 1):
        row = [False] * (n + 1)
        row[i] = True
        state = plus.initial
        for j in range(i, n):
            state = plus.step(state, base[j])
            row[j + 1] = state in plus.finals
        star.append(row)

    witnesses: Dict[Vertex, Witness] = {}
    best: Dict[Vertex, Tuple[int, int]] = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            if not star[i][j]:
                continue
            vertex = (values[base[:i]], values[base[j:]])
            # shortest z, then leftmost
            rank = (j - i, i)
            if vertex not in best or rank < best[vertex]:
                best[vertex] = rank
                witnesses[vertex] = Witness(u=base[:i], z=base[i:j], v=base[j:])
    return witnesses


def build_factorization_graph(
    term: KappaTerm, language: Dfa, k: Optional[int] = None, mode: GraphMode = "explicit"
) -> FactorizationGraph:
    """The multigraph of factorizations of epsilon_k(t) over L"""
    if term.nu != 1:
        raise ShapeError(f"{term} has {term.nu} top-level blocks; exactly one is needed")
    k = k if k is not None else config.expansion_n
    layout = term.layout()
    t0, block, t1 = layout.fillers[0], layout.blocks[0], layout.fillers[1]
    copies = block.exponent.approximant(k)
    if mode == "explicit" and copies > config.max_expansion_length:
        raise BudgetExceededError(
            f"{copies} copies of the block exceed the explicit limit {config.max_expansion_length}"
        )
    prefix = epsilon_expand(t0, k) if not t0.is_empty else ""
    base = epsilon_expand(block.base, k)
    suffix = epsilon_expand(t1, k) if not t1.is_empty else ""

    alphabet = sorted(set(language.alphabet) | term.letters())
    language = language.with_alphabet(alphabet)
    monoid, morphism = syntactic_monoid(language, fresh_identity=True)
    accepted = frozenset(image_of_rational(morphism, language))
    index, p = max_index_period(monoid)
    m = index + 1

    values: Dict[str, int] = {}
    for i in range(len(base) + 1):
        values[base[:i]] = eval_word(morphism, base[:i], allow_empty=True)
        values[base[i:]] = eval_word(morphism, base[i:], allow_empty=True)
    witnesses = _vertices(base, lang_op("plus", language), values)
    vertices = tuple(sorted(witnesses))

    graph = FactorizationGraph(
        term=term,
        language=language,
        k=k,
        mode=mode,
        monoid=monoid,
        morphism=morphism,
        accepted=accepted,
        m=m,
        p=p,
        copies=copies,
        prefix=prefix,
        base=base,
        suffix=suffix,
        vertices=vertices,
        witnesses=witnesses,
        edges=(),
    )

    top = copies if mode == "explicit" else m + p - 1
    edges: List[GraphEdge] = []
    pairs = [(INITIAL, FINAL)]
    pairs += [(INITIAL, q) for q in vertices]
    pairs += [(q, r) for q in vertices for r in vertices]
    pairs += [(q, FINAL) for q in vertices]
    for source, target in pairs:
        for weight in range(0 if source == INITIAL else 1, top + 1):
            if graph.has_edge(source, target, weight):
                edges.append(GraphEdge(source=source, target=target, weight=weight))
        if mode == "symbolic":
            for weight in range(m, m + p):
                if graph.has_edge(source, target, weight):
                    edges.append(GraphEdge(source=source, target=target, residue=weight % p))

    logger.debug(
        f"Factorization graph of {term} at k={k}: {len(vertices)} vertices, "
        f"{len(edges)} edges, m={m}, p={p}"
    )
    return graph.model_copy(update={"edges": tuple(edges)})
