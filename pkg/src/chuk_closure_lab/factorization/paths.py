# src/chuk_closure_lab/factorization/paths.py
"""
Paths of factorization graphs.

A path from INITIAL to FINAL reads as a factorization of epsilon_k(t0 s^l t1),
l being its total weight, and back. The four weight-preserving rewrites of a
path are exposed through transform_path; kinds 2 and 4 change the edge
multiset and re-sequence it with an Eulerian path.
"""

import logging
from collections import Counter
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import config
from ..errors import PreconditionViolatedError
from ..languages.automata import iter_factorizations
from .graph import FINAL, INITIAL, FactorizationGraph, Vertex, vertex_name

logger = logging.getLogger(__name__)

EdgeKey = Tuple[Vertex, Vertex, int]


class PathStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: Vertex
    target: Vertex
    weight: int = Field(..., ge=0)

    @property
    def key(self) -> EdgeKey:
        return self.source, self.target, self.weight

    def __str__(self) -> str:
        return f"{vertex_name(self.source)} -{self.weight}-> {vertex_name(self.target)}"


class FactorizationPath(BaseModel):
    """A walk of a factorization graph, given step by step"""

    model_config = ConfigDict(frozen=True)

    steps: Tuple[PathStep, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_contiguous(self) -> "FactorizationPath":
        for left, right in zip(self.steps, self.steps[1:]):
            if left.target != right.source:
                raise ValueError(f"step {right} does not continue {left}")
        return self

    @property
    def is_complete(self) -> bool:
        return self.steps[0].source == INITIAL and self.steps[-1].target == FINAL

    @property
    def total_weight(self) -> int:
        return sum(step.weight for step in self.steps)

    def edge_counts(self) -> Counter:
        return Counter(step.key for step in self.steps)

    @classmethod
    def of(cls, *steps: Tuple[Vertex, Vertex, int]) -> "FactorizationPath":
        return cls(steps=tuple(PathStep(source=s, target=t, weight=w) for s, t, w in steps))


def total_weight(path: FactorizationPath) -> int:
    return path.total_weight


def iter_paths(
    graph: FactorizationGraph, limit: Optional[int] = None
) -> Iterator[FactorizationPath]:
    """Paths from INITIAL to FINAL of total weight epsilon_k(a), explicit mode"""
    if graph.mode != "explicit":
        raise ValueError("paths are enumerated on explicit graphs only")
    limit = limit if limit is not None else config.path_limit
    outgoing: Dict[Vertex, List[Tuple[Vertex, int]]] = {}
    for edge in graph.edges:
        assert edge.weight is not None
        outgoing.setdefault(edge.source, []).append((edge.target, edge.weight))

    memo: Dict[Tuple[Vertex, int], bool] = {}

    def can_finish(vertex: Vertex, remaining: int) -> bool:
        if (vertex, remaining) not in memo:
            memo[(vertex, remaining)] = any(
                weight == remaining
                if target == FINAL
                else weight <= remaining and can_finish(target, remaining - weight)
                for target, weight in outgoing.get(vertex, [])
            )
        return memo[(vertex, remaining)]

    emitted = 0

    def walk(
        vertex: Vertex, remaining: int, prefix: List[PathStep]
    ) -> Iterator[FactorizationPath]:
        nonlocal emitted
        for target, weight in outgoing.get(vertex, []):
            if emitted >= limit:
                return
            if weight > remaining:
                continue
            step = PathStep(source=vertex, target=target, weight=weight)
            if target == FINAL:
                if weight == remaining:
                    emitted += 1
                    yield FactorizationPath(steps=tuple(prefix + [step]))
            elif can_finish(target, remaining - weight):
                prefix.append(step)
                yield from walk(target, remaining - weight, prefix)
                prefix.pop()

    yield from walk(INITIAL, graph.copies, [])
    if emitted >= limit:
        logger.debug(f"Path enumeration stopped at the limit of {limit}")


def _check_path(graph: FactorizationGraph, path: FactorizationPath) -> None:
    if not path.is_complete:
        raise ValueError("a factorization path runs from INITIAL to FINAL")
    for step in path.steps:
        if not graph.has_edge(step.source, step.target, step.weight):
            raise ValueError(f"{step} is not an edge of the graph")


def _split_star(graph: FactorizationGraph, z: str) -> List[str]:
    if not z:
        return []
    found = next(iter_factorizations(graph.language, z, limit=1), None)
    assert found is not None, f"witness {z!r} is not in L+"
    return found


def path_to_factorization(graph: FactorizationGraph, path: FactorizationPath) -> List[str]:
    """Words of L whose product is epsilon_k(t0 s^l t1), l the total weight"""
    _check_path(graph, path)
    base = graph.base
    steps = path.steps
    if len(steps) == 1:
        return [graph.prefix + base * steps[0].weight + graph.suffix]

    factors: List[str] = []
    for step in steps:
        if step.source == INITIAL:
            head = graph.prefix + base * step.weight
        else:
            witness = graph.witnesses[step.source]
            factors.extend(_split_star(graph, witness.z))
            head = witness.v + base * (step.weight - 1)
        if step.target == FINAL:
            factors.append(head + graph.suffix)
        else:
            factors.append(head + graph.witnesses[step.target].u)
    return factors


def factorization_to_path(
    graph: FactorizationGraph, factors: Sequence[str]
) -> Optional[FactorizationPath]:
    """
    The path of a factorization of epsilon_k(t) into words of L.

    A cut at the end of a copy belongs to the next copy, except after the last
    one. None when a cut falls strictly inside epsilon_k(t0) or epsilon_k(t1).
    """
    whole = graph.prefix + graph.base * graph.copies + graph.suffix
    if "".join(factors) != whole:
        raise ValueError("the factors do not multiply to epsilon_k(t)")
    for factor in factors:
        if not factor or not graph.language.accepts(factor):
            raise ValueError(f"factor {factor!r} is not in L")

    start, size = len(graph.prefix), len(graph.base)
    end = start + size * graph.copies
    cuts: List[int] = []
    position = 0
    for factor in factors[:-1]:
        position += len(factor)
        cuts.append(position)
    if any(c < start or c > end for c in cuts):
        return None
    if not cuts:
        return FactorizationPath.of((INITIAL, FINAL, graph.copies))

    by_copy: Dict[int, List[int]] = {}
    for c in cuts:
        copy = min((c - start) // size, graph.copies - 1)
        by_copy.setdefault(copy, []).append(c - start - copy * size)

    visits: List[Tuple[int, Vertex]] = []
    for copy in sorted(by_copy):
        offsets = by_copy[copy]
        u, v = graph.base[: offsets[0]], graph.base[offsets[-1] :]
        vertex = (graph.value_of(u), graph.value_of(v))
        visits.append((copy, vertex))

    steps = [(INITIAL, visits[0][1], visits[0][0])]
    for (c1, q1), (c2, q2) in zip(visits, visits[1:]):
        steps.append((q1, q2, c2 - c1))
    steps.append((visits[-1][1], FINAL, graph.copies - visits[-1][0]))
    return FactorizationPath.of(*steps)


def _resequence(counts: Counter, template: FactorizationPath) -> FactorizationPath:
    """An Eulerian path from INITIAL through an edge multiset"""
    multigraph = nx.MultiDiGraph()
    # edges in order of first use, new edges last
    live = [key for key in counts if counts[key] > 0]
    order = list(dict.fromkeys(s.key for s in template.steps if s.key in live))
    order += sorted(key for key in live if key not in order)
    for key in order:
        source, target, weight = key
        for _ in range(counts[key]):
            multigraph.add_edge(source, target, weight=weight)
    if not nx.has_eulerian_path(multigraph, source=INITIAL):
        raise PreconditionViolatedError("connected support", "the new edge multiset is not a path")
    steps = [
        (u, v, multigraph.edges[u, v, k]["weight"])
        for u, v, k in nx.eulerian_path(multigraph, source=INITIAL, keys=True)
    ]
    return FactorizationPath.of(*steps)


def _cycle_counts(cycle: Sequence[PathStep]) -> Counter:
    if not cycle:
        raise PreconditionViolatedError("nonempty cycle")
    path = FactorizationPath(steps=tuple(cycle))
    if cycle[0].source != cycle[-1].target:
        raise PreconditionViolatedError("closed cycle", f"{cycle[0]} ... {cycle[-1]} is open")
    return path.edge_counts()


def _reorder(path: FactorizationPath, order: Optional[Sequence[int]]) -> FactorizationPath:
    if order is None:
        return _resequence(path.edge_counts(), path)
    if sorted(order) != list(range(len(path.steps))):
        raise PreconditionViolatedError("permutation", f"{list(order)} does not permute the steps")
    try:
        reordered = FactorizationPath(steps=tuple(path.steps[i] for i in order))
    except ValueError as e:
        raise PreconditionViolatedError("contiguous reordering", str(e)) from e
    if not reordered.is_complete:
        raise PreconditionViolatedError("contiguous reordering", "does not run INITIAL to FINAL")
    return reordered


def _swap_cycles(
    path: FactorizationPath,
    first: Sequence[PathStep],
    second: Sequence[PathStep],
    r1: int,
    r2: int,
) -> FactorizationPath:
    counts = path.edge_counts()
    c1, c2 = _cycle_counts(first), _cycle_counts(second)
    n1 = sum(s.weight for s in first)
    n2 = sum(s.weight for s in second)
    if r1 < 1 or r2 < 1 or n1 * r1 != n2 * r2:
        raise PreconditionViolatedError("n1 r1 = n2 r2", f"{n1}*{r1} != {n2}*{r2}")
    for key, mult in c1.items():
        if counts[key] <= r1 * mult:
            raise PreconditionViolatedError(
                "first cycle traversed more than r1 times", f"edge {key} used {counts[key]} times"
            )
    for key in c2:
        if counts[key] < 1:
            raise PreconditionViolatedError("second cycle in the support", f"edge {key} unused")
    for key, mult in c1.items():
        counts[key] -= r1 * mult
    for key, mult in c2.items():
        counts[key] += r2 * mult
    return _resequence(counts, path)


def _shift_weight(
    graph: FactorizationGraph, path: FactorizationPath, first: int, second: int
) -> FactorizationPath:
    steps = list(path.steps)
    if first == second or not (0 <= first < len(steps) and 0 <= second < len(steps)):
        raise PreconditionViolatedError("two distinct steps", f"got {first} and {second}")
    a, b = steps[first], steps[second]
    if a.weight < graph.m:
        raise PreconditionViolatedError("e1 >= m", f"{a.weight} < {graph.m}")
    if b.weight - graph.p < graph.m:
        raise PreconditionViolatedError("e2 >= m", f"{b.weight - graph.p} < {graph.m}")
    raised = a.model_copy(update={"weight": a.weight + graph.p})
    lowered = b.model_copy(update={"weight": b.weight - graph.p})
    for step in (raised, lowered):
        if not graph.has_edge(step.source, step.target, step.weight):
            raise PreconditionViolatedError("edge exists", f"{step} is missing")
    steps[first], steps[second] = raised, lowered
    return FactorizationPath(steps=tuple(steps))


def _absorb_cycle(
    graph: FactorizationGraph, path: FactorizationPath, cycle: Sequence[PathStep], index: int
) -> FactorizationPath:
    counts = path.edge_counts()
    c = _cycle_counts(cycle)
    n = sum(s.weight for s in cycle)
    for key, mult in c.items():
        if counts[key] < (graph.p + 1) * mult:
            raise PreconditionViolatedError(
                "cycle traversed at least p+1 times", f"edge {key} used {counts[key]} times"
            )
    if not 0 <= index < len(path.steps):
        raise PreconditionViolatedError("step index in range", str(index))
    target = path.steps[index]
    if target.weight < graph.m:
        raise PreconditionViolatedError("e >= m", f"{target.weight} < {graph.m}")
    grown = target.model_copy(update={"weight": target.weight + n * graph.p})
    if not graph.has_edge(grown.source, grown.target, grown.weight):
        raise PreconditionViolatedError("edge exists", f"{grown} is missing")
    for key, mult in c.items():
        counts[key] -= graph.p * mult
    counts[target.key] -= 1
    counts[grown.key] += 1
    steps = [grown if i == index else s for i, s in enumerate(path.steps)]
    return _resequence(+counts, FactorizationPath(steps=tuple(steps)))


def transform_path(
    graph: FactorizationGraph,
    path: FactorizationPath,
    kind: int,
    order: Optional[Sequence[int]] = None,
    cycles: Sequence[Sequence[PathStep]] = (),
    multipliers: Tuple[int, int] = (1, 1),
    steps: Tuple[int, int] = (0, 1),
    index: int = 0,
) -> FactorizationPath:
    """
    Rewrite a path without changing its total weight.

    kind 1: reorder the steps (a given permutation, or an Eulerian re-sequencing)
    kind 2: cycles (d1, d2) with multipliers (r1, r2), n1 r1 = n2 r2; d1 is
            traversed r1 times less and d2 r2 times more
    kind 3: steps (i, j): step i gains p, step j loses p; both stay above m
    kind 4: cycle d of weight n traversed p times less, step index gains n p
    """
    _check_path(graph, path)
    if kind == 1:
        result = _reorder(path, order)
    elif kind == 2:
        if len(cycles) != 2:
            raise PreconditionViolatedError("two cycles", f"got {len(cycles)}")
        result = _swap_cycles(path, cycles[0], cycles[1], *multipliers)
    elif kind == 3:
        result = _shift_weight(graph, path, *steps)
    elif kind == 4:
        if len(cycles) != 1:
            raise PreconditionViolatedError("one cycle", f"got {len(cycles)}")
        result = _absorb_cycle(graph, path, cycles[0], index)
    else:
        raise ValueError(f"unknown transformation kind {kind}")

    if result.total_weight != path.total_weight:
        raise PreconditionViolatedError("total weight preserved")
    _check_path(graph, result)
    logger.debug(f"Kind {kind} rewrite: {len(path.steps)} steps -> {len(result.steps)} steps")
    return result


def find_heavy_cycle(path: FactorizationPath, threshold: int) -> Optional[List[PathStep]]:
    """A cycle whose edges the path traverses at least threshold times each"""
    counts = path.edge_counts()
    heavy = nx.MultiDiGraph()
    for step in path.steps:
        if counts[step.key] >= threshold and not heavy.has_edge(*step.key):
            heavy.add_edge(step.source, step.target, key=step.weight)
    try:
        cycle = nx.find_cycle(heavy)
    except nx.NetworkXNoCycle:
        return None
    return [PathStep(source=u, target=v, weight=k) for u, v, k in cycle]
