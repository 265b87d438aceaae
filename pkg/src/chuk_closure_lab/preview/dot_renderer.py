# src/chuk_closure_lab/preview/dot_renderer.py
"""
DOT Renderer - Converts automata and graphs to Graphviz digraphs.

Nodes are added in canonical numbering order and edges in sorted order, so
the same object always renders to the same source text. Rendering to an
image needs the Graphviz executables; the DOT source does not.
"""

from collections import defaultdict
from typing import Dict, List, Tuple, Union

import graphviz

from ..factorization.graph import INITIAL, FactorizationGraph, GraphEdge, Vertex, vertex_name
from ..freegroup.stallings import StallingsGraph
from ..languages.automata import Dfa

Renderable = Union[Dfa, StallingsGraph, FactorizationGraph]


class DotRenderer:
    """Renders closure lab objects as Graphviz digraphs"""

    @staticmethod
    def _digraph(name: str, start: str) -> graphviz.Digraph:
        g = graphviz.Digraph(name, graph_attr={"rankdir": "LR"})
        g.node("start", label="", shape="plaintext")
        g.edge("start", start)
        return g

    @staticmethod
    def render_dfa(dfa: Dfa) -> graphviz.Digraph:
        """One node per state; parallel transitions share an edge"""
        g = DotRenderer._digraph("dfa", str(dfa.initial))
        for q in range(dfa.num_states):
            g.node(str(q), shape="doublecircle" if q in dfa.finals else "circle")
        for q in range(dfa.num_states):
            grouped: Dict[int, List[str]] = defaultdict(list)
            for a, target in enumerate(dfa.transitions[q]):
                grouped[target].append(dfa.alphabet[a])
            for target in sorted(grouped):
                g.edge(str(q), str(target), label=graphviz.nohtml(",".join(grouped[target])))
        return g

    @staticmethod
    def render_stallings(graph: StallingsGraph) -> graphviz.Digraph:
        """The base vertex is the start and the only accepting vertex"""
        g = DotRenderer._digraph("stallings", str(graph.base))
        for v in range(graph.num_vertices):
            g.node(str(v), shape="doublecircle" if v == graph.base else "circle")
        for p, x, q in sorted(graph.edges):
            g.edge(str(p), str(q), label=graphviz.nohtml(x))
        return g

    @staticmethod
    def render_factorization_graph(graph: FactorizationGraph) -> graphviz.Digraph:
        """Vertices (a,b) between initial and final; edges labelled by weight or class"""
        g = DotRenderer._digraph("factorizations", "initial")
        g.node("initial", shape="circle")
        for v in graph.vertices:
            g.node(vertex_name(v), shape="box")
        g.node("final", shape="doublecircle")
        order = {v: i for i, v in enumerate(graph.vertices)}

        def rank(vertex: Vertex) -> int:
            return order.get(vertex, -1 if vertex == INITIAL else len(order))

        def key(edge: GraphEdge) -> Tuple[int, int, bool, int]:
            amount = edge.weight if edge.weight is not None else edge.residue
            return rank(edge.source), rank(edge.target), edge.is_symbolic, amount or 0

        for edge in sorted(graph.edges, key=key):
            label = graphviz.nohtml(edge.label(graph.m, graph.p))
            g.edge(vertex_name(edge.source), vertex_name(edge.target), label=label)
        return g


def to_digraph(obj: Renderable) -> graphviz.Digraph:
    """The Graphviz digraph of a Dfa, a Stallings graph or a factorization graph"""
    if isinstance(obj, Dfa):
        return DotRenderer.render_dfa(obj)
    if isinstance(obj, StallingsGraph):
        return DotRenderer.render_stallings(obj)
    if isinstance(obj, FactorizationGraph):
        return DotRenderer.render_factorization_graph(obj)
    raise TypeError(f"cannot render {type(obj).__name__} as DOT")


def export_dot(obj: Renderable) -> str:
    """DOT source text"""
    return to_digraph(obj).source
