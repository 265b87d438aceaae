"""
Tests for the DOT renderer.
"""

import graphviz
import pytest

from chuk_closure_lab.factorization import build_factorization_graph
from chuk_closure_lab.freegroup import GroupWord, fold_stallings
from chuk_closure_lab.preview import export_dot, to_digraph
from chuk_closure_lab.terms import parse_term


def edge_lines(dot):
    return [line for line in dot.splitlines() if " -> " in line and "label=" in line]


class TestDotRenderer:
    """Test DotRenderer class"""

    def test_digraph(self, even_a):
        """Test a Graphviz digraph laid out left to right"""
        g = to_digraph(even_a)
        assert isinstance(g, graphviz.Digraph)
        assert g.name == "dfa"
        assert g.graph_attr["rankdir"] == "LR"
        assert export_dot(even_a) == g.source

    def test_render_dfa(self, even_a):
        """Test states, the start arrow and one edge per transition"""
        dot = export_dot(even_a)
        assert dot.startswith("digraph dfa {\n")
        assert dot.endswith("}\n")
        assert "\tstart -> 0\n" in dot
        assert dot.count("doublecircle") == len(even_a.finals)
        assert len(edge_lines(dot)) == even_a.num_states

    def test_parallel_transitions_share_an_edge(self, compile_text):
        """Test letters to the same target are joined"""
        dot = export_dot(compile_text("(a + b)^+"))
        assert any('label="a,b"' in line for line in edge_lines(dot))

    def test_render_stallings(self):
        """Test the 2-cycle of <a^2>"""
        dot = export_dot(fold_stallings([GroupWord.parse("aa")]))
        assert dot.startswith("digraph stallings {\n")
        assert "\t0 [shape=doublecircle]\n" in dot
        assert "\t0 -> 1 [label=a]\n" in dot
        assert "\t1 -> 0 [label=a]\n" in dot

    def test_render_factorization_graph(self, compile_text):
        """Test initial, final and every edge"""
        graph = build_factorization_graph(parse_term("a^w"), compile_text("aa + aaa"), k=4)
        dot = export_dot(graph)
        assert "\tstart -> initial\n" in dot
        assert "\tfinal [shape=doublecircle]\n" in dot
        assert len(edge_lines(dot)) == len(graph.edges)

    def test_pair_vertices_are_quoted(self, compile_text):
        """Test (a,b) names are valid DOT identifiers"""
        graph = build_factorization_graph(parse_term("a^w"), compile_text("aa + aaa"), k=4)
        dot = export_dot(graph)
        for vertex in graph.vertices:
            assert f'\t"({vertex[0]},{vertex[1]})" [shape=box]\n' in dot

    def test_symbolic_labels(self, compile_text):
        """Test residue classes are labelled"""
        graph = build_factorization_graph(
            parse_term("a^w"), compile_text("(aa)^+"), k=10, mode="symbolic"
        )
        assert "mod 2, >=" in export_dot(graph)

    def test_deterministic(self, compile_text):
        """Test the same graph renders to the same text"""
        graph = build_factorization_graph(parse_term("b a^w b"), compile_text("ba^+ + a^+b"), k=4)
        assert export_dot(graph) == export_dot(graph)

    def test_unsupported_object(self):
        """Test other objects are rejected"""
        with pytest.raises(TypeError, match="cannot render str"):
            export_dot("a")
