# tests/scenario/test_hypergraph.py

import pytest
from pydantic import ValidationError

from scenario.hypergraph import (
    Graph,
    Hypergraph,
    edge,
    edge_key,
    fresh_vertex,
    graphs_isomorphic,
    parse_edge_key,
    two_section,
)


def test_edge_is_sorted():
    assert edge("b", "a") == ("a", "b")
    assert edge_key("y", "x") == "x|y"
    assert parse_edge_key("b|a") == ("a", "b")


def test_loops_and_bad_keys_rejected():
    with pytest.raises(ValueError):
        edge("a", "a")
    with pytest.raises(ValueError):
        parse_edge_key("a|b|c")


def test_two_section_of_a_triangle_context():
    h = Hypergraph(vertices=("1", "2", "3", "4"), hyperedges=(("1", "2", "3"), ("3", "4")))
    g = two_section(h)
    assert set(g.edges) == {("1", "2"), ("1", "3"), ("2", "3"), ("3", "4")}


def test_graph_rejects_parallel_edges_and_unknown_vertices():
    with pytest.raises(ValidationError):
        Graph(vertices=("a", "b"), edges=(("a", "b"), ("b", "a")))
    with pytest.raises(ValidationError):
        Graph(vertices=("a",), edges=(("a", "b"),))


def test_neighbors_and_relabel():
    g = Graph(vertices=("a", "b", "c"), edges=(("a", "b"), ("b", "c")))
    assert sorted(g.neighbors("b")) == ["a", "c"]
    h = g.relabel({"b": "z"})
    assert h.has_edge("a", "z") and h.has_edge("c", "z")
    assert not h.has_vertex("b")
    assert g.edge_key("c", "b") == "b|c"
    with pytest.raises(ValueError):
        g.edge_key("a", "c")


def test_fresh_vertex_appends_primes():
    g = Graph(vertices=("w", "w'"), edges=())
    assert fresh_vertex(g, "v") == "v"
    assert fresh_vertex(g, "w") == "w''"
    assert fresh_vertex(g, "v", reserved=["v"]) == "v'"


def test_isomorphism_ignores_names():
    square = Graph(vertices=("a", "b", "c", "d"), edges=(("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")))
    renamed = square.relabel({"a": "1", "b": "2", "c": "3", "d": "4"})
    path = Graph(vertices=("a", "b", "c", "d"), edges=(("a", "b"), ("b", "c"), ("c", "d")))
    assert graphs_isomorphic(square, renamed)
    assert not graphs_isomorphic(square, path)
