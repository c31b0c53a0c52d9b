# scenario/hypergraph.py

from itertools import combinations
from typing import Dict, Iterable, List, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

EDGE_SEPARATOR = "|"

Edge = Tuple[str, str]


def edge(u: str, v: str) -> Edge:
    """Canonical (lexicographically sorted) form of an undirected edge."""
    if u == v:
        raise ValueError(f"Loop on vertex {u!r} is not an edge")
    return (u, v) if u < v else (v, u)


def edge_key(u, v=None) -> str:
    if v is None:
        u, v = u
    a, b = edge(u, v)
    return f"{a}{EDGE_SEPARATOR}{b}"


def parse_edge_key(key: str) -> Edge:
    parts = key.split(EDGE_SEPARATOR)
    if len(parts) != 2 or not all(parts):
        raise ValueError(f"Edge key {key!r} must look like 'u{EDGE_SEPARATOR}v'")
    return edge(parts[0], parts[1])


class Hypergraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    hyperedges: Tuple[Tuple[str, ...], ...]

    @model_validator(mode="after")
    def _hyperedges_inside(self):
        known = set(self.vertices)
        for hyperedge in self.hyperedges:
            unknown = [v for v in hyperedge if v not in known]
            if unknown:
                raise ValueError(f"Hyperedge {list(hyperedge)} uses unknown vertices {unknown}")
        return self


class Graph(BaseModel):
    """Simple undirected graph with string vertex ids and canonical edges."""

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...] = Field(default=())

    @model_validator(mode="before")
    @classmethod
    def _canonical_edges(cls, data):
        if isinstance(data, dict) and "edges" in data:
            data = dict(data)
            data["edges"] = tuple(
                sorted(edge(*pair) for pair in data["edges"])
            )
        return data

    @model_validator(mode="after")
    def _simple(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("Graph vertex ids must be unique")
        known = set(self.vertices)
        seen = set()
        for u, v in self.edges:
            if u not in known or v not in known:
                raise ValueError(f"Edge {edge_key(u, v)} references a missing vertex")
            if (u, v) in seen:
                raise ValueError(f"Parallel edge {edge_key(u, v)}")
            seen.add((u, v))
        return self

    def has_vertex(self, v: str) -> bool:
        return v in self._vertex_set()

    def has_edge(self, u: str, v: str) -> bool:
        if u == v:
            return False
        return edge(u, v) in self._edge_set()

    def neighbors(self, v: str) -> List[str]:
        adjacency = self.adjacency()
        if v not in adjacency:
            raise ValueError(f"Unknown vertex {v!r}")
        return adjacency[v]

    def adjacency(self) -> Dict[str, List[str]]:
        adjacency = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return adjacency

    def edge_key(self, u: str, v: str) -> str:
        if not self.has_edge(u, v):
            raise ValueError(f"{edge_key(u, v)} is not an edge of the graph")
        return edge_key(u, v)

    def relabel(self, mapping: Dict[str, str]) -> "Graph":
        rename = lambda v: mapping.get(v, v)  # noqa: E731
        return Graph(
            vertices=tuple(rename(v) for v in self.vertices),
            edges=tuple((rename(u), rename(v)) for u, v in self.edges),
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def _vertex_set(self):
        return set(self.vertices)

    def _edge_set(self):
        return set(self.edges)


def two_section(h: Hypergraph) -> Graph:
    """Vertices of h, with u~v whenever some hyperedge holds both."""
    edges = set()
    for hyperedge in h.hyperedges:
        for u, v in combinations(hyperedge, 2):
            if u != v:
                edges.add(edge(u, v))
    return Graph(vertices=h.vertices, edges=tuple(edges))


def hypergraph_of_edges(g: Graph) -> Hypergraph:
    return Hypergraph(vertices=g.vertices, hyperedges=tuple(g.edges))


def fresh_vertex(g: Graph, preferred: str, reserved: Iterable[str] = ()) -> str:
    """preferred if unused, otherwise preferred with enough primes appended."""
    taken = set(g.vertices) | set(reserved)
    name = preferred
    while name in taken:
        name += "'"
    return name


def graphs_isomorphic(g: Graph, h: Graph) -> bool:
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())
