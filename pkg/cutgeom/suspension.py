# cutgeom/suspension.py

from pydantic import BaseModel, ConfigDict

from exceptions import ScenarioError
from scenario.hypergraph import Graph, edge

DEFAULT_APEX = "*"


class SuspensionGraph(BaseModel):
    """Base graph plus an apex adjacent to every base vertex."""

    model_config = ConfigDict(frozen=True)

    base: Graph
    apex: str
    graph: Graph

    @property
    def vertices(self):
        return self.graph.vertices

    @property
    def edges(self):
        return self.graph.edges

    def apex_edge(self, v: str):
        return edge(self.apex, v)


def suspension(g: Graph, apex: str = DEFAULT_APEX) -> SuspensionGraph:
    if g.has_vertex(apex):
        raise ScenarioError(f"Apex id {apex!r} already names a vertex of the graph")
    full = Graph(
        vertices=(apex,) + tuple(g.vertices),
        edges=tuple(g.edges) + tuple(edge(apex, v) for v in g.vertices),
    )
    return SuspensionGraph(base=g, apex=apex, graph=full)


def as_graph(g) -> Graph:
    return g.graph if isinstance(g, SuspensionGraph) else g


def apex_of(g):
    return g.apex if isinstance(g, SuspensionGraph) else None
