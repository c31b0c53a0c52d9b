# inequalities/contraction.py

from fractions import Fraction
from typing import Optional, Tuple

from exceptions import ConventionError, DerivationError
from inequalities.inequality import LinearInequality
from models import Convention
from scenario.hypergraph import Graph, edge, edge_key, fresh_vertex

ZERO = Fraction(0)


def _merged_name(g: Graph, u: str, v: str, w_name: Optional[str]) -> str:
    if w_name is None:
        return fresh_vertex(g, f"{u}+{v}")
    if w_name not in (u, v) and g.has_vertex(w_name):
        raise DerivationError(f"Contracted vertex name {w_name!r} is already in use")
    return w_name


def edge_contract_graph(g: Graph, uv: Tuple[str, str], w_name: Optional[str] = None) -> Graph:
    u, v = uv
    if not g.has_edge(u, v):
        raise DerivationError(f"{edge_key(u, v)} is not an edge and cannot be contracted")
    w = _merged_name(g, u, v, w_name)
    vertices = [x for x in g.vertices if x not in (u, v)]
    vertices.append(w)
    edges = {e for e in g.edges if u not in e and v not in e}
    for x in set(g.neighbors(u)) | set(g.neighbors(v)):
        if x not in (u, v):
            edges.add(edge(w, x))
    return Graph(vertices=tuple(vertices), edges=tuple(sorted(edges)))


def edge_contract_ineq(
    ineq: LinearInequality, uv: Tuple[str, str], w_name: Optional[str] = None
) -> LinearInequality:
    """Merge u and v into w; coefficients towards common neighbors add up."""
    if ineq.convention != Convention.ZO:
        raise ConventionError(
            "Edge contraction is only sound for ZO inequalities; convert the PM1 form first"
        )
    u, v = uv
    graph = edge_contract_graph(ineq.graph, uv, w_name)
    w = _merged_name(ineq.graph, u, v, w_name)
    coeffs = {}
    for (a, b), value in ineq.coeffs.items():
        if {a, b} == {u, v}:
            continue
        a = w if a in (u, v) else a
        b = w if b in (u, v) else b
        key = edge(a, b)
        coeffs[key] = coeffs.get(key, ZERO) + value
    apex = w if ineq.apex in (u, v) else ineq.apex
    return ineq.with_step(f"contract:{edge_key(u, v)}->{w}", graph=graph, coeffs=coeffs, apex=apex)
