# inequalities/triangular.py
"""
Triangular elimination: an edge uv is replaced by a fresh vertex w adjacent
to u and v, and a valid inequality is lifted by adding triangle inequalities
on {u, v, w} until the uv coefficient vanishes.
"""

from fractions import Fraction
from typing import Iterable, List, Mapping, Optional, Sequence, Tuple

from exceptions import ConventionError, DerivationError
from inequalities.inequality import LinearInequality, add_inequalities
from models import Convention
from scenario.hypergraph import Edge, Graph, edge, edge_key, fresh_vertex
from utils.rationals import format_fraction

ZERO = Fraction(0)

# order of the four triangle inequalities and of the multiplier tuples
TRIANGLE_PATTERNS = ("all", "uv", "uw", "vw")


def triangle_inequalities(g: Graph, triangle: Sequence[str]) -> List[LinearInequality]:
    """
    -P_uw - P_vw - P_uv <= 1 followed by the three patterns with exactly one
    negative edge (on uv, uw and vw in that order).
    """
    if len(set(triangle)) != 3:
        raise DerivationError(f"{list(triangle)} is not three distinct vertices")
    u, v, w = triangle
    for a, b in ((u, v), (u, w), (v, w)):
        if not g.has_edge(a, b):
            raise DerivationError(f"{u}, {v}, {w} is not a triangle: {edge_key(a, b)} missing")
    uv, uw, vw = edge(u, v), edge(u, w), edge(v, w)
    patterns = [
        {uv: -1, uw: -1, vw: -1},
        {uv: -1, uw: 1, vw: 1},
        {uv: 1, uw: -1, vw: 1},
        {uv: 1, uw: 1, vw: -1},
    ]
    return [
        LinearInequality(
            graph=g,
            coeffs=coeffs,
            bound=1,
            convention=Convention.PM1,
            trace=(f"triangle:{u},{v},{w}:{name}",),
        )
        for coeffs, name in zip(patterns, TRIANGLE_PATTERNS)
    ]


def _new_vertex_names(g: Graph, eliminated: Sequence[Edge], names: Optional[Mapping]):
    names = {edge(*k): v for k, v in (names or {}).items()}
    result = {}
    taken = set()
    for e in eliminated:
        name = names.get(e) or fresh_vertex(g, f"{e[0]}~{e[1]}", reserved=taken)
        if name in taken or g.has_vertex(name):
            raise DerivationError(f"New vertex name {name!r} is already in use")
        taken.add(name)
        result[e] = name
    return result


def triangular_eliminate_graph(
    g: Graph,
    eliminated: Iterable,
    extra_edges: Iterable = (),
    names: Optional[Mapping] = None,
) -> Graph:
    """
    Remove each edge u_i v_i of `eliminated`, add a fresh w_i adjacent to
    u_i and v_i, then add `extra_edges` (each must touch known vertices).
    """
    graph, _ = _eliminate_graph(g, eliminated, extra_edges, names)
    return graph


def _eliminate_graph(g, eliminated, extra_edges, names):
    eliminated = [edge(*e) for e in eliminated]
    if len(set(eliminated)) != len(eliminated):
        raise DerivationError("An edge is listed twice for elimination")
    for e in eliminated:
        if not g.has_edge(*e):
            raise DerivationError(f"{edge_key(e)} is not an edge and cannot be eliminated")
    new_names = _new_vertex_names(g, eliminated, names)
    vertices = list(g.vertices) + [new_names[e] for e in eliminated]
    known = set(vertices)
    edges = [e for e in g.edges if e not in set(eliminated)]
    for (u, v), w in new_names.items():
        edges += [edge(u, w), edge(v, w)]
    for a, b in extra_edges:
        if a not in known or b not in known:
            raise DerivationError(f"Extra edge {a}-{b} references an unknown vertex")
        e = edge(a, b)
        if e not in edges:
            edges.append(e)
    return Graph(vertices=tuple(vertices), edges=tuple(edges)), new_names


def default_multipliers(coefficient: Fraction) -> Tuple[Fraction, ...]:
    """Cancel A_uv with the pattern whose uv sign opposes it."""
    if coefficient > 0:
        return (ZERO, coefficient, ZERO, ZERO)
    if coefficient < 0:
        return (ZERO, ZERO, -coefficient, ZERO)
    return (ZERO, ZERO, ZERO, ZERO)


def triangular_eliminate_ineq(
    ineq: LinearInequality,
    eliminated: Iterable,
    multipliers: Optional[Mapping] = None,
    extra_edges: Iterable = (),
    names: Optional[Mapping] = None,
) -> LinearInequality:
    """
    Lift a valid PM1 inequality through a triangular elimination.

    Args:
        ineq: inequality on the source graph.
        eliminated: edges u_i v_i to remove.
        multipliers: per eliminated edge, four nonnegative weights for the
            triangle inequalities in TRIANGLE_PATTERNS order. Missing edges
            use default_multipliers.
        extra_edges: optional additional edges at the new vertices.
        names: optional edge -> new vertex id.

    Returns:
        The lifted inequality, whose bound grew by the sum of multipliers.
    """
    if ineq.convention != Convention.PM1:
        raise ConventionError("Triangular elimination works on PM1 inequalities; convert first")
    eliminated = [edge(*e) for e in eliminated]
    extra_edges = list(extra_edges)
    if not eliminated and not extra_edges:
        return ineq
    graph, new_names = _eliminate_graph(ineq.graph, eliminated, extra_edges, names)
    multipliers = {edge(*k): tuple(Fraction(m) for m in v) for k, v in (multipliers or {}).items()}

    # work on the union graph where the eliminated edges still exist
    union = Graph(
        vertices=graph.vertices,
        edges=tuple(dict.fromkeys(tuple(graph.edges) + tuple(eliminated))),
    )
    lifted = LinearInequality(
        graph=union,
        coeffs=ineq.coeffs,
        bound=ineq.bound,
        convention=ineq.convention,
        apex=ineq.apex,
        trace=ineq.trace,
    )
    steps = []
    for e in eliminated:
        weights = multipliers.get(e) or default_multipliers(ineq.coefficient(*e))
        if len(weights) != 4 or any(m < 0 for m in weights):
            raise DerivationError(
                f"Multipliers for {edge_key(e)} must be four nonnegative rationals"
            )
        u, v = e
        for t, m in zip(triangle_inequalities(union, (u, v, new_names[e])), weights):
            if m:
                lifted = add_inequalities(lifted, t, m)
        if lifted.coefficient(u, v) != 0:
            raise DerivationError(
                f"Multipliers {[format_fraction(m) for m in weights]} leave "
                f"{format_fraction(lifted.coefficient(u, v))} on {edge_key(e)}"
            )
        steps.append(f"{edge_key(e)}->{new_names[e]}[{','.join(format_fraction(m) for m in weights)}]")

    return ineq.with_step(
        "te:" + ";".join(steps),
        graph=graph,
        coeffs=lifted.coeffs,
        bound=lifted.bound,
    )
