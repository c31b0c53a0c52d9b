# inequalities/splitting.py

from fractions import Fraction
from typing import Iterable, Optional, Tuple

from exceptions import ConventionError, DerivationError
from inequalities.inequality import LinearInequality
from models import Convention
from scenario.hypergraph import Graph, edge, fresh_vertex

ZERO = Fraction(0)


def _check_partition(g: Graph, w: str, S, T, B) -> Tuple[list, list, list]:
    if not g.has_vertex(w):
        raise DerivationError(f"Cannot split unknown vertex {w!r}")
    S, T, B = list(S), list(T), list(B)
    parts = S + T + B
    neighbors = set(g.neighbors(w))
    if len(parts) != len(set(parts)) or set(parts) != neighbors:
        raise DerivationError(
            f"(S, T, B) = ({S}, {T}, {B}) is not a partition of the neighbors "
            f"{sorted(neighbors)} of {w}"
        )
    return S, T, B


def _split_names(g: Graph, w: str, s_name: Optional[str], t_name: Optional[str]):
    s_name = s_name or fresh_vertex(g, f"{w}_s")
    t_name = t_name or fresh_vertex(g, f"{w}_t", reserved=[s_name])
    if s_name == t_name:
        raise DerivationError("Split vertices need two different names")
    for name in (s_name, t_name):
        if name != w and g.has_vertex(name):
            raise DerivationError(f"Split vertex name {name!r} is already in use")
    return s_name, t_name


def vertex_split_graph(
    g: Graph,
    w: str,
    S: Iterable[str],
    T: Iterable[str],
    B: Iterable[str] = (),
    s_name: Optional[str] = None,
    t_name: Optional[str] = None,
) -> Graph:
    """Replace w by adjacent s, t with s ~ S u B and t ~ T u B."""
    S, T, B = _check_partition(g, w, S, T, B)
    s_name, t_name = _split_names(g, w, s_name, t_name)
    vertices = [v for v in g.vertices if v != w] + [s_name, t_name]
    edges = [e for e in g.edges if w not in e]
    edges += [edge(s_name, v) for v in S + B]
    edges += [edge(t_name, v) for v in T + B]
    edges.append(edge(s_name, t_name))
    return Graph(vertices=tuple(vertices), edges=tuple(edges))


def vertex_split_ineq(
    ineq: LinearInequality,
    w: str,
    S: Iterable[str],
    T: Iterable[str],
    B: Iterable[str] = (),
    s_name: Optional[str] = None,
    t_name: Optional[str] = None,
) -> LinearInequality:
    """
    Lift a valid ZO inequality through splitting w into s and t.

    The side with the larger total |A_wv| keeps the coefficients on B; the
    other side keeps only its own coefficients and A'_st is minus its total
    |A_wv|. With the default orientation (sum over T <= sum over S):
    A'_sv = A_wv on S u B, A'_tv = A_wv on T, A'_st = -sum_T |A_wv|.
    """
    if ineq.convention != Convention.ZO:
        raise ConventionError(
            "Vertex splitting is only sound for ZO inequalities; convert the PM1 form first"
        )
    g = ineq.graph
    S, T, B = _check_partition(g, w, S, T, B)
    s_name, t_name = _split_names(g, w, s_name, t_name)
    graph = vertex_split_graph(g, w, S, T, B, s_name, t_name)

    weight_s = sum((abs(ineq.coefficient(w, v)) for v in S), ZERO)
    weight_t = sum((abs(ineq.coefficient(w, v)) for v in T), ZERO)
    coeffs = {e: a for e, a in ineq.coeffs.items() if w not in e}
    if weight_t <= weight_s:
        heavy, heavy_side, light, light_side, light_weight = s_name, S, t_name, T, weight_t
    else:
        heavy, heavy_side, light, light_side, light_weight = t_name, T, s_name, S, weight_s
    for v in heavy_side + B:
        coeffs[edge(heavy, v)] = ineq.coefficient(w, v)
    for v in light_side:
        coeffs[edge(light, v)] = ineq.coefficient(w, v)
    coeffs[edge(s_name, t_name)] = -light_weight

    apex = ineq.apex
    if apex == w:
        apex = heavy
    return ineq.with_step(
        f"split:{w}->{s_name},{t_name}:S={','.join(S)}:T={','.join(T)}:B={','.join(B)}",
        graph=graph,
        coeffs=coeffs,
        apex=apex,
    )
