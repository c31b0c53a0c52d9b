# catalog/inequalities.py

from fractions import Fraction
from typing import Dict, Sequence

from catalog.scenarios import bell_scenario, n_cycle_scenario
from cutgeom.suspension import DEFAULT_APEX, suspension
from exceptions import SelectorError
from extension.extended import copy_id, extend_hypergraph
from inequalities.inequality import LinearInequality
from models import Convention
from scenario.hypergraph import Edge, edge
from scenario.scenario import compatibility_graph

# coefficient of <A_i B_j> in the I3322 inequality, keyed by (i, j)
I3322_CORRELATIONS = {
    (1, 1): -1,
    (1, 2): -1,
    (1, 3): -1,
    (2, 1): -1,
    (2, 2): -1,
    (2, 3): 1,
    (3, 1): -1,
    (3, 2): 1,
}
I3322_MEANS = ("A1", "A2", "B1", "B2")


def _bell_context(n: int, i: int, j: int) -> int:
    """1-based index of context (A_i, B_j) in bell_scenario(n)."""
    return (i - 1) * n + j


def i3322_inequality() -> LinearInequality:
    s = bell_scenario(3)
    graph = suspension(compatibility_graph(s), DEFAULT_APEX).graph
    coeffs: Dict[Edge, Fraction] = {edge(DEFAULT_APEX, m): Fraction(1) for m in I3322_MEANS}
    for (i, j), c in I3322_CORRELATIONS.items():
        coeffs[edge(f"A{i}", f"B{j}")] = Fraction(c)
    return LinearInequality(
        graph=graph,
        coeffs=coeffs,
        bound=4,
        convention=Convention.PM1,
        apex=DEFAULT_APEX,
        trace=("catalog:i3322",),
    )


def i3322_extended() -> LinearInequality:
    """
    I3322 on the suspension of the extended graph: every correlation on the
    copies of its own context, means on the first copies, and +1 on the
    ten edges tying each used copy to the first copy of its measurement.
    """
    s = bell_scenario(3)
    graph = suspension(extend_hypergraph(s).graph, DEFAULT_APEX).graph
    a = lambda i, j: copy_id(f"A{i}", _bell_context(3, i, j))  # noqa: E731
    b = lambda i, j: copy_id(f"B{j}", _bell_context(3, i, j))  # noqa: E731
    coeffs: Dict[Edge, Fraction] = {
        edge(DEFAULT_APEX, a(1, 1)): Fraction(1),
        edge(DEFAULT_APEX, a(2, 1)): Fraction(1),
        edge(DEFAULT_APEX, b(1, 1)): Fraction(1),
        edge(DEFAULT_APEX, b(1, 2)): Fraction(1),
    }
    for (i, j), c in I3322_CORRELATIONS.items():
        coeffs[edge(a(i, j), b(i, j))] = Fraction(c)
    couplings = [
        (a(1, 1), a(1, 2)),
        (a(1, 1), a(1, 3)),
        (a(2, 1), a(2, 2)),
        (a(2, 1), a(2, 3)),
        (a(3, 1), a(3, 2)),
        (b(1, 1), b(2, 1)),
        (b(1, 1), b(3, 1)),
        (b(1, 2), b(2, 2)),
        (b(1, 2), b(3, 2)),
        (b(1, 3), b(2, 3)),
    ]
    for u, v in couplings:
        coeffs[edge(u, v)] = Fraction(1)
    return LinearInequality(
        graph=graph,
        coeffs=coeffs,
        bound=14,
        convention=Convention.PM1,
        apex=DEFAULT_APEX,
        trace=("catalog:i3322-ext",),
    )


def _chained_terms(n: int):
    """((i, j), sign) for every <A_i B_j> of the chained inequality."""
    terms = [((i, i), 1) for i in range(1, n + 1)]
    terms += [((i + 1, i), 1) for i in range(1, n)]
    terms.append(((1, n), -1))
    return terms


def chained_inequality(n: int) -> LinearInequality:
    """
    sum_i <A_i B_i> + sum_{i<n} <B_i A_{i+1}> - <B_n A_1> <= 2n - 2.
    n = 2 is CHSH.
    """
    if n < 2:
        raise SelectorError(f"Chained inequalities need n >= 2, got {n}")
    s = bell_scenario(n)
    graph = suspension(compatibility_graph(s), DEFAULT_APEX).graph
    coeffs = {edge(f"A{i}", f"B{j}"): Fraction(c) for (i, j), c in _chained_terms(n)}
    return LinearInequality(
        graph=graph,
        coeffs=coeffs,
        bound=2 * n - 2,
        convention=Convention.PM1,
        apex=DEFAULT_APEX,
        trace=(f"catalog:chained:{n}",),
    )


def chained_extended(n: int) -> LinearInequality:
    """Chained inequality on the extended graph: 2n coupling terms, bound 4n - 2."""
    if n < 2:
        raise SelectorError(f"Chained inequalities need n >= 2, got {n}")
    s = bell_scenario(n)
    graph = suspension(extend_hypergraph(s).graph, DEFAULT_APEX).graph
    coeffs: Dict[Edge, Fraction] = {}
    used = {}
    for (i, j), c in _chained_terms(n):
        k = _bell_context(n, i, j)
        x, y = copy_id(f"A{i}", k), copy_id(f"B{j}", k)
        coeffs[edge(x, y)] = Fraction(c)
        used.setdefault(f"A{i}", []).append(k)
        used.setdefault(f"B{j}", []).append(k)
    for m, contexts in used.items():
        first, second = sorted(contexts)
        coeffs[edge(copy_id(m, first), copy_id(m, second))] = Fraction(1)
    return LinearInequality(
        graph=graph,
        coeffs=coeffs,
        bound=4 * n - 2,
        convention=Convention.PM1,
        apex=DEFAULT_APEX,
        trace=(f"catalog:chained-ext:{n}",),
    )


def ncycle_extended_inequality(n: int, signs: Sequence[int]) -> LinearInequality:
    """
    sum of g_i over the 2n edges of the extended n-cycle (the n context
    edges in context order, then the n coupling edges in measurement order)
    <= 2n - 2, for signs g with an odd number of -1.
    """
    s = n_cycle_scenario(n)
    signs = tuple(signs)
    if len(signs) != 2 * n or any(g not in (-1, 1) for g in signs):
        raise SelectorError(f"Need {2 * n} signs in {{-1, 1}}")
    if signs.count(-1) % 2 == 0:
        raise SelectorError("The number of -1 signs must be odd")
    ext = extend_hypergraph(s)
    edges = [edge(*context) for context in ext.relabeled_contexts]
    edges += [edge(*ext.copies[m]) for m in s.measurements]
    return LinearInequality(
        graph=ext.graph,
        coeffs={e: Fraction(g) for e, g in zip(edges, signs)},
        bound=2 * n - 2,
        convention=Convention.PM1,
        trace=(f"catalog:ncycle-ext:{n}",),
    )
