# cutgeom/cuts.py

from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Union

import numpy as np

from config import Limits, resolve_limits
from cutgeom.suspension import SuspensionGraph, apex_of, as_graph
from cutgeom.vectors import CorrelationVector
from exceptions import ScenarioError, SizeLimitExceeded
from models import Convention
from scenario.hypergraph import Graph

ONE = Fraction(1)


def reference_vertex(g: Union[Graph, SuspensionGraph], reference: Optional[str] = None) -> str:
    graph = as_graph(g)
    if not graph.vertices:
        raise ScenarioError("Cut vectors need a graph with at least one vertex")
    if reference is None:
        reference = apex_of(g) or graph.vertices[0]
    if not graph.has_vertex(reference):
        raise ScenarioError(f"Reference vertex {reference!r} is not in the graph")
    return reference


def check_vertex_limit(count: int, limit: int, what="cut enumeration"):
    if count > limit:
        raise SizeLimitExceeded(
            f"{what} on {count} vertices exceeds the limit of {limit} "
            "(raise CONTEXTCUT_LIMIT or --limit-vertices)"
        )


def sign_matrix(free: int) -> np.ndarray:
    """All ±1 rows of length `free`; row k has -1 where bit j of k is set."""
    rows = np.arange(2**free, dtype=np.int64)[:, None]
    bits = (rows >> np.arange(free, dtype=np.int64)) & 1
    return (1 - 2 * bits).astype(np.int8)


def cut_assignments(
    g: Union[Graph, SuspensionGraph], reference: Optional[str] = None
) -> Iterator[Dict[str, int]]:
    """±1 assignments with the reference vertex pinned to +1, in index order."""
    graph = as_graph(g)
    reference = reference_vertex(g, reference)
    free = [v for v in graph.vertices if v != reference]
    for k in range(2 ** len(free)):
        assignment = {reference: 1}
        for j, v in enumerate(free):
            assignment[v] = -1 if (k >> j) & 1 else 1
        yield assignment


def cut_vector(
    g: Union[Graph, SuspensionGraph],
    assignment: Dict[str, int],
    convention: Convention = Convention.PM1,
) -> CorrelationVector:
    graph = as_graph(g)
    entries = {}
    for u, v in graph.edges:
        product = assignment[u] * assignment[v]
        entries[(u, v)] = (
            Fraction(product) if convention == Convention.PM1 else Fraction(1 - product, 2)
        )
    return CorrelationVector(
        graph=graph, entries=entries, convention=convention, apex=apex_of(g)
    )


def enumerate_cut_vectors(
    g: Union[Graph, SuspensionGraph],
    convention: Convention = Convention.PM1,
    reference: Optional[str] = None,
    limits: Optional[Limits] = None,
) -> List[CorrelationVector]:
    """One vector per assignment modulo the global flip: 2^(|V|-1) vectors."""
    limits = resolve_limits(limits)
    graph = as_graph(g)
    check_vertex_limit(len(graph.vertices), limits.vertices)
    return [
        cut_vector(g, assignment, convention)
        for assignment in cut_assignments(g, reference)
    ]
