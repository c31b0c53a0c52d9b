# cutgeom/membership.py

from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from config import Limits, resolve_limits
from cutgeom.cuts import check_vertex_limit, cut_vector, reference_vertex, sign_matrix
from cutgeom.suspension import SuspensionGraph, as_graph
from cutgeom.vectors import CorrelationVector
from exceptions import CertificateError, ConventionError
from inequalities.inequality import LinearInequality
from logger import StructuredLogger
from models import Convention
from scenario.hypergraph import Graph
from utils.lp import find_feasible_point
from utils.rationals import integerize

logger = StructuredLogger("cutgeom.membership")

ZERO = Fraction(0)
ONE = Fraction(1)


class MembershipVerdict(BaseModel):
    """
    inside: convex weights over cut vectors reproducing the vector.
    outside: an inequality every cut vector satisfies and the vector violates.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    inside: bool
    weights: Tuple[Tuple[Fraction, CorrelationVector], ...] = ()
    separator: Optional[LinearInequality] = None


def _cut_columns(graph: Graph, reference: str, convention: Convention) -> np.ndarray:
    """Edge values of every cut, one row per cut, as integers."""
    free = [v for v in graph.vertices if v != reference]
    signs = sign_matrix(len(free)).astype(np.int64)
    position = {v: j for j, v in enumerate(free)}
    columns = np.ones((signs.shape[0], len(graph.edges)), dtype=np.int64)
    for k, (u, v) in enumerate(graph.edges):
        for w in (u, v):
            if w != reference:
                columns[:, k] *= signs[:, position[w]]
    if convention == Convention.ZO:
        # PM1 product is +1 when both ends share a side, -1 across the cut; ZO maps these to 0 and 1
        columns = (1 - columns) // 2
    return columns


def _assignment_of(graph: Graph, reference: str, index: int):
    free = [v for v in graph.vertices if v != reference]
    assignment = {reference: 1}
    for j, v in enumerate(free):
        assignment[v] = -1 if (index >> j) & 1 else 1
    return assignment


def cut_membership(
    g: Union[Graph, SuspensionGraph],
    p: CorrelationVector,
    limits: Optional[Limits] = None,
) -> MembershipVerdict:
    """
    Exact LP over all cut vectors of g: is p a convex combination of them?

    The verdict carries either the convex weights or a separating
    inequality, both re-checked against every cut vector.
    """
    limits = resolve_limits(limits)
    graph = as_graph(g)
    if p.graph != graph:
        raise ConventionError("Vector is not indexed by the edges of this graph")
    check_vertex_limit(len(graph.vertices), limits.vertices)
    reference = reference_vertex(g)
    child_logger = logger.child(vertices=len(graph.vertices), edges=len(graph.edges))

    columns = _cut_columns(graph, reference, p.convention)
    edges = list(graph.edges)
    a = [[Fraction(int(x)) for x in columns[:, k]] for k in range(len(edges))]
    a.append([ONE] * columns.shape[0])
    b = [p.entries[e] for e in edges] + [ONE]
    result = find_feasible_point(a, b)

    if result.feasible:
        weights = []
        for index, weight in enumerate(result.x):
            if weight != 0:
                assignment = _assignment_of(graph, reference, index)
                weights.append((weight, cut_vector(g, assignment, p.convention)))
        verdict = MembershipVerdict(inside=True, weights=tuple(weights))
        _verify_inside(p, verdict)
        child_logger.debug("Vector inside the cut polytope", support=len(weights))
        return verdict

    y = result.farkas
    coeffs = {e: y[k] for k, e in enumerate(edges)}
    coeffs, bound = integerize(coeffs, -y[-1])
    separator = LinearInequality(
        graph=graph,
        coeffs=coeffs,
        bound=bound,
        convention=p.convention,
        apex=p.apex,
        trace=("separator:cut_membership",),
    )
    _verify_separator(columns, edges, p, separator)
    child_logger.debug("Vector outside the cut polytope", violation=separator.evaluate(p) - bound)
    return MembershipVerdict(inside=False, separator=separator)


def _verify_inside(p: CorrelationVector, verdict: MembershipVerdict):
    total = sum((w for w, _ in verdict.weights), ZERO)
    if total != ONE or any(w < 0 for w, _ in verdict.weights):
        raise CertificateError("Membership weights are not a probability vector")
    for e in p.graph.edges:
        if sum((w * c.entries[e] for w, c in verdict.weights), ZERO) != p.entries[e]:
            raise CertificateError("Membership weights do not reproduce the vector")


def _verify_separator(columns, edges, p: CorrelationVector, separator: LinearInequality):
    # integerize() leaves integral coefficients and bound
    coeffs = np.array([int(separator.coeffs.get(e, ZERO)) for e in edges], dtype=object)
    values = columns.astype(object).dot(coeffs)
    if any(v > separator.bound for v in values):
        raise CertificateError("Separating inequality is violated by a cut vector")
    if separator.evaluate(p) <= separator.bound:
        raise CertificateError("Separating inequality does not cut off the vector")


def is_in_cut_polytope(g, p: CorrelationVector, limits: Optional[Limits] = None) -> bool:
    return cut_membership(g, p, limits).inside
