# inequalities/extend.py

from fractions import Fraction
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from cutgeom.suspension import suspension
from exceptions import ConventionError, DerivationError
from extension.extended import ExtendedScenario, extend_hypergraph
from inequalities.inequality import LinearInequality
from logger import StructuredLogger
from models import Convention
from scenario.hypergraph import Edge, edge, edge_key
from scenario.scenario import Scenario, compatibility_graph
from utils.rationals import format_fraction

logger = StructuredLogger("inequalities.extend")

ZERO = Fraction(0)


class CopyAssignment(BaseModel):
    """Which copies carry each base edge term, and each measurement's reference copy."""

    model_config = ConfigDict(frozen=True)

    edge_copies: Dict[Edge, Tuple[str, str]]
    reference: Dict[str, str]

    @model_validator(mode="before")
    @classmethod
    def _canonical_keys(cls, data):
        """Key (y, x) -> (cy, cx) is stored as (x, y) -> (cx, cy)."""
        if isinstance(data, dict) and "edge_copies" in data:
            data = dict(data)
            copies = {}
            for (x, y), (cx, cy) in data["edge_copies"].items():
                key, value = ((x, y), (cx, cy)) if edge(x, y) == (x, y) else ((y, x), (cy, cx))
                if key in copies and copies[key] != value:
                    raise ValueError(f"Conflicting copies for {edge_key(*key)}")
                copies[key] = value
            data["edge_copies"] = copies
        return data


def _first_shared_context(s: Scenario, x: str, y: str) -> int:
    for i, context in enumerate(s.contexts):
        if x in context and y in context:
            return i
    raise DerivationError(f"{x} and {y} share no context")


def default_copy_assignment(ineq: LinearInequality, s: Scenario) -> CopyAssignment:
    """
    Every edge term goes to the copies of the first context holding both
    endpoints; the reference copy of a measurement is its lowest-indexed
    used copy, or its lowest-indexed copy when no term uses it.
    """
    ext = extend_hypergraph(s)
    edge_copies = {}
    used: Dict[str, list] = {m: [] for m in s.measurements}
    for (x, y) in ineq.edge_terms():
        i = _first_shared_context(s, x, y)
        cx, cy = ext.copy_of(x, i), ext.copy_of(y, i)
        edge_copies[(x, y)] = (cx, cy)
        used[x].append(cx)
        used[y].append(cy)
    reference = {}
    for m in s.measurements:
        candidates = used[m] or list(ext.copies[m])
        reference[m] = min(candidates, key=ext.context_of)
    return CopyAssignment(edge_copies=edge_copies, reference=reference)


def extend_inequality(
    ineq: LinearInequality, s: Scenario, ca: Optional[CopyAssignment] = None
) -> LinearInequality:
    """
    Move a PM1 inequality on the suspension of the compatibility graph onto
    the suspension of the extended graph.

    Each term a * P_xy carried by copies x^j, y^k adds |a| to the coupling
    edge from every non-reference copy it uses to the reference copy, and the
    bound grows by the total coupling weight. Vertex terms sit on reference
    copies for free.
    """
    if ineq.convention != Convention.PM1:
        raise ConventionError("extend_inequality expects a PM1 inequality")
    base_graph = compatibility_graph(s)
    ext = extend_hypergraph(s)
    apex = ineq.apex
    target = suspension(ext.graph, apex).graph if apex is not None else ext.graph
    for u, v in ineq.graph.edges:
        if apex in (u, v):
            continue
        if not base_graph.has_edge(u, v):
            raise DerivationError(
                f"Inequality edge {edge_key(u, v)} is not in the scenario's compatibility graph"
            )
    ca = ca or default_copy_assignment(ineq, s)
    _check_assignment(ca, ext, s)

    coeffs: Dict[Edge, Fraction] = {}
    coupling: Dict[Edge, Fraction] = {}

    def route(copy, measurement, weight):
        ref = ca.reference[measurement]
        if copy != ref:
            key = edge(copy, ref)
            coupling[key] = coupling.get(key, ZERO) + weight

    for (x, y), a in ineq.edge_terms().items():
        if (x, y) not in ca.edge_copies:
            raise DerivationError(f"Copy assignment has no copies for {edge_key(x, y)}")
        cx, cy = ca.edge_copies[(x, y)]
        if ext.measurement_of(cx) != x or ext.measurement_of(cy) != y:
            raise DerivationError(
                f"Copies {cx}, {cy} do not represent {x} and {y} in that order"
            )
        if not ext.graph.has_edge(cx, cy):
            raise DerivationError(f"Assigned copies {cx}, {cy} are not adjacent in the extended graph")
        key = edge(cx, cy)
        coeffs[key] = coeffs.get(key, ZERO) + a
        route(cx, x, abs(a))
        route(cy, y, abs(a))

    for x, a in ineq.vertex_terms().items():
        key = edge(apex, ca.reference[x])
        coeffs[key] = coeffs.get(key, ZERO) + a

    increase = sum(coupling.values(), ZERO)
    for key, c in coupling.items():
        coeffs[key] = coeffs.get(key, ZERO) + c

    logger.debug(
        "Extended inequality",
        couplings=len(coupling),
        bound_increase=format_fraction(increase),
    )
    return ineq.with_step(
        f"extend:couplings={len(coupling)}:+{format_fraction(increase)}",
        graph=target,
        coeffs=coeffs,
        bound=ineq.bound + increase,
    )


def _check_assignment(ca: CopyAssignment, ext: ExtendedScenario, s: Scenario):
    for m in s.measurements:
        ref = ca.reference.get(m)
        if ref is None:
            raise DerivationError(f"Copy assignment has no reference copy for {m}")
        if ref not in ext.copies[m]:
            raise DerivationError(f"Reference {ref} is not a copy of {m}")


def coupling_edges(ineq: LinearInequality, ext: ExtendedScenario) -> Dict[Edge, Fraction]:
    """Coefficients sitting on edges between two copies of one measurement."""
    result = {}
    for (u, v), a in ineq.edge_terms().items():
        if u in ext.copy_vertices() and v in ext.copy_vertices():
            if ext.measurement_of(u) == ext.measurement_of(v):
                result[(u, v)] = a
    return result
