# certify/necessary.py
"""
Necessary condition for extended noncontextuality from one valid inequality
on the extended graph. Terms on relabeled contexts (and apex terms) are read
off the behavior; terms on coupling edges are minimized over what maximal
couplings allow.
"""

from fractions import Fraction
from typing import Tuple

from pydantic import BaseModel, ConfigDict

from certify.verdict import Verdict, threshold_status
from coupling.maximal import coupling_bounds, coupling_is_unique, max_coupling
from cutgeom.vectors import convert
from exceptions import DerivationError, ScenarioError
from extension.extended import ExtendedScenario, copy_marginals, extend_hypergraph
from inequalities.inequality import LinearInequality
from logger import StructuredLogger
from models import Convention
from scenario.behavior import Behavior, context_expectation, require_valid_behavior
from scenario.hypergraph import Edge, edge_key
from scenario.scenario import Scenario
from utils.rationals import format_fraction

logger = StructuredLogger("certify.necessary")

ZERO = Fraction(0)


class SplitInequality(BaseModel):
    """A PM1 inequality on the extended graph with its support partitioned."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    inequality: LinearInequality
    extended: ExtendedScenario
    context_edges: Tuple[Edge, ...]
    vertex_edges: Tuple[Edge, ...]
    coupling_edges: Tuple[Edge, ...]


def split_inequality(ineq: LinearInequality, ext: ExtendedScenario) -> SplitInequality:
    if ineq.convention != Convention.PM1:
        ineq = convert(ineq, Convention.PM1)
    copies = set(ext.copy_vertices())
    graph = ext.graph
    context_edges, vertex_edges, coupling = [], [], []
    for e in ineq.coeffs:
        u, v = e
        if ineq.apex is not None and ineq.apex in e:
            x = v if u == ineq.apex else u
            if x not in copies:
                raise DerivationError(f"Apex term on {x}, which is not a copy vertex")
            vertex_edges.append(e)
            continue
        if u not in copies or v not in copies or not graph.has_edge(u, v):
            raise DerivationError(
                f"Coefficient on {edge_key(e)} is not an edge of the scenario's extended graph"
            )
        if ext.measurement_of(u) == ext.measurement_of(v):
            coupling.append(e)
        else:
            context_edges.append(e)
    return SplitInequality(
        inequality=ineq,
        extended=ext,
        context_edges=tuple(context_edges),
        vertex_edges=tuple(vertex_edges),
        coupling_edges=tuple(coupling),
    )


def _observed_value(b: Behavior, si: SplitInequality) -> Fraction:
    ext, ineq = si.extended, si.inequality
    total = ZERO
    for e in si.context_edges:
        index = ext.context_of(e[0])
        measurements = [ext.measurement_of(c) for c in e]
        total += ineq.coeffs[e] * context_expectation(b.distribution(index), measurements)
    for e in si.vertex_edges:
        x = e[1] if e[0] == ineq.apex else e[0]
        index = ext.context_of(x)
        total += ineq.coeffs[e] * context_expectation(
            b.distribution(index), [ext.measurement_of(x)]
        )
    return total


def _coupling_minimum(b: Behavior, si: SplitInequality, fix_unique: bool):
    ext, ineq = si.extended, si.inequality
    total = ZERO
    fixed = boxed = 0
    for e in si.coupling_edges:
        a = ineq.coeffs[e]
        measurement = ext.measurement_of(e[0])
        family = copy_marginals(b, measurement, ext)
        i, j = (family.copy_ids().index(c) for c in e)
        if fix_unique and coupling_is_unique(family):
            total += a * max_coupling(family).pair_correlation(i, j)
            fixed += 1
            continue
        low = high = ZERO
        for outcome in family.outcomes:
            lower, upper = coupling_bounds(family, [i, j], outcome)
            low += lower
            high += upper
        # <x^i x^j> = 2 P(x^i = x^j) - 1
        total += a * (2 * low - 1) if a > 0 else a * (2 * high - 1)
        boxed += 1
    return total, fixed, boxed


def necessary_condition_test(
    s: Scenario, b: Behavior, si: SplitInequality, fix_unique: bool = True
) -> Verdict:
    """
    Contextual when the observed part plus the least coupling part exceeds
    the bound; Undecided otherwise.

    Couplings that are unique contribute their exact correlation. The others
    contribute the end of their correlation interval that minimizes the
    term, so the minimum used never exceeds the true one. With
    `fix_unique=False` every coupling edge uses its interval.
    """
    require_valid_behavior(b)
    if b.scenario != s:
        raise ScenarioError("Behavior is not over the given scenario")
    if si.extended.base != s:
        raise DerivationError("Inequality is not over this scenario's extended graph")
    if not s.is_binary:
        raise ScenarioError("The necessary-condition test needs outcomes {-1, 1}")
    observed = _observed_value(b, si)
    m, fixed, boxed = _coupling_minimum(b, si, fix_unique)
    value = observed + m
    threshold = si.inequality.bound
    status = threshold_status(value, threshold, complete=False)
    logger.info(
        "Necessary condition evaluated",
        value=format_fraction(value),
        threshold=format_fraction(threshold),
        fixed=fixed,
        boxed=boxed,
        status=status.value,
    )
    return Verdict(
        test="ineq",
        value=value,
        threshold=threshold,
        status=status,
        details={
            "observed": format_fraction(observed),
            "coupling_minimum": format_fraction(m),
            "fixed_couplings": fixed,
            "boxed_couplings": boxed,
            "trace": list(si.inequality.trace),
        },
    )


def necessary_condition_for(
    b: Behavior, ineq: LinearInequality, fix_unique: bool = True
) -> Verdict:
    s = b.scenario
    return necessary_condition_test(s, b, split_inequality(ineq, extend_hypergraph(s)), fix_unique)
