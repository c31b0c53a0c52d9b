# cutgeom/vectors.py

from fractions import Fraction
from typing import Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, model_validator

from cutgeom.suspension import SuspensionGraph, apex_of, as_graph, suspension
from exceptions import AmbiguityError, ConventionError
from models import Convention
from scenario.behavior import Behavior, context_expectation, marginal
from scenario.hypergraph import Edge, Graph, edge, edge_key
from scenario.scenario import Scenario, compatibility_graph
from utils.rationals import format_fraction

ONE = Fraction(1)


class CorrelationVector(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: Graph
    entries: Dict[Edge, Fraction]
    convention: Convention = Convention.PM1
    apex: Optional[str] = None

    @model_validator(mode="after")
    def _one_entry_per_edge(self):
        if set(self.entries) != set(self.graph.edges):
            missing = sorted(set(self.graph.edges) - set(self.entries))
            extra = sorted(set(self.entries) - set(self.graph.edges))
            raise ValueError(f"Entries must match graph edges (missing {missing}, extra {extra})")
        low = -ONE if self.convention == Convention.PM1 else Fraction(0)
        for e, value in self.entries.items():
            if not low <= value <= ONE:
                raise ValueError(
                    f"Entry {edge_key(e)}={value} outside the {self.convention.value} range"
                )
        return self

    def value(self, u: str, v: str) -> Fraction:
        return self.entries[edge(u, v)]

    def evaluate(self, ineq) -> Fraction:
        """Left-hand side of `ineq` at this vector; conventions must agree."""
        if ineq.convention != self.convention:
            raise ConventionError(
                f"Vector is {self.convention.value}, inequality is {ineq.convention.value}"
            )
        return ineq.evaluate(self)

    def to_json(self) -> Dict[str, str]:
        return {edge_key(e): format_fraction(v) for e, v in sorted(self.entries.items())}


def _agreed(values, what):
    first = values[0]
    for other in values[1:]:
        if other[0] != first[0]:
            raise AmbiguityError(
                f"Contexts disagree on {what}; use the extended graph for disturbing behaviors"
            )
    return first[1]


def correlation_vector(
    s: Scenario, b: Behavior, g: Union[Graph, SuspensionGraph]
) -> CorrelationVector:
    """
    Means on apex edges and pair expectations on base edges, read from any
    context holding the measurements. Contexts must agree on the marginal
    they share, otherwise AmbiguityError.
    """
    if not s.is_binary:
        raise ConventionError("Correlation vectors need the outcome set {-1, 1}")
    graph = as_graph(g)
    apex = apex_of(g)
    entries = {}
    for u, v in graph.edges:
        if apex in (u, v):
            x = v if u == apex else u
            pair = [x]
        else:
            pair = [u, v]
        readings = []
        for i in range(len(s.contexts)):
            if set(pair) <= set(s.contexts[i]):
                d = b.distribution(i)
                table = marginal(d, pair).table
                signature = tuple(sorted((k, p) for k, p in table.items() if p != 0))
                readings.append((signature, context_expectation(d, pair)))
        if not readings:
            raise AmbiguityError(f"No context holds {', '.join(pair)}")
        entries[(u, v)] = _agreed(readings, "the marginal of " + ", ".join(pair))
    return CorrelationVector(graph=graph, entries=entries, apex=apex)


def behavior_vector_on_suspension(s: Scenario, b: Behavior) -> CorrelationVector:
    return correlation_vector(s, b, suspension(compatibility_graph(s)))


def convert(item, target: Convention):
    """
    Affine bridge between ±1 correlations and 0/1 cut indicators,
    delta = (1 - P) / 2, for vectors and inequalities.
    """
    from inequalities.inequality import LinearInequality

    target = Convention(target)
    if item.convention == target:
        return item
    if isinstance(item, CorrelationVector):
        if target == Convention.ZO:
            entries = {e: (ONE - p) / 2 for e, p in item.entries.items()}
        else:
            entries = {e: ONE - 2 * d for e, d in item.entries.items()}
        return CorrelationVector(
            graph=item.graph, entries=entries, convention=target, apex=item.apex
        )
    if isinstance(item, LinearInequality):
        total = sum(item.coeffs.values(), Fraction(0))
        if target == Convention.ZO:
            # A.P <= b  with P = 1 - 2 delta
            coeffs = {e: -2 * a for e, a in item.coeffs.items()}
            bound = item.bound - total
        else:
            # A.delta <= b  with delta = (1 - P) / 2
            coeffs = {e: -a / 2 for e, a in item.coeffs.items()}
            bound = item.bound - total / 2
        return item.with_step(
            f"convert:{target.value}", coeffs=coeffs, bound=bound, convention=target
        )
    raise ConventionError(f"Cannot convert {type(item).__name__}")
