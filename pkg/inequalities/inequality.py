# inequalities/inequality.py

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from exceptions import DerivationError
from models import Convention, GraphPayload, InequalityPayload
from scenario.hypergraph import Edge, Graph, edge, edge_key, parse_edge_key
from utils.rationals import format_fraction, to_fraction

ZERO = Fraction(0)


class LinearInequality(BaseModel):
    """
    sum_e coeffs[e] * X_e <= bound over the edges of `graph`, where X is a
    ±1 correlation (PM1) or a 0/1 cut indicator (ZO). Edges at `apex`
    carry the single-measurement terms. Zero coefficients are not stored.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: Graph
    coeffs: Dict[Edge, Fraction]
    bound: Fraction
    convention: Convention = Convention.PM1
    apex: Optional[str] = None
    trace: Tuple[str, ...] = Field(default=())

    @model_validator(mode="before")
    @classmethod
    def _sparse(cls, data):
        if isinstance(data, dict) and "coeffs" in data:
            data = dict(data)
            coeffs = {}
            for pair, value in data["coeffs"].items():
                key = edge(*pair)
                coeffs[key] = coeffs.get(key, ZERO) + Fraction(value)
            data["coeffs"] = {k: v for k, v in sorted(coeffs.items()) if v != 0}
            data["bound"] = Fraction(data["bound"])
        return data

    @model_validator(mode="after")
    def _edges_exist(self):
        for u, v in self.coeffs:
            if not self.graph.has_edge(u, v):
                raise ValueError(f"Coefficient on {edge_key(u, v)}, which is not a graph edge")
        if self.apex is not None and not self.graph.has_vertex(self.apex):
            raise ValueError(f"Apex {self.apex!r} is not a graph vertex")
        return self

    def coefficient(self, u: str, v: str) -> Fraction:
        return self.coeffs.get(edge(u, v), ZERO)

    def evaluate(self, values) -> Fraction:
        """Left-hand side at a vector (anything with `.entries`) or an edge map."""
        entries = getattr(values, "entries", values)
        total = ZERO
        for e, a in self.coeffs.items():
            if e not in entries:
                raise DerivationError(f"Vector has no entry for {edge_key(e)}")
            total += a * entries[e]
        return total

    def is_satisfied_by(self, values) -> bool:
        return self.evaluate(values) <= self.bound

    def vertex_terms(self) -> Dict[str, Fraction]:
        if self.apex is None:
            return {}
        return {
            (v if u == self.apex else u): a
            for (u, v), a in self.coeffs.items()
            if self.apex in (u, v)
        }

    def edge_terms(self) -> Dict[Edge, Fraction]:
        return {
            e: a for e, a in self.coeffs.items() if self.apex is None or self.apex not in e
        }

    def support_vertices(self) -> List[str]:
        used = {v for e in self.coeffs for v in e}
        return [v for v in self.graph.vertices if v in used]

    def with_step(self, step: str, **changes) -> "LinearInequality":
        data = dict(
            graph=self.graph,
            coeffs=self.coeffs,
            bound=self.bound,
            convention=self.convention,
            apex=self.apex,
            trace=self.trace,
        )
        data.update(changes)
        data["trace"] = tuple(data["trace"]) + (step,)
        return LinearInequality(**data)

    def relabeled(self, mapping: Mapping[str, str]) -> "LinearInequality":
        """Rename vertices; the renaming must stay injective on the graph."""
        renamed = [mapping.get(v, v) for v in self.graph.vertices]
        if len(set(renamed)) != len(renamed):
            raise DerivationError(f"Relabeling {dict(mapping)} merges vertices")
        changes = sorted((v, mapping[v]) for v in self.graph.vertices if mapping.get(v, v) != v)
        if not changes:
            return self
        rename = lambda v: mapping.get(v, v)  # noqa: E731
        return self.with_step(
            "relabel:" + ",".join(f"{old}->{new}" for old, new in changes),
            graph=self.graph.relabel(dict(mapping)),
            coeffs={(rename(u), rename(v)): a for (u, v), a in self.coeffs.items()},
            apex=rename(self.apex) if self.apex is not None else None,
        )

    def restricted(self, vertices) -> "LinearInequality":
        """Induced subgraph on `vertices`, which must hold the whole support."""
        keep = set(vertices)
        outside = [v for v in self.support_vertices() if v not in keep]
        if outside:
            raise DerivationError(f"Cannot drop {outside}: they carry coefficients")
        unknown = sorted(keep - set(self.graph.vertices))
        if unknown:
            raise DerivationError(f"Unknown vertices {unknown}")
        graph = Graph(
            vertices=tuple(v for v in self.graph.vertices if v in keep),
            edges=tuple(e for e in self.graph.edges if e[0] in keep and e[1] in keep),
        )
        return self.with_step(
            "restrict:" + ",".join(graph.vertices),
            graph=graph,
            apex=self.apex if self.apex in keep else None,
        )

    def scaled(self, factor) -> "LinearInequality":
        factor = Fraction(factor)
        if factor <= 0:
            raise DerivationError("Inequalities may only be scaled by positive factors")
        return self.with_step(
            f"scale:{format_fraction(factor)}",
            coeffs={e: a * factor for e, a in self.coeffs.items()},
            bound=self.bound * factor,
        )


def add_inequalities(
    first: LinearInequality, second: LinearInequality, weight=1
) -> LinearInequality:
    """first + weight * second, on first's graph."""
    weight = Fraction(weight)
    if first.convention != second.convention:
        raise DerivationError("Cannot add inequalities in different conventions")
    coeffs = dict(first.coeffs)
    for e, a in second.coeffs.items():
        coeffs[e] = coeffs.get(e, ZERO) + weight * a
    return LinearInequality(
        graph=first.graph,
        coeffs=coeffs,
        bound=first.bound + weight * second.bound,
        convention=first.convention,
        apex=first.apex,
        trace=first.trace,
    )


def inequality_from_payload(payload: InequalityPayload) -> LinearInequality:
    graph = Graph(vertices=tuple(payload.graph.vertices), edges=tuple(payload.graph.edges))
    return LinearInequality(
        graph=graph,
        coeffs={parse_edge_key(k): to_fraction(v) for k, v in payload.coeffs.items()},
        bound=to_fraction(payload.bound),
        convention=payload.convention,
        apex=payload.apex,
        trace=tuple(payload.trace),
    )


def inequality_to_payload(ineq: LinearInequality) -> InequalityPayload:
    return InequalityPayload(
        graph=GraphPayload(
            vertices=list(ineq.graph.vertices), edges=[list(e) for e in ineq.graph.edges]
        ),
        apex=ineq.apex,
        convention=ineq.convention,
        coeffs={edge_key(e): format_fraction(a) for e, a in ineq.coeffs.items()},
        bound=format_fraction(ineq.bound),
        trace=list(ineq.trace),
    )


def coefficient_table(ineq: LinearInequality) -> Mapping[str, str]:
    """Edge key -> "p/q" map, handy for regression comparisons."""
    return {edge_key(e): format_fraction(a) for e, a in ineq.coeffs.items()}
