# scenario/scenario.py

from itertools import combinations
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from exceptions import ScenarioError
from models import ValidationReport, Violation, ViolationKind
from scenario.hypergraph import Graph, Hypergraph, two_section

BINARY_OUTCOMES = (-1, 1)


def context_key(context) -> str:
    return ",".join(context)


class Scenario(BaseModel):
    """
    Measurements, contexts and outcomes. Contexts are stored in the global
    measurement order; structural rules are checked by validate_scenario.
    """

    model_config = ConfigDict(frozen=True)

    measurements: Tuple[str, ...]
    contexts: Tuple[Tuple[str, ...], ...]
    outcomes: Tuple[int, ...] = Field(default=BINARY_OUTCOMES)

    @model_validator(mode="before")
    @classmethod
    def _order_contexts(cls, data):
        if not isinstance(data, dict) or "contexts" not in data:
            return data
        data = dict(data)
        order = {m: i for i, m in enumerate(data.get("measurements", ()))}
        data["contexts"] = tuple(
            tuple(sorted(context, key=lambda m: (order.get(m, len(order)), m)))
            for context in data["contexts"]
        )
        return data

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(vertices=self.measurements, hyperedges=self.contexts)

    def context_keys(self) -> List[str]:
        return [context_key(c) for c in self.contexts]

    def contexts_of(self, measurement: str) -> List[int]:
        """0-based indices of the contexts holding the measurement."""
        return [i for i, c in enumerate(self.contexts) if measurement in c]

    def context_index(self, context) -> int:
        wanted = set(context)
        for i, c in enumerate(self.contexts):
            if set(c) == wanted:
                return i
        raise ScenarioError(f"Context {sorted(wanted)} is not part of the scenario")

    @property
    def is_binary(self) -> bool:
        return tuple(sorted(self.outcomes)) == BINARY_OUTCOMES


def compatibility_graph(s: Scenario) -> Graph:
    return two_section(s.hypergraph())


def validate_scenario(raw: Scenario) -> ValidationReport:
    violations = []
    seen = set()
    for m in raw.measurements:
        if m in seen:
            violations.append(
                Violation(
                    kind=ViolationKind.DUPLICATE_MEASUREMENT,
                    message=f"Measurement id {m!r} appears more than once",
                    subject=[m],
                )
            )
        seen.add(m)

    if not raw.outcomes or len(set(raw.outcomes)) != len(raw.outcomes):
        violations.append(
            Violation(
                kind=ViolationKind.OUTCOMES,
                message="Outcome set must be non-empty with distinct labels",
                subject=[str(o) for o in raw.outcomes],
            )
        )

    covered = set()
    for context in raw.contexts:
        key = context_key(context)
        if not context:
            violations.append(
                Violation(kind=ViolationKind.EMPTY_CONTEXT, message="Empty context")
            )
        if len(set(context)) != len(context):
            violations.append(
                Violation(
                    kind=ViolationKind.DUPLICATE_IN_CONTEXT,
                    message=f"Context {key} repeats a measurement",
                    subject=[key],
                )
            )
        unknown = [m for m in context if m not in seen]
        if unknown:
            violations.append(
                Violation(
                    kind=ViolationKind.UNKNOWN_MEASUREMENT,
                    message=f"Context {key} uses undeclared measurements {unknown}",
                    subject=unknown,
                )
            )
        covered.update(context)

    uncovered = [m for m in dict.fromkeys(raw.measurements) if m not in covered]
    if uncovered:
        violations.append(
            Violation(
                kind=ViolationKind.COVER,
                message=f"Measurements {uncovered} belong to no context",
                subject=uncovered,
            )
        )

    for (i, a), (j, b) in combinations(enumerate(raw.contexts), 2):
        if not a or not b:
            continue
        if set(a) <= set(b) or set(b) <= set(a):
            violations.append(
                Violation(
                    kind=ViolationKind.ANTICHAIN,
                    message=f"Context {context_key(a)} and context {context_key(b)} are nested",
                    subject=[context_key(a), context_key(b)],
                )
            )
    return ValidationReport(violations=violations)


def require_valid_scenario(s: Scenario) -> Scenario:
    report = validate_scenario(s)
    if not report.valid:
        details = "; ".join(v.message for v in report.violations)
        raise ScenarioError(f"Invalid scenario: {details}")
    return s
