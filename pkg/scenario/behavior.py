# scenario/behavior.py

from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from exceptions import BehaviorError, ScenarioError
from models import ValidationReport, Violation, ViolationKind
from scenario.scenario import Scenario, context_key, require_valid_scenario

ZERO = Fraction(0)
ONE = Fraction(1)

OutcomeTuple = Tuple[int, ...]


class ContextDistribution(BaseModel):
    """Probability table over outcome tuples, ordered like `context`."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    context: Tuple[str, ...]
    table: Dict[OutcomeTuple, Fraction]

    def probability(self, outcomes: Sequence[int]) -> Fraction:
        return self.table.get(tuple(outcomes), ZERO)

    def support(self) -> List[OutcomeTuple]:
        return sorted(t for t, p in self.table.items() if p != 0)

    def single_marginal(self, measurement: str) -> Dict[int, Fraction]:
        """Marginal of one measurement as an outcome -> probability map."""
        d = marginal(self, [measurement])
        return {t[0]: p for t, p in d.table.items()}


class Behavior(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    scenario: Scenario
    distributions: Tuple[ContextDistribution, ...]

    def distribution(self, index: int) -> ContextDistribution:
        """Table of the scenario's context number `index` (0-based)."""
        d = self.distributions[index] if index < len(self.distributions) else None
        if d is not None and tuple(d.context) == self.scenario.contexts[index]:
            return d
        return self.for_context(self.scenario.contexts[index])

    def for_context(self, context) -> ContextDistribution:
        wanted = set(context)
        for d in self.distributions:
            if set(d.context) == wanted:
                return d
        raise BehaviorError(f"Behavior has no table for context {sorted(wanted)}")


def behavior_from_tables(s: Scenario, tables: Mapping[str, Mapping]) -> Behavior:
    """
    Build a behavior from {context key: {outcome tuple: probability}} in the
    scenario's context order. Probabilities must already be Fractions or ints.
    """
    distributions = []
    for context in s.contexts:
        key = context_key(context)
        if key not in tables:
            raise BehaviorError(f"No table given for context {key}")
        table = {
            tuple(outcomes): Fraction(p) for outcomes, p in tables[key].items()
        }
        distributions.append(ContextDistribution(context=context, table=table))
    extra = set(tables) - set(s.context_keys())
    if extra:
        raise BehaviorError(f"Tables given for unknown contexts {sorted(extra)}")
    return Behavior(scenario=s, distributions=tuple(distributions))


def validate_behavior(s: Scenario, b: Behavior) -> ValidationReport:
    violations = []
    expected = {frozenset(c): context_key(c) for c in s.contexts}
    present = {}
    for d in b.distributions:
        key = context_key(d.context)
        if frozenset(d.context) not in expected:
            violations.append(
                Violation(
                    kind=ViolationKind.EXTRA_CONTEXT,
                    message=f"Table for {key} does not match any scenario context",
                    subject=[key],
                )
            )
            continue
        present[frozenset(d.context)] = present.get(frozenset(d.context), 0) + 1

    for ctx, key in expected.items():
        count = present.get(ctx, 0)
        if count != 1:
            violations.append(
                Violation(
                    kind=ViolationKind.MISSING_CONTEXT,
                    message=f"Context {key} has {count} tables, expected exactly one",
                    subject=[key],
                )
            )

    allowed = set(s.outcomes)
    for d in b.distributions:
        key = context_key(d.context)
        bad_arity = [t for t in d.table if len(t) != len(d.context)]
        if bad_arity:
            violations.append(
                Violation(
                    kind=ViolationKind.ARITY,
                    message=f"Table for {key} has tuples of the wrong arity: {bad_arity[:3]}",
                    subject=[key],
                )
            )
        unknown = [t for t in d.table if any(o not in allowed for o in t)]
        if unknown:
            violations.append(
                Violation(
                    kind=ViolationKind.UNKNOWN_OUTCOME,
                    message=f"Table for {key} uses outcomes outside {sorted(allowed)}",
                    subject=[key],
                )
            )
        negative = [t for t, p in d.table.items() if p < 0]
        if negative:
            violations.append(
                Violation(
                    kind=ViolationKind.NEGATIVE,
                    message=f"Table for {key} has negative entries at {negative[:3]}",
                    subject=[key],
                )
            )
        total = sum(d.table.values(), ZERO)
        if total != ONE:
            violations.append(
                Violation(
                    kind=ViolationKind.NORMALIZATION,
                    message=f"Table for {key} sums to {total}, not 1",
                    subject=[key],
                )
            )
    return ValidationReport(violations=violations)


def require_valid_behavior(b: Behavior) -> Behavior:
    require_valid_scenario(b.scenario)
    report = validate_behavior(b.scenario, b)
    if not report.valid:
        details = "; ".join(v.message for v in report.violations)
        raise BehaviorError(f"Invalid behavior: {details}")
    return b


def marginal(d: ContextDistribution, subset: Iterable[str]) -> ContextDistribution:
    subset = set(subset)
    missing = subset - set(d.context)
    if missing:
        raise BehaviorError(
            f"Cannot marginalize context {list(d.context)} onto {sorted(missing)}"
        )
    positions = [i for i, m in enumerate(d.context) if m in subset]
    table: Dict[OutcomeTuple, Fraction] = {}
    for outcomes, p in d.table.items():
        key = tuple(outcomes[i] for i in positions)
        table[key] = table.get(key, ZERO) + p
    return ContextDistribution(
        context=tuple(d.context[i] for i in positions), table=table
    )


def total_variation(p: ContextDistribution, q: ContextDistribution) -> Fraction:
    if tuple(p.context) != tuple(q.context):
        raise BehaviorError("Total variation needs tables over the same context")
    keys = set(p.table) | set(q.table)
    return sum((abs(p.probability(k) - q.probability(k)) for k in keys), ZERO) / 2


def nondisturbance_defect(b: Behavior) -> Fraction:
    """
    Largest total-variation distance between the marginals of two
    intersecting contexts on their intersection.
    """
    worst = ZERO
    for d1, d2 in combinations(b.distributions, 2):
        shared = set(d1.context) & set(d2.context)
        if not shared:
            continue
        worst = max(worst, total_variation(marginal(d1, shared), marginal(d2, shared)))
    return worst


def context_expectation(d: ContextDistribution, subset: Iterable[str]) -> Fraction:
    subset = set(subset)
    if any(o not in (-1, 1) for t in d.table for o in t):
        raise BehaviorError(
            f"Expectations need ±1 outcomes; context {list(d.context)} has others"
        )
    m = marginal(d, subset)
    total = ZERO
    for outcomes, p in m.table.items():
        sign = 1
        for o in outcomes:
            sign *= o
        total += sign * p
    return total


def deterministic_behavior(s: Scenario, assignment: Mapping[str, int]) -> Behavior:
    missing = [m for m in s.measurements if m not in assignment]
    if missing:
        raise ScenarioError(f"Deterministic assignment misses {missing}")
    distributions = []
    for context in s.contexts:
        outcome = tuple(assignment[m] for m in context)
        if any(o not in s.outcomes for o in outcome):
            raise ScenarioError(f"Assignment uses outcomes outside {list(s.outcomes)}")
        distributions.append(ContextDistribution(context=context, table={outcome: ONE}))
    return Behavior(scenario=s, distributions=tuple(distributions))


def uniform_behavior(s: Scenario) -> Behavior:
    distributions = []
    for context in s.contexts:
        tuples = list(product(s.outcomes, repeat=len(context)))
        weight = Fraction(1, len(tuples))
        distributions.append(
            ContextDistribution(context=context, table={t: weight for t in tuples})
        )
    return Behavior(scenario=s, distributions=tuple(distributions))


def mix_behaviors(weights: Sequence, behaviors: Sequence[Behavior]) -> Behavior:
    """Convex combination of behaviors over one scenario."""
    if len(weights) != len(behaviors) or not behaviors:
        raise BehaviorError("Need one weight per behavior and at least one behavior")
    weights = [Fraction(w) for w in weights]
    if any(w < 0 for w in weights) or sum(weights, ZERO) != ONE:
        raise BehaviorError("Mixture weights must be nonnegative and sum to 1")
    s = behaviors[0].scenario
    if any(b.scenario != s for b in behaviors):
        raise BehaviorError("All mixed behaviors must share one scenario")
    distributions = []
    for i, context in enumerate(s.contexts):
        table: Dict[OutcomeTuple, Fraction] = {}
        for w, b in zip(weights, behaviors):
            for t, p in b.distribution(i).table.items():
                table[t] = table.get(t, ZERO) + w * p
        distributions.append(ContextDistribution(context=context, table=table))
    return Behavior(scenario=s, distributions=tuple(distributions))
