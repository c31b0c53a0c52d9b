# catalog/behaviors.py

from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from catalog.scenarios import PM_COLUMNS, n_cycle_scenario, peres_mermin_scenario
from exceptions import BehaviorError
from scenario.behavior import Behavior, ContextDistribution, deterministic_behavior
from scenario.scenario import Scenario

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def correlated_pair(correlation) -> dict:
    """Uniform-marginal ±1 pair table with the given <xy>."""
    c = Fraction(correlation)
    if not -1 <= c <= 1:
        raise BehaviorError(f"Correlation {c} outside [-1, 1]")
    same = (1 + c) / 4
    different = (1 - c) / 4
    table = {(1, 1): same, (-1, -1): same, (1, -1): different, (-1, 1): different}
    return {t: p for t, p in table.items() if p != 0}


def ncycle_correlation_behavior(s: Scenario, correlations: Sequence) -> Behavior:
    """Uniform marginals with one prescribed correlation per context."""
    if len(correlations) != len(s.contexts):
        raise BehaviorError(
            f"Need {len(s.contexts)} correlations, one per context, got {len(correlations)}"
        )
    distributions = tuple(
        ContextDistribution(context=context, table=correlated_pair(c))
        for context, c in zip(s.contexts, correlations)
    )
    return Behavior(scenario=s, distributions=distributions)


def pr_box_behavior(n: int) -> Behavior:
    """n-cycle behavior with correlations +1 except -1 on the closing context."""
    s = n_cycle_scenario(n)
    return ncycle_correlation_behavior(s, [1] * (n - 1) + [-1])


def _triples(parity: int):
    return [t for t in product((1, -1), repeat=3) if t[0] * t[1] * t[2] == parity]


def pm_quantum_behavior() -> Behavior:
    """
    Each context uniform over the four triples with product +1, or -1 for
    the third column.
    """
    s = peres_mermin_scenario()
    distributions = []
    for context in s.contexts:
        parity = -1 if tuple(context) == PM_COLUMNS[2] else 1
        distributions.append(
            ContextDistribution(
                context=context, table={t: QUARTER for t in _triples(parity)}
            )
        )
    return Behavior(scenario=s, distributions=tuple(distributions))


def pm_deterministic_behavior(assignment: Mapping[str, int]) -> Behavior:
    return deterministic_behavior(peres_mermin_scenario(), assignment)


def constant_behavior(s: Scenario, value: int = 1) -> Behavior:
    """Every measurement deterministically shows `value`."""
    return deterministic_behavior(s, {m: value for m in s.measurements})
