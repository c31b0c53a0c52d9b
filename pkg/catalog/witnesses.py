# catalog/witnesses.py
"""
Closed-form tests: the complete n-cycle criterion and the Peres-Mermin
square with its disturbance-corrected right-hand side.
"""

from fractions import Fraction
from typing import List, Tuple

import networkx as nx

from catalog.scenarios import PM_COLUMNS, PM_ROWS, peres_mermin_scenario
from catalog.sfunction import maximizing_signs, s_function
from certify.verdict import Verdict, threshold_status
from coupling.maximal import max_equal_correlation
from exceptions import BehaviorError, ScenarioError
from logger import StructuredLogger
from scenario.behavior import Behavior, context_expectation, nondisturbance_defect, require_valid_behavior
from scenario.scenario import Scenario, compatibility_graph
from utils.rationals import format_fraction

logger = StructuredLogger("catalog.witnesses")

ZERO = Fraction(0)


def is_cycle_scenario(s: Scenario) -> bool:
    if len(s.measurements) < 3 or not s.is_binary:
        return False
    if any(len(c) != 2 for c in s.contexts):
        return False
    if any(len(s.contexts_of(m)) != 2 for m in s.measurements):
        return False
    return nx.is_connected(compatibility_graph(s).to_networkx())


def ncycle_arguments(b: Behavior) -> Tuple[List[Fraction], List[Fraction]]:
    """
    Correlation of every context in context order, and the maximal-coupling
    correlation 1 - |<x^j> - <x^k>| of the two copies of every measurement.
    """
    s = b.scenario
    if not is_cycle_scenario(s):
        raise ScenarioError(
            "The n-cycle test needs n >= 3 binary measurements, contexts of size 2 "
            "and every measurement in exactly two contexts of one cycle"
        )
    correlations = [
        context_expectation(b.distribution(i), context) for i, context in enumerate(s.contexts)
    ]
    couplings = []
    for m in s.measurements:
        i, j = s.contexts_of(m)
        couplings.append(
            max_equal_correlation(
                b.distribution(i).single_marginal(m), b.distribution(j).single_marginal(m)
            )
        )
    return correlations, couplings


def ncycle_extended_test(b: Behavior) -> Verdict:
    """
    s over the n context correlations and the n coupling correlations,
    against 2n - 2. Complete: below the threshold the behavior is
    extended-noncontextual.
    """
    require_valid_behavior(b)
    correlations, couplings = ncycle_arguments(b)
    z = correlations + couplings
    n = len(correlations)
    value = s_function(z)
    threshold = Fraction(2 * n - 2)
    status = threshold_status(value, threshold, complete=True)
    logger.info(
        "n-cycle test evaluated",
        n=n,
        value=format_fraction(value),
        threshold=format_fraction(threshold),
        status=status.value,
    )
    return Verdict(
        test="ncycle",
        value=value,
        threshold=threshold,
        status=status,
        details={
            "n": n,
            "correlations": [format_fraction(v) for v in correlations],
            "couplings": [format_fraction(v) for v in couplings],
            "signs": list(maximizing_signs(z)),
        },
    )


def _require_peres_mermin(b: Behavior):
    require_valid_behavior(b)
    if b.scenario != peres_mermin_scenario():
        raise ScenarioError("The Peres-Mermin test needs the 3x3 square scenario")


def _square_terms(b: Behavior) -> List[Fraction]:
    s = b.scenario
    contexts = PM_ROWS + PM_COLUMNS
    return [context_expectation(b.distribution(s.context_index(c)), c) for c in contexts]


def _square_lhs(terms: List[Fraction]) -> Fraction:
    return sum(terms[:5], ZERO) - terms[5]


def peres_mermin_value(b: Behavior) -> Fraction:
    """Row and column products with the third column negated; at most 4 when noncontextual."""
    _require_peres_mermin(b)
    if nondisturbance_defect(b) != 0:
        raise BehaviorError(
            "The square inequality needs a non-disturbing behavior; use peres_mermin_extended_test"
        )
    return _square_lhs(_square_terms(b))


def peres_mermin_extended_test(b: Behavior) -> Verdict:
    """
    The square inequality with right-hand side 4 + sum_i |<A_i^row> - <A_i^col>|,
    the expected disagreement of the two copies of A_i under a maximal coupling.
    """
    _require_peres_mermin(b)
    s = b.scenario
    terms = _square_terms(b)
    lhs = _square_lhs(terms)
    deltas = {}
    for m in s.measurements:
        row = next(r for r in PM_ROWS if m in r)
        column = next(c for c in PM_COLUMNS if m in c)
        mean_row = context_expectation(b.distribution(s.context_index(row)), [m])
        mean_column = context_expectation(b.distribution(s.context_index(column)), [m])
        deltas[m] = abs(mean_row - mean_column)
    rhs = 4 + sum(deltas.values(), ZERO)
    status = threshold_status(lhs, rhs, complete=False)
    logger.info(
        "Peres-Mermin test evaluated",
        lhs=format_fraction(lhs),
        rhs=format_fraction(rhs),
        status=status.value,
    )
    return Verdict(
        test="pm",
        value=lhs,
        threshold=rhs,
        status=status,
        details={
            "terms": [format_fraction(t) for t in terms],
            "deltas": {m: format_fraction(d) for m, d in deltas.items()},
        },
    )
