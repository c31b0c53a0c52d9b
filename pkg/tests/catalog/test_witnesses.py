# tests/catalog/test_witnesses.py

from fractions import Fraction

import pytest

from catalog.behaviors import (
    constant_behavior,
    pm_deterministic_behavior,
    pr_box_behavior,
)
from catalog.scenarios import PM_COLUMNS, PM_ROWS, n_cycle_scenario
from catalog.witnesses import (
    is_cycle_scenario,
    ncycle_arguments,
    ncycle_extended_test,
    peres_mermin_extended_test,
    peres_mermin_value,
)
from cutgeom.membership import is_in_cut_polytope
from cutgeom.suspension import suspension
from cutgeom.vectors import behavior_vector_on_suspension
from exceptions import BehaviorError, ScenarioError
from models import VerdictStatus
from scenario.behavior import behavior_from_tables
from scenario.scenario import compatibility_graph, context_key

HALF = Fraction(1, 2)


def test_cycle_recognition(cycle4, bell3, path3, square):
    assert is_cycle_scenario(cycle4)
    assert is_cycle_scenario(n_cycle_scenario(7))
    assert not is_cycle_scenario(bell3)
    assert not is_cycle_scenario(path3)
    assert not is_cycle_scenario(square)


def test_pr_box_is_contextual(pr_box4):
    verdict = ncycle_extended_test(pr_box4)
    assert verdict.value == 8
    assert verdict.threshold == 6
    assert verdict.contextual
    assert verdict.details["couplings"] == ["1/1"] * 4


def test_three_cycle_pr_box():
    verdict = ncycle_extended_test(pr_box_behavior(3))
    assert (verdict.value, verdict.threshold) == (6, 4)


def test_constant_behavior_sits_on_the_threshold(cycle4):
    verdict = ncycle_extended_test(constant_behavior(cycle4))
    assert verdict.value == 6
    assert verdict.status == VerdictStatus.NONCONTEXTUAL


def test_disturbance_pays_for_correlations(cycle4):
    # deterministic in every context, but measurement 1 flips between contexts
    b = behavior_from_tables(
        cycle4,
        {"1,2": {(1, 1): 1}, "2,3": {(1, 1): 1}, "3,4": {(1, 1): 1}, "1,4": {(-1, 1): 1}},
    )
    correlations, couplings = ncycle_arguments(b)
    assert correlations == [1, 1, 1, -1]
    assert couplings == [-1, 1, 1, 1]
    assert not ncycle_extended_test(b).contextual


def test_non_cycles_are_refused(path3):
    with pytest.raises(ScenarioError):
        ncycle_extended_test(constant_behavior(path3))


def test_quantum_square(pm_quantum):
    assert peres_mermin_value(pm_quantum) == 6
    verdict = peres_mermin_extended_test(pm_quantum)
    assert (verdict.value, verdict.threshold) == (6, 4)
    assert verdict.contextual
    assert set(verdict.details["deltas"].values()) == {"0/1"}


def test_quantum_square_pairwise_vector_is_classical(square, pm_quantum):
    sg = suspension(compatibility_graph(square))
    assert is_in_cut_polytope(sg, behavior_vector_on_suspension(square, pm_quantum))


def test_deterministic_square_is_undecided():
    verdict = peres_mermin_extended_test(pm_deterministic_behavior({f"A{i}": 1 for i in range(1, 10)}))
    assert verdict.value == 4
    assert verdict.status == VerdictStatus.UNDECIDED


def test_disturbed_square_raises_the_threshold(square):
    tables = {context_key(c): {(1, 1, 1): 1} for c in PM_ROWS + PM_COLUMNS}
    tables[context_key(PM_COLUMNS[0])] = {(1, 1, 1): HALF, (-1, 1, 1): HALF}
    b = behavior_from_tables(square, tables)
    verdict = peres_mermin_extended_test(b)
    assert verdict.threshold == 5
    assert verdict.value == 3
    assert verdict.details["deltas"]["A1"] == "1/1"
    with pytest.raises(BehaviorError):
        peres_mermin_value(b)


def test_square_test_needs_the_square(pr_box4):
    with pytest.raises(ScenarioError):
        peres_mermin_extended_test(pr_box4)
