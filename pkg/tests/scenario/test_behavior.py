# tests/scenario/test_behavior.py

from fractions import Fraction

import pytest

from exceptions import BehaviorError, ScenarioError
from models import ViolationKind
from scenario.behavior import (
    Behavior,
    ContextDistribution,
    behavior_from_tables,
    context_expectation,
    deterministic_behavior,
    marginal,
    mix_behaviors,
    nondisturbance_defect,
    require_valid_behavior,
    total_variation,
    uniform_behavior,
    validate_behavior,
)

HALF = Fraction(1, 2)


def _path_tables(p12, p23):
    return {"1,2": p12, "2,3": p23}


def test_tables_are_read_in_context_order(path3):
    b = behavior_from_tables(
        path3,
        _path_tables({(1, 1): HALF, (-1, -1): HALF}, {(1, -1): 1}),
    )
    assert b.distribution(0).probability((1, 1)) == HALF
    assert b.distribution(1).probability((1, -1)) == 1
    assert b.for_context(("3", "2")).context == ("2", "3")


def test_missing_table_is_an_error(path3):
    with pytest.raises(BehaviorError):
        behavior_from_tables(path3, {"1,2": {(1, 1): 1}})


def test_validation_catches_negative_and_unnormalized(path3):
    b = behavior_from_tables(
        path3,
        _path_tables({(1, 1): Fraction(3, 2), (-1, -1): -HALF}, {(1, 1): HALF}),
    )
    kinds = validate_behavior(path3, b).kinds()
    assert ViolationKind.NEGATIVE in kinds
    assert ViolationKind.NORMALIZATION in kinds


def test_validation_catches_arity_and_unknown_outcomes(path3):
    b = behavior_from_tables(path3, _path_tables({(1,): 1}, {(0, 1): 1}))
    kinds = validate_behavior(path3, b).kinds()
    assert ViolationKind.ARITY in kinds
    assert ViolationKind.UNKNOWN_OUTCOME in kinds


def test_validation_catches_missing_context(path3):
    b = Behavior(
        scenario=path3,
        distributions=(ContextDistribution(context=("1", "2"), table={(1, 1): Fraction(1)}),),
    )
    assert ViolationKind.MISSING_CONTEXT in validate_behavior(path3, b).kinds()
    with pytest.raises(BehaviorError):
        require_valid_behavior(b)


def test_marginal_and_expectation(path3):
    b = behavior_from_tables(
        path3,
        _path_tables(
            {(1, 1): HALF, (1, -1): Fraction(1, 4), (-1, -1): Fraction(1, 4)},
            {(1, 1): 1},
        ),
    )
    d = b.distribution(0)
    assert marginal(d, ["1"]).table == {(1,): Fraction(3, 4), (-1,): Fraction(1, 4)}
    assert context_expectation(d, ["1"]) == HALF
    assert context_expectation(d, ["1", "2"]) == HALF
    assert d.single_marginal("2") == {1: HALF, -1: HALF}


def test_disturbance_measured_by_total_variation(path3):
    b = behavior_from_tables(
        path3,
        _path_tables({(1, 1): 1}, {(-1, 1): HALF, (1, 1): HALF}),
    )
    # measurement 2 is +1 in the first context, uniform in the second
    assert nondisturbance_defect(b) == HALF
    p = marginal(b.distribution(0), ["2"])
    q = marginal(b.distribution(1), ["2"])
    assert total_variation(p, q) == HALF


def test_deterministic_and_uniform_are_valid(square):
    assignment = {m: 1 for m in square.measurements}
    assert validate_behavior(square, deterministic_behavior(square, assignment)).valid
    assert validate_behavior(square, uniform_behavior(square)).valid
    with pytest.raises(ScenarioError):
        deterministic_behavior(square, {"A1": 1})


def test_mixtures_are_convex(path3):
    plus = deterministic_behavior(path3, {"1": 1, "2": 1, "3": 1})
    minus = deterministic_behavior(path3, {"1": -1, "2": -1, "3": -1})
    mixed = mix_behaviors([HALF, HALF], [plus, minus])
    assert mixed.distribution(0).table == {(1, 1): HALF, (-1, -1): HALF}
    assert nondisturbance_defect(mixed) == 0
    with pytest.raises(BehaviorError):
        mix_behaviors([1, 1], [plus, minus])
