# tests/scenario/test_scenario.py

import pytest

from exceptions import ScenarioError
from models import ViolationKind
from scenario.scenario import Scenario, compatibility_graph, require_valid_scenario, validate_scenario


def test_path_scenario_is_valid(path3):
    report = validate_scenario(path3)
    assert report.valid
    assert path3.contexts_of("2") == [0, 1]


def test_contexts_follow_measurement_order():
    s = Scenario(measurements=("a", "b", "c"), contexts=(("c", "a"), ("b", "c")))
    assert s.contexts == (("a", "c"), ("b", "c"))
    assert s.context_index(("c", "a")) == 0


@pytest.mark.parametrize(
    "measurements, contexts, kind",
    [
        (("a", "a", "b"), (("a", "b"),), ViolationKind.DUPLICATE_MEASUREMENT),
        (("a", "b"), (("a", "b"), ()), ViolationKind.EMPTY_CONTEXT),
        (("a", "b"), (("a", "a", "b"),), ViolationKind.DUPLICATE_IN_CONTEXT),
        (("a", "b"), (("a", "z"), ("a", "b")), ViolationKind.UNKNOWN_MEASUREMENT),
        (("a", "b", "c"), (("a", "b"),), ViolationKind.COVER),
        (("a", "b", "c"), (("a", "b"), ("a", "b", "c")), ViolationKind.ANTICHAIN),
    ],
)
def test_violations_are_reported(measurements, contexts, kind):
    report = validate_scenario(Scenario(measurements=measurements, contexts=contexts))
    assert kind in report.kinds()


def test_outcomes_must_be_distinct():
    s = Scenario(measurements=("a",), contexts=(("a",),), outcomes=(1, 1))
    assert ViolationKind.OUTCOMES in validate_scenario(s).kinds()


def test_require_valid_raises():
    with pytest.raises(ScenarioError):
        require_valid_scenario(Scenario(measurements=("a", "b"), contexts=(("a",),)))


def test_compatibility_graph_of_square(square):
    g = compatibility_graph(square)
    assert len(g.vertices) == 9
    # every measurement meets two others in its row and two in its column
    assert all(len(g.neighbors(m)) == 4 for m in g.vertices)
    assert len(g.edges) == 18


def test_binary_flag():
    assert Scenario(measurements=("a",), contexts=(("a",),), outcomes=(1, -1)).is_binary
    assert not Scenario(measurements=("a",), contexts=(("a",),), outcomes=(0, 1, 2)).is_binary
