# tests/scenario/test_serialization.py

import json
from fractions import Fraction

import pytest

from catalog.behaviors import pr_box_behavior
from exceptions import BehaviorError
from scenario.serialization import (
    BehaviorPayload,
    behavior_from_payload,
    behavior_to_payload,
    canonical_json,
    load_behavior,
    load_scenario,
    scenario_to_payload,
)


def test_behavior_payload_uses_exact_strings(pr_box4):
    payload = behavior_to_payload(pr_box4).model_dump(mode="json")
    assert payload["1,2"] == {"-1,-1": "1/2", "1,1": "1/2"}
    assert payload["1,4"] == {"-1,1": "1/2", "1,-1": "1/2"}


def test_context_keys_may_be_permuted(cycle4):
    payload = behavior_to_payload(pr_box_behavior(4)).model_dump(mode="json")
    payload["4,1"] = {"1,-1": "1"}
    del payload["1,4"]
    b = behavior_from_payload(cycle4, BehaviorPayload(payload))
    # (4, 1) = (1, -1) is (1, 4) = (-1, 1) in scenario order
    assert b.distribution(3).table == {(-1, 1): Fraction(1)}


def test_bad_probability_strings(cycle4):
    payload = behavior_to_payload(pr_box_behavior(4)).model_dump(mode="json")
    payload["1,2"]["1,1"] = "0.5"
    with pytest.raises(BehaviorError):
        behavior_from_payload(cycle4, BehaviorPayload(payload))


def test_combined_documents_load(tmp_path, cycle4, pr_box4):
    path = tmp_path / "pr.json"
    path.write_text(
        canonical_json(
            {
                "scenario": scenario_to_payload(cycle4).model_dump(mode="json"),
                "behavior": behavior_to_payload(pr_box4).model_dump(mode="json"),
            }
        )
    )
    assert load_scenario(path) == cycle4
    assert load_behavior(path, cycle4) == pr_box4


def test_canonical_json_is_stable(cycle4):
    first = canonical_json(scenario_to_payload(cycle4))
    second = canonical_json(json.loads(first))
    assert first == second
    assert first.endswith("\n")
