# scenario/serialization.py

import json
from fractions import Fraction
from typing import Dict

from pydantic import RootModel

from exceptions import BehaviorError
from models import ScenarioPayload
from scenario.behavior import Behavior, ContextDistribution
from scenario.scenario import Scenario, context_key
from utils.rationals import format_fraction, to_fraction


class BehaviorPayload(RootModel[Dict[str, Dict[str, str]]]):
    pass


def scenario_from_payload(payload: ScenarioPayload) -> Scenario:
    return Scenario(
        measurements=tuple(payload.measurements),
        contexts=tuple(tuple(c) for c in payload.contexts),
        outcomes=tuple(payload.outcomes),
    )


def scenario_to_payload(s: Scenario) -> ScenarioPayload:
    return ScenarioPayload(
        measurements=list(s.measurements),
        contexts=[list(c) for c in s.contexts],
        outcomes=list(s.outcomes),
    )


def _parse_outcomes(key: str):
    try:
        return tuple(int(part) for part in key.split(",")) if key else ()
    except ValueError:
        raise BehaviorError(f"Outcome key {key!r} must be comma separated integers")


def behavior_from_payload(s: Scenario, payload: BehaviorPayload) -> Behavior:
    """
    Read {"m1,m2": {"a1,a2": "p/q"}}. Context keys may list measurements in
    any order; tuples are reordered to the scenario's context order.
    """
    tables = payload.root
    distributions = []
    used = set()
    for context in s.contexts:
        match = None
        for key in tables:
            if set(key.split(",")) == set(context) and len(key.split(",")) == len(context):
                match = key
                break
        if match is None:
            raise BehaviorError(f"Behavior has no table for context {context_key(context)}")
        used.add(match)
        order = match.split(",")
        positions = [order.index(m) for m in context]
        table = {}
        for outcome_key, value in tables[match].items():
            outcomes = _parse_outcomes(outcome_key)
            if len(outcomes) != len(order):
                raise BehaviorError(
                    f"Outcome key {outcome_key!r} does not fit context {match}"
                )
            try:
                probability = to_fraction(value)
            except ValueError as e:
                raise BehaviorError(str(e))
            reordered = tuple(outcomes[i] for i in positions)
            table[reordered] = table.get(reordered, Fraction(0)) + probability
        distributions.append(ContextDistribution(context=context, table=table))
    extra = set(tables) - used
    if extra:
        raise BehaviorError(f"Behavior has tables for unknown contexts {sorted(extra)}")
    return Behavior(scenario=s, distributions=tuple(distributions))


def behavior_to_payload(b: Behavior) -> BehaviorPayload:
    root = {}
    for i, context in enumerate(b.scenario.contexts):
        d = b.distribution(i)
        root[context_key(context)] = {
            ",".join(str(o) for o in outcomes): format_fraction(d.table[outcomes])
            for outcomes in sorted(d.table)
        }
    return BehaviorPayload(root)


def _read_section(path, section: str):
    """File contents, or one section of a combined {"scenario", "behavior"} document."""
    with open(path) as f:
        data = json.load(f)
    if isinstance(data, dict) and set(data) == {"scenario", "behavior"}:
        return data[section]
    return data


def load_scenario(path) -> Scenario:
    return scenario_from_payload(ScenarioPayload.model_validate(_read_section(path, "scenario")))


def load_behavior(path, s: Scenario) -> Behavior:
    return behavior_from_payload(s, BehaviorPayload.model_validate(_read_section(path, "behavior")))


def canonical_json(data) -> str:
    if hasattr(data, "model_dump"):
        data = data.model_dump(mode="json")
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
