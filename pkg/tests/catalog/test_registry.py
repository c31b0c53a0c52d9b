# tests/catalog/test_registry.py

import pytest

from catalog.registry import CATALOG, parse_selector, resolve_selector
from exceptions import SelectorError
from inequalities.inequality import LinearInequality
from scenario.behavior import Behavior
from scenario.scenario import Scenario

KINDS = {"scenario": Scenario, "inequality": LinearInequality, "behavior": Behavior}


def test_parse():
    assert parse_selector("ncycle:5") == ("ncycle", 5)
    assert parse_selector(" i3322 ") == ("i3322", None)


@pytest.mark.parametrize(
    "selector",
    ["nope", "ncycle", "ncycle:x", "ncycle:2", "i3322:3", "chained:1"],
)
def test_bad_selectors(selector):
    with pytest.raises(SelectorError):
        parse_selector(selector)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_every_entry_resolves_at_its_minimum(name):
    definition = CATALOG[name]["definition"]
    selector = name
    if definition["parameters"]:
        selector = f"{name}:{definition['parameters']['n']['minimum']}"
    item, kind = resolve_selector(selector)
    assert kind == definition["produces"]
    assert isinstance(item, KINDS[kind])


def test_sizes_reach_the_builders():
    s, kind = resolve_selector("bell:4")
    assert kind == "scenario"
    assert len(s.contexts) == 16
