# handlers/inputs.py
"""Command inputs are JSON file paths or catalog selectors."""

import json
from pathlib import Path
from typing import Optional

from catalog.registry import resolve_selector
from exceptions import SelectorError
from inequalities.inequality import LinearInequality, inequality_from_payload
from models import InequalityPayload
from scenario.behavior import Behavior
from scenario.scenario import Scenario
from scenario.serialization import load_behavior, load_scenario


def _from_catalog(ref: str, kind: str):
    item, produces = resolve_selector(ref)
    if produces != kind:
        raise SelectorError(f"Selector {ref!r} gives a {produces}, expected a {kind}")
    return item


def _is_file(ref: str) -> bool:
    return Path(ref).is_file()


def scenario_input(ref: Optional[str]) -> Scenario:
    if not ref:
        raise SelectorError("A scenario (JSON file or catalog selector) is required")
    return load_scenario(ref) if _is_file(ref) else _from_catalog(ref, "scenario")


def behavior_input(ref: Optional[str], s: Scenario) -> Behavior:
    if not ref:
        raise SelectorError("A behavior (JSON file or catalog selector) is required")
    if _is_file(ref):
        return load_behavior(ref, s)
    b = _from_catalog(ref, "behavior")
    if b.scenario != s:
        raise SelectorError(f"Catalog behavior {ref!r} is not over the given scenario")
    return b


def inequality_input(ref: Optional[str]) -> LinearInequality:
    if not ref:
        raise SelectorError("An inequality (JSON file or catalog selector) is required")
    if _is_file(ref):
        with open(ref) as f:
            return inequality_from_payload(InequalityPayload.model_validate(json.load(f)))
    return _from_catalog(ref, "inequality")
