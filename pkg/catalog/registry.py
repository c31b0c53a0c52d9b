# catalog/registry.py
"""
Catalog entries addressable by selector strings such as "ncycle:5" or
"i3322". Each entry pairs the building function with a definition saying
what it produces and which integer parameter it takes.
"""

from typing import Dict, Optional, Tuple

from catalog.behaviors import pm_quantum_behavior, pr_box_behavior
from catalog.inequalities import (
    chained_extended,
    chained_inequality,
    i3322_extended,
    i3322_inequality,
)
from catalog.scenarios import bell_scenario, n_cycle_scenario, path_scenario, peres_mermin_scenario
from exceptions import SelectorError

SELECTOR_SEPARATOR = ":"

ncycle_entry = {
    "function": n_cycle_scenario,
    "definition": dict(
        name="ncycle",
        description="n-cycle scenario: measurement i compatible with i+1 mod n.",
        produces="scenario",
        parameters={"n": {"type": "INTEGER", "minimum": 3}},
    ),
}

bell_entry = {
    "function": bell_scenario,
    "definition": dict(
        name="bell",
        description="Bipartite Bell scenario with n binary measurements per party.",
        produces="scenario",
        parameters={"n": {"type": "INTEGER", "minimum": 2}},
    ),
}

path_entry = {
    "function": path_scenario,
    "definition": dict(
        name="path",
        description="Chain of n measurements; every behavior on it is extended-noncontextual.",
        produces="scenario",
        parameters={"n": {"type": "INTEGER", "minimum": 2}},
    ),
}

peres_mermin_entry = {
    "function": peres_mermin_scenario,
    "definition": dict(
        name="peres-mermin",
        description="Peres-Mermin square: nine measurements, three rows and three columns.",
        produces="scenario",
        parameters={},
    ),
}

i3322_entry = {
    "function": i3322_inequality,
    "definition": dict(
        name="i3322",
        description="I3322 inequality on the suspension of K_{3,3}, bound 4.",
        produces="inequality",
        parameters={},
    ),
}

i3322_extended_entry = {
    "function": i3322_extended,
    "definition": dict(
        name="i3322-ext",
        description="I3322 lifted to the extended graph with ten coupling terms, bound 14.",
        produces="inequality",
        parameters={},
    ),
}

chained_entry = {
    "function": chained_inequality,
    "definition": dict(
        name="chained",
        description="Chained Bell inequality with n measurements per party, bound 2n-2.",
        produces="inequality",
        parameters={"n": {"type": "INTEGER", "minimum": 2}},
    ),
}

chained_extended_entry = {
    "function": chained_extended,
    "definition": dict(
        name="chained-ext",
        description="Chained inequality lifted to the extended graph, bound 4n-2.",
        produces="inequality",
        parameters={"n": {"type": "INTEGER", "minimum": 2}},
    ),
}

pr_box_entry = {
    "function": pr_box_behavior,
    "definition": dict(
        name="pr-box",
        description="n-cycle behavior with uniform marginals and correlations 1,...,1,-1.",
        produces="behavior",
        parameters={"n": {"type": "INTEGER", "minimum": 3}},
    ),
}

pm_quantum_entry = {
    "function": pm_quantum_behavior,
    "definition": dict(
        name="pm-quantum",
        description="Quantum Peres-Mermin behavior: uniform over product-consistent triples.",
        produces="behavior",
        parameters={},
    ),
}

CATALOG: Dict[str, dict] = {
    entry["definition"]["name"]: entry
    for entry in (
        ncycle_entry,
        bell_entry,
        path_entry,
        peres_mermin_entry,
        i3322_entry,
        i3322_extended_entry,
        chained_entry,
        chained_extended_entry,
        pr_box_entry,
        pm_quantum_entry,
    )
}


def parse_selector(selector: str) -> Tuple[str, Optional[int]]:
    name, sep, raw = selector.strip().partition(SELECTOR_SEPARATOR)
    if name not in CATALOG:
        raise SelectorError(
            f"Unknown catalog selector {selector!r}; known: {', '.join(sorted(CATALOG))}"
        )
    wants_n = bool(CATALOG[name]["definition"]["parameters"])
    if wants_n and not sep:
        raise SelectorError(f"Selector {name!r} needs a size, e.g. '{name}:4'")
    if not wants_n and sep:
        raise SelectorError(f"Selector {name!r} takes no size")
    if not wants_n:
        return name, None
    try:
        n = int(raw)
    except ValueError:
        raise SelectorError(f"Size {raw!r} in selector {selector!r} is not an integer")
    minimum = CATALOG[name]["definition"]["parameters"]["n"]["minimum"]
    if n < minimum:
        raise SelectorError(f"Selector {name!r} needs n >= {minimum}, got {n}")
    return name, n


def resolve_selector(selector: str):
    """The catalog object for `selector` and the kind it is ("scenario", "inequality", "behavior")."""
    name, n = parse_selector(selector)
    entry = CATALOG[name]
    item = entry["function"]() if n is None else entry["function"](n)
    return item, entry["definition"]["produces"]
