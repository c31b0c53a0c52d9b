from .hypergraph import (
    Edge,
    Graph,
    Hypergraph,
    edge,
    edge_key,
    graphs_isomorphic,
    parse_edge_key,
    two_section,
)
from .scenario import (
    Scenario,
    compatibility_graph,
    context_key,
    require_valid_scenario,
    validate_scenario,
)
from .behavior import (
    Behavior,
    ContextDistribution,
    behavior_from_tables,
    context_expectation,
    deterministic_behavior,
    marginal,
    mix_behaviors,
    nondisturbance_defect,
    require_valid_behavior,
    uniform_behavior,
    validate_behavior,
)
from .serialization import (
    behavior_from_payload,
    behavior_to_payload,
    canonical_json,
    scenario_from_payload,
    scenario_to_payload,
)

__all__ = [
    "Edge",
    "Graph",
    "Hypergraph",
    "edge",
    "edge_key",
    "graphs_isomorphic",
    "parse_edge_key",
    "two_section",
    "Scenario",
    "compatibility_graph",
    "context_key",
    "require_valid_scenario",
    "validate_scenario",
    "Behavior",
    "ContextDistribution",
    "behavior_from_tables",
    "context_expectation",
    "deterministic_behavior",
    "marginal",
    "mix_behaviors",
    "nondisturbance_defect",
    "require_valid_behavior",
    "uniform_behavior",
    "validate_behavior",
    "behavior_from_payload",
    "behavior_to_payload",
    "canonical_json",
    "scenario_from_payload",
    "scenario_to_payload",
]
