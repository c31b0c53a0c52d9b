from .extended import (
    ExtendedBehavior,
    ExtendedScenario,
    copy_id,
    copy_marginals,
    extend_behavior,
    extend_hypergraph,
    extended_graph,
    parse_copy_id,
)

__all__ = [
    "ExtendedBehavior",
    "ExtendedScenario",
    "copy_id",
    "copy_marginals",
    "extend_behavior",
    "extend_hypergraph",
    "extended_graph",
    "parse_copy_id",
]
