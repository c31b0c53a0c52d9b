from .inequality import (
    LinearInequality,
    add_inequalities,
    coefficient_table,
    inequality_from_payload,
    inequality_to_payload,
)
from .triangular import (
    TRIANGLE_PATTERNS,
    default_multipliers,
    triangle_inequalities,
    triangular_eliminate_graph,
    triangular_eliminate_ineq,
)
from .splitting import vertex_split_graph, vertex_split_ineq
from .contraction import edge_contract_graph, edge_contract_ineq
from .extend import CopyAssignment, coupling_edges, default_copy_assignment, extend_inequality
from .soundness import ValidityReport, check_validity, require_valid
from .constructions import (
    ConstructionResult,
    split_construction,
    te_construction,
    te_contract_construction,
)

__all__ = [
    "LinearInequality",
    "add_inequalities",
    "coefficient_table",
    "inequality_from_payload",
    "inequality_to_payload",
    "TRIANGLE_PATTERNS",
    "default_multipliers",
    "triangle_inequalities",
    "triangular_eliminate_graph",
    "triangular_eliminate_ineq",
    "vertex_split_graph",
    "vertex_split_ineq",
    "edge_contract_graph",
    "edge_contract_ineq",
    "CopyAssignment",
    "coupling_edges",
    "default_copy_assignment",
    "extend_inequality",
    "ValidityReport",
    "check_validity",
    "require_valid",
    "ConstructionResult",
    "split_construction",
    "te_construction",
    "te_contract_construction",
]
