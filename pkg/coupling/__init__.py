from .maximal import (
    Coupling,
    MarginalFamily,
    MarginalMember,
    coupling_bounds,
    coupling_is_unique,
    is_maximal_coupling,
    max_coupling,
    max_equal_correlation,
    pointwise_min,
)

__all__ = [
    "Coupling",
    "MarginalFamily",
    "MarginalMember",
    "coupling_bounds",
    "coupling_is_unique",
    "is_maximal_coupling",
    "max_coupling",
    "max_equal_correlation",
    "pointwise_min",
]
