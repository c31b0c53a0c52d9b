from .suspension import DEFAULT_APEX, SuspensionGraph, suspension
from .vectors import (
    CorrelationVector,
    behavior_vector_on_suspension,
    convert,
    correlation_vector,
)
from .cuts import cut_assignments, cut_vector, enumerate_cut_vectors, sign_matrix
from .membership import MembershipVerdict, cut_membership, is_in_cut_polytope

__all__ = [
    "DEFAULT_APEX",
    "SuspensionGraph",
    "suspension",
    "CorrelationVector",
    "behavior_vector_on_suspension",
    "convert",
    "correlation_vector",
    "cut_assignments",
    "cut_vector",
    "enumerate_cut_vectors",
    "sign_matrix",
    "MembershipVerdict",
    "cut_membership",
    "is_in_cut_polytope",
]
