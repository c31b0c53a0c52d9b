from .verdict import Verdict, threshold_status
from .necessary import (
    SplitInequality,
    necessary_condition_for,
    necessary_condition_test,
    split_inequality,
)
from .oracle import decide_extended_noncontextual, verify_farkas, verify_global_distribution

__all__ = [
    "Verdict",
    "threshold_status",
    "SplitInequality",
    "necessary_condition_for",
    "necessary_condition_test",
    "split_inequality",
    "decide_extended_noncontextual",
    "verify_farkas",
    "verify_global_distribution",
]
