from .generate import generate
from .check import check, run_test, validate
from .derive import apply_operation, derive

__all__ = [
    "generate",
    "check",
    "run_test",
    "validate",
    "apply_operation",
    "derive",
]
