# inequalities/soundness.py

from fractions import Fraction
from typing import Dict, Optional

import joblib
import numpy as np
from pydantic import BaseModel, ConfigDict

from config import Limits, resolve_limits
from cutgeom.cuts import check_vertex_limit
from exceptions import DerivationError
from inequalities.inequality import LinearInequality
from logger import StructuredLogger
from models import Convention
from utils.rationals import common_denominator, format_fraction

logger = StructuredLogger("inequalities.soundness")

CHUNK_BITS = 16


class ValidityReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    valid: bool
    max_value: Fraction
    tight: bool
    violating_cut: Optional[Dict[str, int]] = None
    cuts_checked: int


def _evaluate_chunk(start, stop, free, u_idx, v_idx, coeffs, total, zo, dtype):
    rows = np.arange(start, stop, dtype=np.int64)[:, None]
    bits = (rows >> np.arange(free, dtype=np.int64)) & 1
    signs = np.hstack([np.ones((stop - start, 1), dtype=np.int64), 1 - 2 * bits])
    products = (signs[:, u_idx] * signs[:, v_idx]).astype(dtype)
    values = products.dot(coeffs)
    if zo:
        values = (total - values) // 2
    best = int(np.argmax(values))
    return values[best], start + best


def check_validity(
    ineq: LinearInequality,
    limits: Optional[Limits] = None,
    n_jobs: Optional[int] = None,
) -> ValidityReport:
    """
    Evaluate the inequality on every cut of its support and report the
    maximum. Vertices without coefficients do not change the value and are
    left out of the enumeration.
    """
    limits = resolve_limits(limits)
    vertices = ineq.support_vertices()
    child_logger = logger.child(vertices=len(vertices), trace=list(ineq.trace))
    if not vertices:
        return ValidityReport(
            valid=ineq.bound >= 0,
            max_value=Fraction(0),
            tight=ineq.bound == 0,
            violating_cut=None if ineq.bound >= 0 else {},
            cuts_checked=1,
        )
    check_vertex_limit(len(vertices), limits.soundness_vertices, what="validity harness")

    scale = common_denominator(list(ineq.coeffs.values()) + [ineq.bound])
    edges = list(ineq.coeffs)
    int_coeffs = [int(ineq.coeffs[e] * scale) for e in edges]
    int_bound = int(ineq.bound * scale)
    total = sum(int_coeffs)
    dtype = np.int64 if sum(abs(c) for c in int_coeffs) < 2**62 else object
    coeffs = np.array(int_coeffs, dtype=dtype)

    position = {v: i for i, v in enumerate(vertices)}
    u_idx = np.array([position[u] for u, _ in edges])
    v_idx = np.array([position[v] for _, v in edges])
    free = len(vertices) - 1
    count = 2**free
    chunk = 2 ** min(CHUNK_BITS, free)
    bounds = [(start, min(start + chunk, count)) for start in range(0, count, chunk)]
    zo = ineq.convention == Convention.ZO

    workers = n_jobs or limits.workers
    if workers > 1 and len(bounds) > 1:
        results = joblib.Parallel(n_jobs=workers)(
            joblib.delayed(_evaluate_chunk)(a, b, free, u_idx, v_idx, coeffs, total, zo, dtype)
            for a, b in bounds
        )
    else:
        results = [
            _evaluate_chunk(a, b, free, u_idx, v_idx, coeffs, total, zo, dtype)
            for a, b in bounds
        ]

    # first chunk wins ties so the reported cut does not depend on workers
    best_value, best_index = results[0]
    for value, index in results[1:]:
        if value > best_value:
            best_value, best_index = value, index
    max_value = Fraction(int(best_value), scale)
    valid = int(best_value) <= int_bound
    violating = None
    if not valid:
        violating = {vertices[0]: 1}
        for j, v in enumerate(vertices[1:]):
            violating[v] = -1 if (best_index >> j) & 1 else 1
        child_logger.warn(
            "Inequality violated by a cut",
            max_value=format_fraction(max_value),
            bound=format_fraction(ineq.bound),
        )
    return ValidityReport(
        valid=valid,
        max_value=max_value,
        tight=int(best_value) == int_bound,
        violating_cut=violating,
        cuts_checked=count,
    )


def require_valid(ineq: LinearInequality, limits: Optional[Limits] = None) -> ValidityReport:
    report = check_validity(ineq, limits)
    if not report.valid:
        cut = ", ".join(f"{v}={s:+d}" for v, s in report.violating_cut.items())
        raise DerivationError(
            f"Derived inequality is not valid: value {format_fraction(report.max_value)} "
            f"> {format_fraction(ineq.bound)} at cut {cut}"
        )
    return report
