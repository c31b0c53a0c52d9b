# certify/oracle.py
"""
Exact decision of extended noncontextuality for small scenarios.

One LP column per deterministic assignment of every copy. Rows reproduce
each relabeled context table and pin, for every coupled measurement and
outcome a, the mass of "all copies show a" to the pointwise minimum of the
copy marginals (the diagonal every maximal coupling shares).
"""

from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

import numpy as np

from certify.verdict import Verdict
from config import Limits, resolve_limits
from coupling.maximal import pointwise_min
from exceptions import CertificateError, SizeLimitExceeded
from extension.extended import ExtendedScenario, copy_marginals, extend_hypergraph
from logger import StructuredLogger
from models import VerdictStatus
from scenario.behavior import Behavior, require_valid_behavior
from scenario.scenario import Scenario
from utils.lp import find_feasible_point
from utils.rationals import format_fraction

logger = StructuredLogger("certify.oracle")

ZERO = Fraction(0)
ONE = Fraction(1)


def _assignment_table(outcomes: Tuple[int, ...], copies: int) -> np.ndarray:
    """Row k holds the outcome of every copy under assignment k (base |O| digits)."""
    base = len(outcomes)
    index = np.arange(base**copies, dtype=np.int64)[:, None]
    digits = (index // base ** np.arange(copies, dtype=np.int64)) % base
    return np.asarray(outcomes, dtype=np.int64)[digits]


def _constraints(b: Behavior, ext: ExtendedScenario, table: np.ndarray):
    """Indicator rows, right-hand sides and a label for every row."""
    position = {c: j for j, c in enumerate(ext.copy_vertices())}
    outcomes = ext.base.outcomes
    rows: List[np.ndarray] = []
    rhs: List[Fraction] = []
    labels: List[str] = []
    for i, context in enumerate(ext.relabeled_contexts):
        d = b.distribution(i)
        columns = table[:, [position[c] for c in context]]
        for t in product(outcomes, repeat=len(context)):
            rows.append(np.all(columns == np.asarray(t), axis=1))
            rhs.append(d.probability(t))
            labels.append(f"context:{','.join(context)}={t}")
    for m in ext.coupling_measurements:
        p_minus, _ = pointwise_min(copy_marginals(b, m, ext))
        columns = table[:, [position[c] for c in ext.copies[m]]]
        for a in outcomes:
            rows.append(np.all(columns == a, axis=1))
            rhs.append(p_minus[a])
            labels.append(f"diagonal:{m}={a}")
    return np.vstack(rows).astype(np.int64), rhs, labels


def verify_global_distribution(
    b: Behavior, ext: ExtendedScenario, weights: Dict[Tuple[int, ...], Fraction]
):
    """Re-check a global distribution over copy assignments against every constraint."""
    copies = ext.copy_vertices()
    if any(w < 0 for w in weights.values()) or sum(weights.values(), ZERO) != ONE:
        raise CertificateError("Global distribution is not a probability distribution")
    position = {c: j for j, c in enumerate(copies)}
    for i, context in enumerate(ext.relabeled_contexts):
        d = b.distribution(i)
        observed: Dict[Tuple[int, ...], Fraction] = {}
        for assignment, w in weights.items():
            key = tuple(assignment[position[c]] for c in context)
            observed[key] = observed.get(key, ZERO) + w
        for t in product(ext.base.outcomes, repeat=len(context)):
            if observed.get(t, ZERO) != d.probability(t):
                raise CertificateError(
                    f"Global distribution misses context {','.join(context)} at {t}"
                )
    for m in ext.coupling_measurements:
        p_minus, _ = pointwise_min(copy_marginals(b, m, ext))
        idx = [position[c] for c in ext.copies[m]]
        for a in ext.base.outcomes:
            mass = sum(
                (w for assignment, w in weights.items() if all(assignment[j] == a for j in idx)),
                ZERO,
            )
            if mass != p_minus[a]:
                raise CertificateError(f"Global distribution breaks the diagonal of {m} at {a}")


def verify_farkas(matrix: np.ndarray, rhs: List[Fraction], y: List[Fraction]):
    """y.A <= 0 on every column and y.b > 0."""
    coefficients = np.asarray(y, dtype=object)
    if any(v > 0 for v in coefficients.dot(matrix.astype(object))):
        raise CertificateError("Farkas vector is positive on some assignment")
    if sum((yi * bi for yi, bi in zip(y, rhs)), ZERO) <= 0:
        raise CertificateError("Farkas vector does not certify infeasibility")


def decide_extended_noncontextual(
    s: Scenario, b: Behavior, limits: Optional[Limits] = None
) -> Verdict:
    """
    ExtendedNoncontextual with a global distribution, or ExtendedContextual
    with a Farkas vector y (y.A <= 0, value y.b > 0).
    """
    require_valid_behavior(b)
    limits = resolve_limits(limits)
    ext = extend_hypergraph(s)
    copies = ext.copy_vertices()
    count = len(s.outcomes) ** len(copies)
    if count > limits.oracle_columns:
        raise SizeLimitExceeded(
            f"Oracle needs {count} columns for {len(copies)} copies, above the limit of "
            f"{limits.oracle_columns} (raise CONTEXTCUT_ORACLE_COLUMNS)"
        )
    child_logger = logger.child(copies=len(copies), columns=count)
    table = _assignment_table(tuple(s.outcomes), len(copies))
    matrix, rhs, labels = _constraints(b, ext, table)
    child_logger.debug("Oracle LP built", rows=len(rhs))
    result = find_feasible_point(matrix.tolist(), rhs)

    if result.feasible:
        weights = {
            tuple(int(o) for o in table[k]): w for k, w in enumerate(result.x) if w != 0
        }
        verify_global_distribution(b, ext, weights)
        child_logger.info("Extended noncontextual", support=len(weights), pivots=result.pivots)
        return Verdict(
            test="oracle",
            value=ZERO,
            threshold=ZERO,
            status=VerdictStatus.NONCONTEXTUAL,
            details={"copies": list(copies), "columns": count, "pivots": result.pivots},
            certificate={
                "global_distribution": [
                    {
                        "assignment": dict(zip(copies, assignment)),
                        "weight": format_fraction(w),
                    }
                    for assignment, w in sorted(weights.items())
                ]
            },
        )

    y = list(result.farkas)
    verify_farkas(matrix, rhs, y)
    value = sum((yi * bi for yi, bi in zip(y, rhs)), ZERO)
    child_logger.info(
        "Extended contextual", value=format_fraction(value), pivots=result.pivots
    )
    return Verdict(
        test="oracle",
        value=value,
        threshold=ZERO,
        status=VerdictStatus.CONTEXTUAL,
        details={"copies": list(copies), "columns": count, "pivots": result.pivots},
        certificate={
            "farkas": {
                label: format_fraction(yi) for label, yi in zip(labels, y) if yi != 0
            }
        },
    )
