# handlers/derive.py

import json
from typing import Dict, List, Tuple

from cutgeom.vectors import convert
from exceptions import DerivationError
from handlers.inputs import inequality_input, scenario_input
from inequalities.contraction import edge_contract_ineq
from inequalities.extend import extend_inequality
from inequalities.inequality import LinearInequality, inequality_to_payload
from inequalities.soundness import require_valid
from inequalities.splitting import vertex_split_ineq
from inequalities.triangular import triangular_eliminate_ineq
from logger import StructuredLogger
from models import Convention, DeriveOperation, ExitCode, RunConfig
from scenario.hypergraph import parse_edge_key
from utils.rationals import format_fraction, to_fraction

logger = StructuredLogger("handlers.derive")


def _names(value) -> List[str]:
    if value is None:
        return []
    if isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    return list(value)


def _edges(value) -> List[Tuple[str, str]]:
    return [parse_edge_key(key) for key in _names(value)]


def _mapping(value) -> Dict:
    if value is None:
        return {}
    if isinstance(value, str):
        try:
            value = json.loads(value)
        except json.JSONDecodeError as e:
            raise DerivationError(f"Expected a JSON object, got {value!r}: {e}")
    if not isinstance(value, dict):
        raise DerivationError(f"Expected a JSON object, got {value!r}")
    return value


def _require(params: dict, key: str, op: DeriveOperation):
    if not params.get(key):
        raise DerivationError(f"--op {op.value} needs --{key}")
    return params[key]


def apply_operation(ineq: LinearInequality, config: RunConfig) -> LinearInequality:
    op = config.operation
    params = config.params
    if op is None:
        raise DerivationError("derive needs an operation (--op)")
    if op == DeriveOperation.TE:
        multipliers = {
            parse_edge_key(k): [to_fraction(m) for m in v]
            for k, v in _mapping(params.get("multipliers")).items()
        }
        names = {parse_edge_key(k): v for k, v in _mapping(params.get("names")).items()}
        return triangular_eliminate_ineq(
            ineq,
            _edges(params.get("edges")),
            multipliers=multipliers,
            extra_edges=_edges(params.get("extra_edges")),
            names=names,
        )
    if op == DeriveOperation.SPLIT:
        return vertex_split_ineq(
            ineq,
            _require(params, "vertex", op),
            _names(params.get("S")),
            _names(params.get("T")),
            _names(params.get("B")),
            s_name=params.get("s_name"),
            t_name=params.get("t_name"),
        )
    if op == DeriveOperation.CONTRACT:
        edges = _edges(_require(params, "edge", op))
        if len(edges) != 1:
            raise DerivationError("--op contract takes exactly one edge")
        return edge_contract_ineq(ineq, edges[0], w_name=params.get("name"))
    if op == DeriveOperation.EXTEND:
        return extend_inequality(ineq, scenario_input(config.scenario))
    target = _require(params, "to", op)
    if target not in {c.value for c in Convention}:
        raise DerivationError(f"Unknown convention {target!r}; use pm1 or zo")
    return convert(ineq, Convention(target))


def derive(config: RunConfig) -> Tuple[dict, ExitCode]:
    """
    Apply one operation to an inequality. With `verify`, the result is
    checked on every cut of its support and a failure aborts with the cut.
    """
    ineq = inequality_input(config.inequality)
    child_logger = logger.child(operation=config.operation.value if config.operation else None)
    result = apply_operation(ineq, config)
    if config.verify:
        report = require_valid(result, config.limits)
        child_logger.info(
            "Derived inequality verified",
            max_value=format_fraction(report.max_value),
            tight=report.tight,
            cuts=report.cuts_checked,
        )
    child_logger.info("Derivation finished", trace=list(result.trace))
    return inequality_to_payload(result).model_dump(mode="json"), ExitCode.OK
