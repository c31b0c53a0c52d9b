# handlers/check.py

from typing import Tuple

from catalog.witnesses import is_cycle_scenario, ncycle_extended_test, peres_mermin_extended_test
from certify.necessary import necessary_condition_for
from certify.oracle import decide_extended_noncontextual
from certify.verdict import Verdict
from cutgeom.vectors import convert
from exceptions import ContextcutError
from handlers.inputs import behavior_input, inequality_input, scenario_input
from inequalities.extend import extend_inequality
from inequalities.inequality import LinearInequality
from logger import StructuredLogger
from models import CheckTest, Convention, ExitCode, RunConfig
from scenario.behavior import validate_behavior
from scenario.scenario import Scenario, validate_scenario

logger = StructuredLogger("handlers.check")


def _on_extended_graph(ineq: LinearInequality, s: Scenario) -> LinearInequality:
    """Inequalities written over the base measurements are lifted first."""
    support = [v for v in ineq.support_vertices() if v != ineq.apex]
    if support and all(v in s.measurements for v in support):
        return extend_inequality(convert(ineq, Convention.PM1), s)
    return ineq


def run_test(config: RunConfig, s: Scenario, b) -> Verdict:
    test = config.test
    if test is None:
        test = CheckTest.NCYCLE if is_cycle_scenario(s) else CheckTest.ORACLE
    if test == CheckTest.NCYCLE:
        return ncycle_extended_test(b)
    if test == CheckTest.PM:
        return peres_mermin_extended_test(b)
    if test == CheckTest.INEQ:
        ineq = _on_extended_graph(inequality_input(config.inequality), s)
        return necessary_condition_for(b, ineq)
    return decide_extended_noncontextual(s, b, config.limits)


def check(config: RunConfig) -> Tuple[dict, ExitCode]:
    s = scenario_input(config.scenario)
    b = behavior_input(config.behavior, s)
    child_logger = logger.child(test=config.test.value if config.test else "auto")
    verdict = run_test(config, s, b)
    child_logger.info("Check finished", status=verdict.status.value)
    code = ExitCode.CONTEXTUAL if verdict.contextual else ExitCode.OK
    return verdict.to_payload().model_dump(mode="json"), code


def validate(config: RunConfig) -> Tuple[dict, ExitCode]:
    """Validation reports for the scenario and, when given, the behavior."""
    s = scenario_input(config.scenario)
    scenario_report = validate_scenario(s)
    data = {"scenario": scenario_report.model_dump(mode="json")}
    valid = scenario_report.valid
    if config.behavior:
        try:
            b = behavior_input(config.behavior, s)
        except ContextcutError as e:
            data["behavior"] = {"violations": [], "error": str(e)}
            valid = False
        else:
            behavior_report = validate_behavior(s, b)
            data["behavior"] = behavior_report.model_dump(mode="json")
            valid = valid and behavior_report.valid
    data["valid"] = valid
    logger.info("Validation finished", valid=valid)
    return data, ExitCode.OK if valid else ExitCode.INVALID
