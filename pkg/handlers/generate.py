# handlers/generate.py

from typing import Tuple

from catalog.registry import resolve_selector
from exceptions import SelectorError
from inequalities.inequality import inequality_to_payload
from logger import StructuredLogger
from models import ExitCode, RunConfig
from scenario.serialization import behavior_to_payload, scenario_to_payload

logger = StructuredLogger("handlers.generate")


def generate(config: RunConfig) -> Tuple[dict, ExitCode]:
    """
    JSON for a catalog item. Behaviors come together with their scenario so
    the output can be fed back to `check`.
    """
    if not config.selector:
        raise SelectorError("generate needs a catalog selector")
    child_logger = logger.child(selector=config.selector)
    item, kind = resolve_selector(config.selector)
    if kind == "scenario":
        data = scenario_to_payload(item).model_dump(mode="json")
    elif kind == "inequality":
        data = inequality_to_payload(item).model_dump(mode="json")
    else:
        data = {
            "scenario": scenario_to_payload(item.scenario).model_dump(mode="json"),
            "behavior": behavior_to_payload(item).model_dump(mode="json"),
        }
    child_logger.info("Catalog item generated", kind=kind)
    return data, ExitCode.OK
