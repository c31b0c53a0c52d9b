from .scenarios import bell_scenario, n_cycle_scenario, path_scenario, peres_mermin_scenario
from .sfunction import maximizing_signs, s_function
from .behaviors import (
    constant_behavior,
    correlated_pair,
    ncycle_correlation_behavior,
    pm_deterministic_behavior,
    pm_quantum_behavior,
    pr_box_behavior,
)
from .inequalities import (
    chained_extended,
    chained_inequality,
    i3322_extended,
    i3322_inequality,
    ncycle_extended_inequality,
)
from .witnesses import (
    is_cycle_scenario,
    ncycle_arguments,
    ncycle_extended_test,
    peres_mermin_extended_test,
    peres_mermin_value,
)
from .registry import CATALOG, parse_selector, resolve_selector

__all__ = [
    "bell_scenario",
    "n_cycle_scenario",
    "path_scenario",
    "peres_mermin_scenario",
    "maximizing_signs",
    "s_function",
    "constant_behavior",
    "correlated_pair",
    "ncycle_correlation_behavior",
    "pm_deterministic_behavior",
    "pm_quantum_behavior",
    "pr_box_behavior",
    "chained_extended",
    "chained_inequality",
    "i3322_extended",
    "i3322_inequality",
    "ncycle_extended_inequality",
    "is_cycle_scenario",
    "ncycle_arguments",
    "ncycle_extended_test",
    "peres_mermin_extended_test",
    "peres_mermin_value",
    "CATALOG",
    "parse_selector",
    "resolve_selector",
]
