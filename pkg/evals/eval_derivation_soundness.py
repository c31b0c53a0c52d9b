"""
Exhaustive checks that take too long for the unit suite: catalog and
randomly derived inequalities are valid on every cut of their support,
graph constructions reproduce the extended graph, and (with --long) the
oracle rejects the quantum Peres-Mermin behavior.

    python -m evals.eval_derivation_soundness --samples 200
    python -m evals.eval_derivation_soundness --long
"""

import argparse
import inspect

import numpy as np

from catalog.behaviors import pm_quantum_behavior
from catalog.inequalities import chained_extended, chained_inequality, i3322_extended, i3322_inequality
from catalog.scenarios import bell_scenario, n_cycle_scenario, path_scenario, peres_mermin_scenario
from certify.oracle import decide_extended_noncontextual
from config import Limits
from cutgeom.vectors import convert
from extension.extended import extended_graph
from inequalities.constructions import split_construction, te_construction, te_contract_construction
from inequalities.contraction import edge_contract_ineq
from inequalities.extend import extend_inequality
from inequalities.soundness import check_validity
from inequalities.splitting import vertex_split_ineq
from inequalities.triangular import triangular_eliminate_ineq
from models import Convention

from .custom_eval_functions.agreement import agreement, valid, valid_and_tight

SOUNDNESS_VERTICES = 20

STARTS = {
    "chained:2": lambda: chained_inequality(2),
    "chained:3": lambda: chained_inequality(3),
    "i3322": i3322_inequality,
}


def catalog_items():
    items = {f"chained-ext:{n}": chained_extended(n) for n in range(2, 5)}
    items["i3322-ext"] = i3322_extended()
    items["extend(i3322)"] = extend_inequality(i3322_inequality(), bell_scenario(3))
    for n in range(2, 5):
        items[f"extend(chained:{n})"] = extend_inequality(chained_inequality(n), bell_scenario(n))
    return items


def _pick(rng, values):
    values = list(values)
    return values[int(rng.integers(len(values)))]


def random_derivation(rng):
    """TE on one edge, convert to ZO, split one vertex, contract one edge."""
    name = _pick(rng, sorted(STARTS))
    ineq = STARTS[name]()
    support = sorted(e for e, c in ineq.coeffs.items() if c)
    ineq = triangular_eliminate_ineq(ineq, [_pick(rng, support)])
    ineq = convert(ineq, Convention.ZO)
    w = _pick(rng, [v for v in ineq.graph.vertices if v != ineq.apex])
    parts = ([], [], [])
    for v in ineq.graph.neighbors(w):
        parts[int(rng.integers(3))].append(v)
    ineq = vertex_split_ineq(ineq, w, *parts)
    ineq = edge_contract_ineq(ineq, _pick(rng, ineq.graph.edges))
    return name, ineq


def _shape(graph):
    return set(graph.vertices), set(graph.edges)


def construction_items():
    scenarios = {f"ncycle:{n}": n_cycle_scenario(n) for n in range(3, 7)}
    scenarios.update({f"bell:{n}": bell_scenario(n) for n in (2, 3)})
    scenarios.update({f"path:{n}": path_scenario(n) for n in (3, 5)})
    scenarios["peres-mermin"] = peres_mermin_scenario()
    items = {}
    for name, s in scenarios.items():
        target = _shape(extended_graph(s))
        items[f"split({name})"] = (_shape(split_construction(s).graph), target)
        items[f"te+contract({name})"] = (_shape(te_contract_construction(s).graph), target)
        if all(len(c) <= 2 for c in s.contexts):
            items[f"te({name})"] = (_shape(te_construction(s).graph), target)
    return items


def oracle_items():
    return {"pm-quantum": (peres_mermin_scenario(), pm_quantum_behavior())}


def _score(eval_functions, eval_params):
    values = []
    for eval_function in eval_functions:
        sig = inspect.signature(eval_function)
        required_params = {
            param: eval_params[param] for param in sig.parameters if param in eval_params
        }
        values.append(eval_function(**required_params))
    return values


def evaluate_derivation_soundness(experiment_name, samples, seed, long_runs):
    rng = np.random.default_rng(seed)
    limits = Limits.from_env(soundness_vertices=SOUNDNESS_VERTICES)
    datasets = {
        "catalog": [valid_and_tight],
        "derivations": [valid],
        "constructions": [agreement],
    }
    if long_runs:
        datasets["oracle"] = [agreement]

    scores = []
    for dataset_name, eval_functions in datasets.items():
        print(f"Running {experiment_name} on dataset: {dataset_name}")
        if dataset_name == "catalog":
            for name, ineq in catalog_items().items():
                report = check_validity(ineq, limits)
                item_scores = _score(eval_functions, {"output": report})
                print(f"Item {name}: max {report.max_value} <= {ineq.bound}, score {item_scores}")
                scores.extend(item_scores)
        elif dataset_name == "derivations":
            failures = 0
            for index in range(samples):
                name, ineq = random_derivation(rng)
                report = check_validity(ineq, limits)
                item_scores = _score(eval_functions, {"output": report})
                if not all(item_scores):
                    failures += 1
                    print(f"Item {index} from {name} fails at {report.violating_cut}: {list(ineq.trace)}")
                scores.extend(item_scores)
            print(f"{samples} derivations, {failures} unsound")
        elif dataset_name == "constructions":
            for name, (graph, target) in construction_items().items():
                item_scores = _score(eval_functions, {"output": graph, "expected": target})
                print(f"Item {name}: score {item_scores}")
                scores.extend(item_scores)
        else:
            for name, (s, b) in oracle_items().items():
                verdict = decide_extended_noncontextual(s, b, limits)
                item_scores = _score(eval_functions, {"output": verdict.contextual, "expected": True})
                print(f"Item {name}: {verdict.status.value}, score {item_scores}")
                scores.extend(item_scores)
    print("All done!")
    print("Average score for the experiment:", round(sum(scores) / len(scores), 4))


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--long", action="store_true", help="Include the Peres-Mermin oracle run")
    args = parser.parse_args()
    evaluate_derivation_soundness("derivation_soundness", args.samples, args.seed, args.long)
