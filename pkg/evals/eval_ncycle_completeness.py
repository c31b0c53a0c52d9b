"""
Compare the closed-form n-cycle test with the exact LP oracle on random,
PR-box mixed and deterministic behaviors. The two must agree everywhere.

    python -m evals.eval_ncycle_completeness --samples 200
"""

import argparse
import inspect
import sys
from fractions import Fraction
from itertools import product

import numpy as np

from catalog.behaviors import constant_behavior, pr_box_behavior
from catalog.scenarios import n_cycle_scenario
from catalog.witnesses import ncycle_extended_test
from certify.oracle import decide_extended_noncontextual
from config import Limits
from scenario.behavior import Behavior, ContextDistribution, mix_behaviors

from .custom_eval_functions.agreement import agreement

MAX_WEIGHT = 6


def random_behavior(s, rng):
    tables = []
    for context in s.contexts:
        tuples = list(product(s.outcomes, repeat=len(context)))
        weights = rng.integers(0, MAX_WEIGHT + 1, size=len(tuples))
        weights[rng.integers(len(tuples))] += 1
        total = int(weights.sum())
        table = {t: Fraction(int(w), total) for t, w in zip(tuples, weights)}
        tables.append(ContextDistribution(context=context, table=table))
    return Behavior(scenario=s, distributions=tuple(tables))


def dataset_items(n, samples, rng):
    s = n_cycle_scenario(n)
    items = [constant_behavior(s), constant_behavior(s, -1), pr_box_behavior(n)]
    for _ in range(samples):
        noise = random_behavior(s, rng)
        w = Fraction(int(rng.integers(0, 9)), 8)
        items.append(mix_behaviors([w, 1 - w], [pr_box_behavior(n), noise]))
    return s, items


def evaluate_ncycle_completeness(experiment_name, samples, seed):
    rng = np.random.default_rng(seed)
    limits = Limits.from_env()
    eval_params = {
        "output": None,  # oracle verdict
        "expected": None,  # closed-form verdict
    }

    datasets = {
        "ncycle:3": [agreement],
        "ncycle:4": [agreement],
        "ncycle:5": [agreement],
    }

    scores = []
    for dataset_name, eval_functions in datasets.items():
        n = int(dataset_name.split(":")[1])
        s, items = dataset_items(n, samples, rng)
        print(f"Running {experiment_name} on dataset: {dataset_name}")
        contextual = 0
        for index, b in enumerate(items):
            oracle = decide_extended_noncontextual(s, b, limits)
            closed_form = ncycle_extended_test(b)
            contextual += int(closed_form.contextual)
            eval_params.update(
                {"output": oracle.contextual, "expected": closed_form.contextual}
            )
            for eval_function in eval_functions:
                sig = inspect.signature(eval_function)
                required_params = {
                    param: eval_params[param]
                    for param in sig.parameters
                    if param in eval_params
                }
                score_value = eval_function(**required_params)
                scores.append(score_value)
                if not score_value:
                    print(
                        f"Item {index} disagrees: oracle {oracle.status.value}, "
                        f"closed form {closed_form.status.value} at {closed_form.value}"
                    )
        print(f"{len(items)} items, {contextual} contextual")
    print("All done!")
    average = sum(scores) / len(scores)
    print("Average score for the experiment:", round(average, 4))
    return average


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    average = evaluate_ncycle_completeness("ncycle_completeness", args.samples, args.seed)
    sys.exit(0 if average == 1 else 1)
