# tests/certify/test_oracle.py

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog.behaviors import constant_behavior, pr_box_behavior
from catalog.scenarios import bell_scenario, n_cycle_scenario, path_scenario
from catalog.witnesses import ncycle_extended_test
from certify.oracle import decide_extended_noncontextual, verify_farkas, verify_global_distribution
from config import Limits
from exceptions import CertificateError, SizeLimitExceeded
from extension.extended import extend_hypergraph
from models import VerdictStatus
from scenario.behavior import mix_behaviors
from tests.strategies import behaviors

PATH = path_scenario(3)
TRIANGLE = n_cycle_scenario(3)
SQUARE_CYCLE = n_cycle_scenario(4)


@settings(max_examples=15, deadline=None)
@given(behaviors(PATH))
def test_trees_always_glue(b):
    verdict = decide_extended_noncontextual(PATH, b)
    assert verdict.status == VerdictStatus.NONCONTEXTUAL
    weights = verdict.certificate["global_distribution"]
    assert sum(Fraction(w["weight"]) for w in weights) == 1
    assert set(weights[0]["assignment"]) == {"1^1", "2^1", "2^2", "3^2"}


def test_pr_box_is_contextual(limits):
    verdict = decide_extended_noncontextual(SQUARE_CYCLE, pr_box_behavior(4), limits)
    assert verdict.contextual
    assert verdict.value > 0
    assert verdict.details["columns"] == 256
    assert all(label.startswith(("context:", "diagonal:")) for label in verdict.certificate["farkas"])


def test_constant_behavior_is_a_single_assignment(limits):
    verdict = decide_extended_noncontextual(SQUARE_CYCLE, constant_behavior(SQUARE_CYCLE), limits)
    assert not verdict.contextual
    [only] = verdict.certificate["global_distribution"]
    assert only["weight"] == "1/1"
    assert set(only["assignment"].values()) == {1}


@settings(max_examples=15, deadline=None)
@given(behaviors(TRIANGLE))
def test_agrees_with_the_cycle_test(b):
    oracle = decide_extended_noncontextual(TRIANGLE, b, Limits())
    assert oracle.contextual == ncycle_extended_test(b).contextual


@settings(max_examples=10, deadline=None)
@given(behaviors(SQUARE_CYCLE), st.integers(min_value=0, max_value=8))
def test_agrees_with_the_cycle_test_near_the_pr_box(noise, eighths):
    w = Fraction(eighths, 8)
    b = mix_behaviors([w, 1 - w], [pr_box_behavior(4), noise])
    oracle = decide_extended_noncontextual(SQUARE_CYCLE, b, Limits())
    assert oracle.contextual == ncycle_extended_test(b).contextual


def test_column_limit():
    s = bell_scenario(3)
    with pytest.raises(SizeLimitExceeded):
        decide_extended_noncontextual(s, constant_behavior(s), Limits(oracle_columns=1000))


def test_certificate_checks_catch_tampering():
    b = constant_behavior(PATH)
    ext = extend_hypergraph(PATH)
    with pytest.raises(CertificateError):
        verify_global_distribution(b, ext, {(1, 1, 1, 1): Fraction(1, 2)})
    with pytest.raises(CertificateError):
        verify_global_distribution(b, ext, {(1, 1, -1, 1): Fraction(1)})
    verify_global_distribution(b, ext, {(1, 1, 1, 1): Fraction(1)})

    matrix = np.array([[1, 1], [1, 0]])
    with pytest.raises(CertificateError):
        verify_farkas(matrix, [Fraction(1), Fraction(1)], [Fraction(1), Fraction(0)])
    verify_farkas(np.array([[1, 1]]), [Fraction(-1)], [Fraction(-1)])
