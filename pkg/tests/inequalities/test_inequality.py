# tests/inequalities/test_inequality.py

from fractions import Fraction

import pytest
from pydantic import ValidationError

from catalog.inequalities import chained_inequality, i3322_inequality
from exceptions import DerivationError
from inequalities.inequality import (
    LinearInequality,
    add_inequalities,
    coefficient_table,
    inequality_from_payload,
    inequality_to_payload,
)
from models import Convention
from scenario.hypergraph import Graph

PATH = Graph(vertices=("a", "b", "c"), edges=(("a", "b"), ("b", "c")))


def test_coefficients_are_merged_and_sparse():
    ineq = LinearInequality(
        graph=PATH,
        coeffs={("b", "a"): 1, ("a", "b"): Fraction(1, 2), ("b", "c"): 0},
        bound="3/2",
    )
    assert ineq.coeffs == {("a", "b"): Fraction(3, 2)}
    assert ineq.bound == Fraction(3, 2)
    assert ineq.coefficient("b", "c") == 0


def test_unknown_edges_and_apex_are_rejected():
    with pytest.raises(ValidationError):
        LinearInequality(graph=PATH, coeffs={("a", "c"): 1}, bound=1)
    with pytest.raises(ValidationError):
        LinearInequality(graph=PATH, coeffs={("a", "b"): 1}, bound=1, apex="*")


def test_vertex_and_edge_terms():
    ineq = i3322_inequality()
    assert ineq.vertex_terms() == {"A1": 1, "A2": 1, "B1": 1, "B2": 1}
    assert len(ineq.edge_terms()) == 8
    assert "*" in ineq.support_vertices()
    assert coefficient_table(ineq)["A2|B3"] == "1/1"


def test_evaluate_needs_every_entry():
    ineq = LinearInequality(graph=PATH, coeffs={("a", "b"): 1, ("b", "c"): -1}, bound=1)
    assert ineq.evaluate({("a", "b"): 1, ("b", "c"): -1}) == 2
    assert not ineq.is_satisfied_by({("a", "b"): 1, ("b", "c"): -1})
    with pytest.raises(DerivationError):
        ineq.evaluate({("a", "b"): 1})


def test_scaling_and_trace():
    chsh = chained_inequality(2)
    doubled = chsh.scaled(2)
    assert doubled.bound == 4
    assert doubled.trace == ("catalog:chained:2", "scale:2/1")
    with pytest.raises(DerivationError):
        chsh.scaled(0)


def test_addition():
    first = LinearInequality(graph=PATH, coeffs={("a", "b"): 1}, bound=1)
    second = LinearInequality(graph=PATH, coeffs={("a", "b"): -1, ("b", "c"): 1}, bound=1)
    total = add_inequalities(first, second, 2)
    assert total.coeffs == {("a", "b"): -1, ("b", "c"): 2}
    assert total.bound == 3
    zo = LinearInequality(graph=PATH, coeffs={}, bound=0, convention=Convention.ZO)
    with pytest.raises(DerivationError):
        add_inequalities(first, zo)


def test_payload_uses_edge_keys():
    ineq = i3322_inequality()
    payload = inequality_to_payload(ineq)
    assert payload.coeffs["*|A1"] == "1/1"
    assert payload.bound == "4/1"
    assert payload.apex == "*"
    assert inequality_from_payload(payload) == ineq


def test_relabeling():
    ineq = LinearInequality(graph=PATH, coeffs={("a", "b"): 1, ("b", "c"): -1}, bound=1)
    renamed = ineq.relabeled({"a": "z"})
    assert renamed.coeffs == {("b", "z"): 1, ("b", "c"): -1}
    assert set(renamed.graph.vertices) == {"z", "b", "c"}
    assert renamed.trace == ("relabel:a->z",)
    assert ineq.relabeled({}) is ineq
    with pytest.raises(DerivationError):
        ineq.relabeled({"a": "b"})


def test_restriction_keeps_the_support():
    chsh = chained_inequality(2)
    core = chsh.restricted(["A1", "A2", "B1", "B2"])
    assert set(core.graph.vertices) == {"A1", "A2", "B1", "B2"}
    assert core.apex is None
    assert core.coeffs == chsh.coeffs
    assert core.trace[-1].startswith("restrict:")
    with pytest.raises(DerivationError):
        chsh.restricted(["A2", "B1", "B2"])
    with pytest.raises(DerivationError):
        chsh.restricted(["A1", "A2", "B1", "B2", "Q"])
