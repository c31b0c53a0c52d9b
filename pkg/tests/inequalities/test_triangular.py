# tests/inequalities/test_triangular.py

from fractions import Fraction

import pytest

from catalog.inequalities import chained_inequality
from cutgeom.vectors import convert
from exceptions import ConventionError, DerivationError
from inequalities.inequality import LinearInequality
from inequalities.soundness import check_validity
from inequalities.triangular import (
    default_multipliers,
    triangle_inequalities,
    triangular_eliminate_graph,
    triangular_eliminate_ineq,
)
from models import Convention
from scenario.hypergraph import Graph

C4 = Graph(
    vertices=("1", "2", "3", "4"),
    edges=(("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")),
)


def _four_cycle():
    return LinearInequality(
        graph=C4,
        coeffs={("1", "2"): 1, ("2", "3"): 1, ("3", "4"): 1, ("1", "4"): -1},
        bound=2,
    )


def test_triangle_inequalities_are_tight():
    triangle = Graph(vertices=("u", "v", "w"), edges=(("u", "v"), ("u", "w"), ("v", "w")))
    for t in triangle_inequalities(triangle, ("u", "v", "w")):
        report = check_validity(t)
        assert report.valid and report.tight
    with pytest.raises(DerivationError):
        triangle_inequalities(C4, ("1", "2", "3"))


def test_graph_rewrite():
    g = triangular_eliminate_graph(C4, [("4", "1")], names={("1", "4"): "w"})
    assert not g.has_edge("1", "4")
    assert g.has_edge("1", "w") and g.has_edge("4", "w")
    default = triangular_eliminate_graph(C4, [("1", "4")])
    assert default.has_vertex("1~4")
    with pytest.raises(DerivationError):
        triangular_eliminate_graph(C4, [("1", "3")])
    with pytest.raises(DerivationError):
        triangular_eliminate_graph(C4, [("1", "4")], names={("1", "4"): "2"})


def test_default_multipliers():
    assert default_multipliers(Fraction(2)) == (0, 2, 0, 0)
    assert default_multipliers(Fraction(-3)) == (0, 0, 3, 0)
    assert default_multipliers(Fraction(0)) == (0, 0, 0, 0)


def test_four_cycle_lifts_to_the_five_cycle():
    lifted = triangular_eliminate_ineq(_four_cycle(), [("1", "4")], names={("1", "4"): "5"})
    assert lifted.coeffs == {
        ("1", "2"): 1,
        ("2", "3"): 1,
        ("3", "4"): 1,
        ("1", "5"): -1,
        ("4", "5"): 1,
    }
    assert lifted.bound == 3
    report = check_validity(lifted)
    assert report.valid and report.tight
    assert lifted.trace[-1] == "te:1|4->5[0/1,0/1,1/1,0/1]"


def test_explicit_multipliers_must_cancel():
    with pytest.raises(DerivationError):
        triangular_eliminate_ineq(_four_cycle(), [("1", "4")], multipliers={("1", "4"): (0, 1, 0, 0)})
    with pytest.raises(DerivationError):
        triangular_eliminate_ineq(_four_cycle(), [("1", "4")], multipliers={("1", "4"): (0, 0, 1)})


def test_extra_edges_keep_validity():
    chsh = chained_inequality(2)
    lifted = triangular_eliminate_ineq(
        chsh,
        [("A1", "B1"), ("A1", "B2")],
        extra_edges=[("A1~B1", "A1~B2")],
    )
    assert lifted.graph.has_edge("A1~B1", "A1~B2")
    assert lifted.bound == 4
    assert check_validity(lifted).valid


def test_needs_pm1():
    with pytest.raises(ConventionError):
        triangular_eliminate_ineq(convert(_four_cycle(), Convention.ZO), [("1", "4")])


def test_noop_without_edges():
    ineq = _four_cycle()
    assert triangular_eliminate_ineq(ineq, []) is ineq
