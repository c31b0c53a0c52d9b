# tests/inequalities/test_splitting.py

import pytest

from cutgeom.vectors import convert
from exceptions import ConventionError, DerivationError
from inequalities.inequality import LinearInequality
from inequalities.soundness import check_validity
from inequalities.splitting import vertex_split_graph, vertex_split_ineq
from models import Convention
from scenario.hypergraph import Graph

STAR = Graph(vertices=("w", "a", "b", "c"), edges=(("a", "w"), ("b", "w"), ("c", "w")))
TRIANGLE = Graph(vertices=("a", "b", "c"), edges=(("a", "b"), ("a", "c"), ("b", "c")))


def _star():
    return LinearInequality(
        graph=STAR,
        coeffs={("a", "w"): 1, ("b", "w"): 1, ("c", "w"): 1},
        bound=3,
        convention=Convention.ZO,
    )


def _triangle():
    # every cut separates an even number of triangle edges
    return LinearInequality(
        graph=TRIANGLE,
        coeffs={("a", "b"): 1, ("a", "c"): 1, ("b", "c"): 1},
        bound=2,
        convention=Convention.ZO,
    )


def test_graph_split():
    g = vertex_split_graph(STAR, "w", ["a"], ["b"], ["c"], s_name="s", t_name="t")
    assert set(g.vertices) == {"a", "b", "c", "s", "t"}
    assert set(g.edges) == {("a", "s"), ("c", "s"), ("b", "t"), ("c", "t"), ("s", "t")}


def test_partition_is_checked():
    with pytest.raises(DerivationError):
        vertex_split_graph(STAR, "w", ["a"], ["b"])
    with pytest.raises(DerivationError):
        vertex_split_graph(STAR, "w", ["a", "b"], ["b", "c"])
    with pytest.raises(DerivationError):
        vertex_split_graph(STAR, "w", ["a"], ["b"], ["c"], s_name="a")


def test_star_split_keeps_the_bound():
    lifted = vertex_split_ineq(_star(), "w", ["a"], ["b"], ["c"], s_name="s", t_name="t")
    # S and T weigh the same, so s keeps B
    assert lifted.coeffs == {("a", "s"): 1, ("c", "s"): 1, ("b", "t"): 1, ("s", "t"): -1}
    assert lifted.bound == 3
    report = check_validity(lifted)
    assert report.valid and report.tight


def test_heavier_side_keeps_the_shared_neighbors():
    ineq = LinearInequality(
        graph=STAR,
        coeffs={("a", "w"): 1, ("b", "w"): 2, ("c", "w"): 1},
        bound=4,
        convention=Convention.ZO,
    )
    lifted = vertex_split_ineq(ineq, "w", ["a"], ["b"], ["c"], s_name="s", t_name="t")
    assert lifted.coeffs == {("a", "s"): 1, ("b", "t"): 2, ("c", "t"): 1, ("s", "t"): -1}
    assert check_validity(lifted).valid


@pytest.mark.parametrize(
    "S, T",
    [(["b"], ["c"]), (["b", "c"], []), ([], ["b", "c"])],
)
def test_triangle_splits_are_valid(S, T):
    lifted = vertex_split_ineq(_triangle(), "a", S, T)
    assert lifted.graph.has_edge("a_s", "a_t")
    assert check_validity(lifted).valid


def test_split_renames_the_apex_to_the_heavy_side():
    ineq = LinearInequality(
        graph=STAR,
        coeffs={("a", "w"): 2, ("b", "w"): 1},
        bound=3,
        convention=Convention.ZO,
        apex="w",
    )
    lifted = vertex_split_ineq(ineq, "w", ["a"], ["b"], ["c"], s_name="s", t_name="t")
    assert lifted.apex == "s"


def test_pm1_inequalities_are_refused():
    # splitting the ±1 form directly is unsound, so it must be converted first
    with pytest.raises(ConventionError):
        vertex_split_ineq(convert(_star(), Convention.PM1), "w", ["a"], ["b"], ["c"])
