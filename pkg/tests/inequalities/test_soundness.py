# tests/inequalities/test_soundness.py

from fractions import Fraction

import pytest

import inequalities.soundness as soundness
from catalog.inequalities import chained_inequality, i3322_inequality
from config import Limits
from cutgeom.vectors import convert
from exceptions import DerivationError, SizeLimitExceeded
from inequalities.inequality import LinearInequality
from inequalities.soundness import check_validity, require_valid
from models import Convention
from scenario.hypergraph import Graph


def test_chsh_is_tight():
    report = check_validity(chained_inequality(2))
    assert report.valid and report.tight
    assert report.max_value == 2
    assert report.cuts_checked == 8


def test_i3322_is_tight():
    report = check_validity(i3322_inequality())
    assert report.valid and report.tight
    assert report.max_value == 4


def test_violations_report_a_cut():
    loose = chained_inequality(2).with_step("tighten", bound=1)
    report = check_validity(loose)
    assert not report.valid
    cut = report.violating_cut
    assert loose.evaluate({e: cut[e[0]] * cut[e[1]] for e in loose.coeffs}) == 2
    with pytest.raises(DerivationError):
        require_valid(loose)


def test_zo_form_has_the_same_slack():
    chsh = chained_inequality(2)
    zo = convert(chsh, Convention.ZO)
    report = check_validity(zo)
    assert report.valid and report.tight
    assert zo.bound - report.max_value == chsh.bound - check_validity(chsh).max_value


def test_fractional_coefficients():
    g = Graph(vertices=("a", "b"), edges=(("a", "b"),))
    ineq = LinearInequality(graph=g, coeffs={("a", "b"): Fraction(1, 3)}, bound=Fraction(1, 3))
    report = check_validity(ineq)
    assert report.tight and report.max_value == Fraction(1, 3)


def test_empty_inequalities():
    g = Graph(vertices=("a", "b"), edges=(("a", "b"),))
    assert check_validity(LinearInequality(graph=g, coeffs={}, bound=0)).tight
    assert not check_validity(LinearInequality(graph=g, coeffs={}, bound=-1)).valid


def test_vertex_limit():
    with pytest.raises(SizeLimitExceeded):
        check_validity(i3322_inequality(), Limits(soundness_vertices=6))


def test_chunked_workers_agree(monkeypatch):
    serial = check_validity(i3322_inequality())
    monkeypatch.setattr(soundness, "CHUNK_BITS", 2)
    chunked = check_validity(i3322_inequality(), Limits(workers=2))
    assert chunked == serial
