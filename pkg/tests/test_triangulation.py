import math
from fractions import Fraction

import pytest
from hypothesis import given

from facehit import generators as gen
from facehit import triangulation as tr
from facehit.errors import NotATriangulation, NotIndependent
from facehit.plane_core import PlaneMultigraph
from facehit.verify import is_dominating

from .strategies import triangulations


def test_is_plane_triangulation():
    assert tr.is_plane_triangulation(gen.k4())
    assert tr.is_plane_triangulation(gen.octahedron())
    assert not tr.is_plane_triangulation(gen.cycle(4))
    assert not tr.is_plane_triangulation(gen.doubled_k4())


def test_greedy_mis_examples():
    assert len(tr.greedy_mis(gen.k4())) == 1
    S = tr.greedy_mis(gen.octahedron(), tr.MIN_DEGREE_FIRST)
    assert S == {0, 1}
    empty = PlaneMultigraph(range(5), {}, {})
    assert tr.greedy_mis(empty) == set(range(5))


@given(triangulations(60))
def test_greedy_mis_is_maximal(T):
    for s in tr.STRATEGIES:
        assert tr.is_maximal_independent(T, tr.greedy_mis(T, s, seed=T.n))


def test_k4_report():
    S, r = tr.corollary_dominating_set(gen.k4(), I={0}, exact=True)
    assert len(S) == 1 and is_dominating(gen.k4(), S)
    assert r.alpha == Fraction(1, 4) and r.bound_ours == Fraction(3, 2)
    assert r.bound_crr == Fraction(8, 7) and r.winner == tr.BOUND_CRR
    assert r.gamma_exact == 1


def test_octahedron_report():
    S, r = tr.corollary_dominating_set(gen.octahedron(), I={0, 1}, exact=True)
    assert len(S) <= 2 and r.gamma_exact == 2 and r.winner == tr.BOUND_CRR


def test_winner_arithmetic():
    assert tr.winner(14, Fraction(1, 2)) == tr.BOUND_OURS
    assert tr.winner(21, Fraction(1, 3)) == tr.BOUND_CRR
    # equal to 2n/7 exactly: not strictly smaller
    assert tr.winner(7, Fraction(3, 7)) == tr.BOUND_CRR


def test_errors():
    with pytest.raises(NotATriangulation):
        tr.corollary_dominating_set(gen.cycle(4))
    with pytest.raises(NotIndependent):
        tr.corollary_dominating_set(gen.k4(), I={0, 1})


def test_kleetope_meets_quarter_bound():
    K = gen.kleetope(gen.octahedron())
    S, r = tr.corollary_dominating_set(K)
    assert 2 * r.independent_size >= K.n and len(S) <= K.n // 4


@given(triangulations(60))
def test_corollary_bound(T):
    S, r = tr.corollary_dominating_set(T)
    assert is_dominating(T, S)
    assert r.dominating_size <= math.floor(r.bound_ours)
    assert r.dominating_size <= (T.n - r.independent_size) // 2
    assert 0 <= r.alpha <= 1


def test_summary_and_csv():
    reports = [tr.corollary_dominating_set(gen.stacked_triangulation(12, s))[1] for s in range(10)]
    s = tr.compare_bounds(reports)
    assert s.count == 10
    for x in (s.frac_alpha_above_3_7, s.frac_mis_below_2n_7):
        assert 0 <= x <= 1
    assert sum(s.winners.values()) == 10
    # ours beats 2n/7 exactly when alpha > 3/7
    assert s.frac_alpha_above_3_7 == s.winners.get(tr.BOUND_OURS, 0) / 10
    text = tr.reports_to_csv(reports)
    assert text.count("\n") == 11 and text.startswith("n,independent_size")


def test_empty_summary():
    assert tr.compare_bounds([]).count == 0
