import itertools

import pytest

from excycle.canon import canonical_form
from excycle.constructions import Cactus, CompleteBipartite, H1
from excycle.cycles import has_cycle_of_length
from excycle.formulas import (
    ex_matching,
    ex_odd_cycle,
    extremal_family,
    g_decompose,
    g_formula,
    h1_formula,
    h2_formula,
    mantel,
    turan_edges,
)
from excycle.graph import from_edges

from oracles import labeled_edge_sets


def test_turan_edges_examples():
    assert turan_edges(7, 2) == 12
    assert turan_edges(9, 1) == 0
    assert turan_edges(10, 3) == 33
    assert all(turan_edges(n, 2) == n * n // 4 for n in range(2, 60))
    with pytest.raises(ValueError):
        turan_edges(3, 4)


def test_g_decompose_examples():
    assert (g_decompose(5, 2).s, g_decompose(5, 2).r) == (2, 2)
    for k in range(2, 9):
        d = g_decompose(2 * k, k)
        assert (d.s, d.r) == (1, 2 * k)
    assert (g_decompose(9, 3).s, g_decompose(9, 3).r) == (2, 4)
    with pytest.raises(ValueError):
        g_decompose(1, 2)


@pytest.mark.parametrize("k", range(2, 9))
def test_g_decompose_invariant(k):
    for n in range(2, 121):
        d = g_decompose(n, k)
        assert n == (d.s - 1) * (2 * k - 1) + d.r
        assert 2 <= d.r <= 2 * k and d.s >= 1


def test_g_formula_examples():
    assert g_formula(5, 2) == 7
    assert g_formula(6, 2) == 9 == 36 // 4
    assert g_formula(7, 3) == 16


def test_h_formula_examples():
    assert h1_formula(5, 2) == 7
    assert all(h1_formula(k, k) == k * (k - 1) // 2 for k in range(2, 10))
    assert h1_formula(9, 3) == 21
    assert h2_formula(5, 2) == 7
    assert h2_formula(7, 3) == 14
    assert h2_formula(6, 2) == 9
    with pytest.raises(ValueError):
        h2_formula(6, 3)
    with pytest.raises(ValueError):
        h1_formula(2, 3)


def _max_edges_without_matching(n, size):
    """Largest labelled graph on n vertices whose maximum matching is below ``size``."""

    def matching_number(edges):
        for r in range(len(edges), 0, -1):
            for combo in itertools.combinations(edges, r):
                if len({v for e in combo for v in e}) == 2 * r:
                    return r
        return 0

    return max(len(e) for e in labeled_edge_sets(n) if matching_number(e) < size)


def test_ex_matching_examples():
    assert ex_matching(5, 1) == 4
    assert all(ex_matching(n, 0) == 0 for n in range(1, 10))
    assert ex_matching(4, 1) == 3 == _max_edges_without_matching(4, 2)


@pytest.mark.parametrize("n, nu", [(5, 1), (6, 1), (6, 2), (5, 2), (3, 1), (3, 2)])
def test_ex_matching_bruteforce(n, nu):
    assert ex_matching(n, nu) == _max_edges_without_matching(n, nu + 1)


def _max_c_free_bruteforce(n, length):
    best = 0
    for edges in labeled_edge_sets(n):
        if len(edges) > best and not has_cycle_of_length(from_edges(n, edges), length):
            best = len(edges)
    return best


def test_ex_odd_cycle_examples():
    assert ex_odd_cycle(4, 2) == 6
    assert ex_odd_cycle(5, 2) == 7 == _max_c_free_bruteforce(5, 5)
    assert ex_odd_cycle(10, 3) == 25
    assert [ex_odd_cycle(n, 1) for n in range(1, 7)] == [0, 1, 2, 4, 6, 9]


@pytest.mark.parametrize("k", range(2, 9))
def test_h1_at_most_g(k):
    for n in range(k, 121):
        g, h1 = g_formula(n, k), h1_formula(n, k)
        assert h1 <= g
        assert (h1 == g) == (g_decompose(n, k).r in (k, k + 1))


@pytest.mark.parametrize("k", range(2, 9))
def test_g_versus_mantel(k):
    for n in range(3, 4 * k - 2):
        assert g_formula(n, k) > mantel(n)
    for n in (4 * k - 2, 4 * k - 1):
        assert g_formula(n, k) == mantel(n)
    for n in range(4 * k, 121):
        assert h1_formula(n, k) < mantel(n)


@pytest.mark.parametrize("k", range(3, 9))
def test_g_beats_h2(k):
    for n in range(2 * k + 1, 121):
        assert g_formula(n, k) > h2_formula(n, k)


def test_g_versus_h2_for_k2():
    # h2(n,2) = h1(n,2), so g = h2 exactly where g = h1, not only at n = 5, 6
    for n in range(5, 121):
        assert h2_formula(n, 2) == h1_formula(n, 2)
        equal = g_formula(n, 2) == h2_formula(n, 2)
        assert equal == (g_decompose(n, 2).r in (2, 3))
        assert g_formula(n, 2) >= h2_formula(n, 2)
    assert g_formula(8, 2) == h2_formula(8, 2) == 13


@pytest.mark.parametrize("k", range(1, 9))
def test_ex_at_least_mantel(k):
    for n in range(1, 121):
        assert ex_odd_cycle(n, k) >= mantel(n)


def test_extremal_family_examples():
    assert extremal_family(9, 2) == [CompleteBipartite(5, 4)]
    fam = extremal_family(6, 2)
    assert fam == [Cactus((4, 3)), H1(6, 2), CompleteBipartite(3, 3)]
    assert len({canonical_form(s.realize()) for s in fam}) == 3
    assert extremal_family(7, 3) == [Cactus((6, 2))]


@pytest.mark.parametrize("k", range(2, 6))
def test_extremal_family_members_are_extremal(k):
    for n in range(1, min(64, 6 * k) + 1):
        fam = extremal_family(n, k)
        assert fam
        for spec in fam:
            g = spec.realize()
            assert g.edge_count() == ex_odd_cycle(n, k)
            assert not has_cycle_of_length(g, 2 * k + 1)
        if n <= 12:
            assert len({canonical_form(s.realize()) for s in fam}) == len(fam)
