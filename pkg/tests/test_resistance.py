from fractions import Fraction

import pytest
from hypothesis import given, settings

from oracles import resistance_sympy, series_parallel
from strategies import connected_graphs, trees, unicyclic_graphs
from walkgauge.errors import NotUnicyclic
from walkgauge.graph import make_cycle, make_P, make_path, make_S, unicyclic_decompose, wiener_index
from walkgauge.resistance import (
    additive_degree_kirchhoff,
    additive_degree_kirchhoff_closed,
    cycle_resistance,
    kf_branch_decomposition,
    kirchhoff_index,
    multiplicative_degree_kirchhoff,
    multiplicative_degree_kirchhoff_closed,
    resistance_centrality,
    resistance_forest_oracle,
    resistance_matrix,
    resistance_matrix_unicyclic,
    resistance_unicyclic,
    resistances,
    weighted_resistance_centrality,
    weighted_resistance_centrality_closed,
)


def test_series_parallel_examples():
    assert resistance_matrix(make_cycle(3))[0, 1] == series_parallel([1], [1, 1]) == Fraction(2, 3)
    assert resistance_matrix(make_cycle(4))[0, 2] == series_parallel([1, 1], [1, 1]) == 1


def test_unicyclic_examples():
    g = make_S(6, 4)
    dec = unicyclic_decompose(g)
    assert resistance_unicyclic(dec, 4, 5) == 2
    # tail end of the triangle-with-path to a cycle vertex: 2 + 2/3
    assert resistance_unicyclic(unicyclic_decompose(make_P(5, 3)), 4, 1) == Fraction(8, 3)
    with pytest.raises(NotUnicyclic):
        resistances(make_path(4), "unicyclic")


@pytest.mark.parametrize("n", range(3, 11))
def test_cycle_adjacent(n):
    assert cycle_resistance(n, 1) == Fraction(n - 1, n) == resistance_matrix(make_cycle(n))[0, 1]
    for k in range(n):
        assert cycle_resistance(n, k) == resistance_matrix(make_cycle(n))[0, k]


@pytest.mark.parametrize("n, r_each, kf", [(3, Fraction(4, 3), 2), (4, Fraction(5, 2), 5), (5, 4, 10)])
def test_cycle_indices(n, r_each, kf):
    g = make_cycle(n)
    assert all(resistance_centrality(g, x) == r_each for x in range(n))
    assert kirchhoff_index(g) == kf
    assert additive_degree_kirchhoff(g) == 4 * kf
    assert multiplicative_degree_kirchhoff(g) == 4 * kf


def test_tree_kirchhoff_is_wiener():
    g = make_path(6)
    assert kirchhoff_index(g) == wiener_index(g) == 35


@given(trees(min_n=2))
def test_tree_resistance_is_distance(t):
    r = resistance_matrix(t)
    assert all(r[x, y] == t.distances[x][y] for x in range(t.n) for y in range(t.n))
    assert kirchhoff_index(t, r) == wiener_index(t)


def test_unicyclic_path_matches_laplacian(unicyclic_corpus):
    for g in unicyclic_corpus:
        assert resistances(g, "unicyclic") == resistances(g, "laplacian")


@settings(max_examples=30, deadline=None)
@given(connected_graphs(min_n=2, max_n=7, max_extra=5))
def test_forest_oracle(g):
    r = resistance_matrix(g)
    for x in range(g.n):
        for y in range(x + 1, g.n):
            assert r[x, y] == resistance_forest_oracle(g, x, y)


@settings(max_examples=30, deadline=None)
@given(connected_graphs(min_n=2, max_n=6))
def test_pseudoinverse_oracle(g):
    assert [list(resistance_matrix(g).row(x)) for x in range(g.n)] == resistance_sympy(g.n, g.edges)


@given(connected_graphs())
def test_metric_properties(g):
    r = resistance_matrix(g)
    d = g.distances
    for x in range(g.n):
        assert r[x, x] == 0
        for y in range(g.n):
            assert r[x, y] == r[y, x] and r[x, y] <= d[x][y]
            for z in range(g.n):
                assert r[x, y] + r[y, z] >= r[x, z]
    all_equal = all(r[x, y] == d[x][y] for x in range(g.n) for y in range(g.n))
    assert all_equal == g.is_tree


@given(connected_graphs(min_n=2))
def test_ground_independence(g):
    assert resistance_matrix(g, ground=0) == resistance_matrix(g, ground=g.n - 1)


@given(connected_graphs(min_n=2))
def test_index_sum_identities(g):
    r = resistance_matrix(g)
    rw = [weighted_resistance_centrality(g, x, r) for x in range(g.n)]
    assert sum(resistance_centrality(g, x, r) for x in range(g.n)) == 2 * kirchhoff_index(g, r)
    assert sum(rw) == additive_degree_kirchhoff(g, r)
    assert sum(g.degree[x] * rw[x] for x in range(g.n)) / 2 == multiplicative_degree_kirchhoff(g, r)


@given(unicyclic_graphs())
def test_unicyclic_closed_forms(g):
    dec = unicyclic_decompose(g)
    r = resistance_matrix(g)
    assert resistance_matrix_unicyclic(dec) == r
    assert kf_branch_decomposition(dec) == kirchhoff_index(g, r)
    assert additive_degree_kirchhoff_closed(dec, r) == additive_degree_kirchhoff(g, r)
    assert multiplicative_degree_kirchhoff_closed(dec, r) == multiplicative_degree_kirchhoff(g, r)
    for x in range(g.n):
        assert weighted_resistance_centrality_closed(dec, x, r) == weighted_resistance_centrality(g, x, r)


@pytest.mark.parametrize("g", [make_S(4, 3), make_S(6, 4), make_P(6, 3), make_cycle(4)])
def test_named_closed_form_examples(g):
    dec = unicyclic_decompose(g)
    assert kf_branch_decomposition(dec) == kirchhoff_index(g)
    assert additive_degree_kirchhoff_closed(dec) == additive_degree_kirchhoff(g)
    assert multiplicative_degree_kirchhoff_closed(dec) == multiplicative_degree_kirchhoff(g)


def test_unknown_path():
    with pytest.raises(ValueError):
        resistances(make_cycle(4), "bogus")
