import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import count_spanning_trees
from strategies import connected_graphs, unicyclic_graphs
from walkgauge.errors import DimensionMismatch, SingularMatrix
from walkgauge.exact import (
    RationalMatrix,
    determinant,
    fmt_rational,
    laplacian,
    parse_rational,
    solve_linear_system,
    solve_many,
    spanning_tree_count,
)
from walkgauge.graph import build_graph, make_cycle, make_path, make_S, make_star
from walkgauge.graph import unicyclic_decompose

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def square(n):
    return st.lists(st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n)


def test_identity_solve():
    b = [Fraction(3), Fraction(-1, 2), Fraction(7, 9)]
    assert solve_linear_system(RationalMatrix.identity(3), b) == b


def test_small_system():
    a = RationalMatrix.from_rows([[2, 1], [1, 3]])
    assert solve_linear_system(a, [5, 10]) == [1, 3]


def test_singular():
    a = RationalMatrix.from_rows([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrix):
        solve_linear_system(a, [1, 2])
    assert determinant(a) == 0


def test_dimension_mismatch():
    a = RationalMatrix.from_rows([[1, 0], [0, 1]])
    with pytest.raises(DimensionMismatch):
        solve_linear_system(a, [1, 2, 3])
    with pytest.raises(DimensionMismatch):
        solve_linear_system(RationalMatrix.from_rows([[1, 2, 3], [4, 5, 6]]), [1, 2])
    with pytest.raises(DimensionMismatch):
        RationalMatrix.from_rows([[1, 2], [3]])


def test_results_in_lowest_terms():
    a = RationalMatrix.from_rows([[6, 0], [0, 4]])
    x = solve_linear_system(a, [4, 6])
    assert x == [Fraction(2, 3), Fraction(3, 2)]
    assert fmt_rational(x[0]) == "2/3" and fmt_rational(Fraction(8, 4)) == "2"
    assert parse_rational("-10/4") == Fraction(-5, 2)


@settings(max_examples=80)
@given(st.integers(1, 5).flatmap(square))
def test_determinant_matches_sympy(rows):
    expected = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).det()
    got = determinant(RationalMatrix.from_rows(rows))
    assert got == Fraction(int(sympy.fraction(expected)[0]), int(sympy.fraction(expected)[1]))


@settings(max_examples=80)
@given(st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(fractions, min_size=n, max_size=n),
    st.permutations(range(n)))))
def test_planted_solution(case):
    # A = P·L·U with unit-diagonal L and nonzero-diagonal U is nonsingular by construction
    raw, x, perm = case
    n = len(x)
    L = [[1 if i == j else (raw[i][j] if j < i else 0) for j in range(n)] for i in range(n)]
    U = [[(raw[i][j] or 1) if i == j else (raw[i][j] if j > i else 0) for j in range(n)] for i in range(n)]
    LU = [[sum(L[i][k] * U[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    a = RationalMatrix.from_rows([LU[perm[i]] for i in range(n)])
    b = a.matvec(x)
    assert solve_linear_system(a, b) == x
    assert solve_many(a, [b, [0] * n]) == [x, [0] * n]


@given(connected_graphs())
def test_laplacian_shape(g):
    lap = laplacian(g)
    assert lap.is_symmetric()
    assert all(sum(lap.row(i)) == 0 for i in range(g.n))
    assert [lap[i, i] for i in range(g.n)] == list(g.degree)


@pytest.mark.parametrize("g, count", [
    (make_cycle(5), 5),
    (build_graph(4, list(itertools.combinations(range(4), 2))), 16),
    (build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)]), 81),
    (make_path(7), 1),
    (make_star(6), 1),
    (make_S(6, 4), 4),
    (build_graph(1, []), 1),
])
def test_spanning_tree_counts(g, count):
    assert spanning_tree_count(g) == count


@given(unicyclic_graphs())
def test_unicyclic_spanning_trees_equal_cycle_length(g):
    assert spanning_tree_count(g) == unicyclic_decompose(g).l


@settings(max_examples=40)
@given(connected_graphs(min_n=2, max_n=6))
def test_matrix_tree_against_brute_force(g):
    assert spanning_tree_count(g) == count_spanning_trees(g.n, g.edges)
