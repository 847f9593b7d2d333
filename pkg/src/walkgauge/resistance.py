"""Effective resistance and the resistance-based indices.

Two routes compute ``r(x, y)``: the general one grounds a vertex, solves the
reduced Laplacian for a unit current injected at every other vertex and reads
resistances off potential differences; the unicyclic one adds branch depths
to the cycle resistance ``k (l - k) / l``.  A third, brute-force route counts
spanning forests and is only meant for small test graphs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact import RationalMatrix, laplacian, solve_many
from .graph import Graph, UnicyclicDecomposition, shortest_distance_matrix, unicyclic_decompose


@dataclass(frozen=True)
class ResistanceMatrix:
    matrix: RationalMatrix

    def __getitem__(self, xy) -> Fraction:
        return self.matrix[xy]

    @property
    def n(self) -> int:
        return self.matrix.rows

    def row(self, x: int) -> tuple:
        return self.matrix.row(x)


def resistance_matrix(g: Graph, ground: int = 0) -> ResistanceMatrix:
    """All-pairs effective resistance by the reduced-Laplacian route."""
    shortest_distance_matrix(g)  # connectivity check
    n = g.n
    keep = [v for v in range(n) if v != ground]
    reduced = laplacian(g).submatrix(keep, keep)
    # column j: potentials (ground = 0) for unit current in at keep[j], out at ground
    cols = solve_many(reduced, [[int(i == j) for i in range(n - 1)] for j in range(n - 1)])
    pot = [[Fraction(0)] * n for _ in range(n)]  # pot[a][b]: potential at b for injection at a
    for j, a in enumerate(keep):
        for i, b in enumerate(keep):
            pot[a][b] = cols[j][i]
    rows = [[pot[x][x] + pot[y][y] - 2 * pot[x][y] for y in range(n)] for x in range(n)]
    return ResistanceMatrix(RationalMatrix.from_rows(rows))


def cycle_resistance(l: int, k: int) -> Fraction:
    """Resistance between two vertices ``k`` steps apart on ``C_l``."""
    return Fraction(k * (l - k), l)


def resistance_unicyclic(dec: UnicyclicDecomposition, x: int, y: int) -> Fraction:
    rx, ry = dec.branch_root[x], dec.branch_root[y]
    if rx == ry:
        return Fraction(dec.graph.distances[x][y])
    i, j = dec.cycle_index[rx], dec.cycle_index[ry]
    return (dec.branch_distance[x] + dec.branch_distance[y]
            + cycle_resistance(dec.l, dec.cycle_distance(i, j)))


def resistance_matrix_unicyclic(dec: UnicyclicDecomposition) -> ResistanceMatrix:
    n = dec.n
    rows = [[resistance_unicyclic(dec, x, y) for y in range(n)] for x in range(n)]
    return ResistanceMatrix(RationalMatrix.from_rows(rows))


def resistances(g: Graph, path: str = "auto") -> ResistanceMatrix:
    """Resistance matrix by ``"laplacian"``, ``"unicyclic"`` or ``"auto"``.

    ``auto`` takes the unicyclic fast path whenever the graph is unicyclic.
    """
    if path == "auto":
        path = "unicyclic" if g.is_unicyclic else "laplacian"
    if path == "unicyclic":
        return resistance_matrix_unicyclic(unicyclic_decompose(g))
    if path == "laplacian":
        return resistance_matrix(g)
    raise ValueError(f"unknown resistance path {path!r}")


def _components(n, edges):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return None  # cycle
        parent[ru] = rv
    return find


def resistance_forest_oracle(g: Graph, x: int, y: int) -> Fraction:
    """r(x, y) = #(spanning 2-forests separating x and y) / #(spanning trees).

    Brute force over edge subsets; keep to n <= 7.
    """
    if x == y:
        return Fraction(0)
    edges = sorted(g.edges)
    trees = 0
    for sub in itertools.combinations(edges, g.n - 1):
        if _components(g.n, sub) is not None:
            trees += 1
    forests = 0
    for sub in itertools.combinations(edges, g.n - 2):
        find = _components(g.n, sub)
        if find is not None and find(x) != find(y):
            forests += 1
    return Fraction(forests, trees)


# --- indices ---------------------------------------------------------------

def _rmat(g, r):
    return r if r is not None else resistances(g)


def resistance_centrality(g: Graph, x: int, r: ResistanceMatrix | None = None) -> Fraction:
    return sum(_rmat(g, r).row(x), Fraction(0))


def weighted_resistance_centrality(g: Graph, x: int, r: ResistanceMatrix | None = None) -> Fraction:
    row = _rmat(g, r).row(x)
    return sum((g.degree[y] * row[y] for y in range(g.n)), Fraction(0))


def _pair_sum(g, r, weight):
    r = _rmat(g, r)
    return sum((weight(x, y) * r[x, y] for x, y in itertools.combinations(range(g.n), 2)),
               Fraction(0))


def kirchhoff_index(g: Graph, r: ResistanceMatrix | None = None) -> Fraction:
    return _pair_sum(g, r, lambda x, y: 1)


def additive_degree_kirchhoff(g: Graph, r: ResistanceMatrix | None = None) -> Fraction:
    d = g.degree
    return _pair_sum(g, r, lambda x, y: d[x] + d[y])


def multiplicative_degree_kirchhoff(g: Graph, r: ResistanceMatrix | None = None) -> Fraction:
    d = g.degree
    return _pair_sum(g, r, lambda x, y: d[x] * d[y])


def kf_branch_decomposition(dec: UnicyclicDecomposition) -> Fraction:
    """Kirchhoff index assembled from branch Wiener indices, branch sizes,
    root transmissions and the cycle resistances between roots."""
    g = dec.graph
    l = dec.l
    sizes, trans = dec.branch_size, dec.branch_transmission
    total = Fraction(0)
    for i in range(l):
        members = dec.branch_members(i)
        total += sum(g.distances[a][b] for a, b in itertools.combinations(members, 2))
    for i, j in itertools.combinations(range(l), 2):
        total += sizes[j] * trans[i] + sizes[i] * trans[j]
    cross = sum((sizes[i] * sizes[j] * cycle_resistance(l, dec.cycle_distance(i, j))
                 for i in range(l) for j in range(l)), Fraction(0))
    return total + cross / 2


# --- unicyclic closed forms ----------------------------------------------------

def weighted_resistance_centrality_closed(dec: UnicyclicDecomposition, x: int,
                                          r: ResistanceMatrix | None = None) -> Fraction:
    """R^w(x) = 2 R(x) + 2 depth(x) - (n - l); depth 0 for cycle vertices."""
    g = dec.graph
    return 2 * resistance_centrality(g, x, r) + 2 * dec.branch_distance[x] - (dec.n - dec.l)


def additive_degree_kirchhoff_closed(dec: UnicyclicDecomposition,
                                     r: ResistanceMatrix | None = None) -> Fraction:
    n, l = dec.n, dec.l
    return (4 * kirchhoff_index(dec.graph, r) + 2 * dec.total_branch_transmission
            - n * (n - l))


def multiplicative_degree_kirchhoff_closed(dec: UnicyclicDecomposition,
                                           r: ResistanceMatrix | None = None) -> Fraction:
    n, l = dec.n, dec.l
    return (4 * kirchhoff_index(dec.graph, r) + 4 * dec.total_branch_transmission
            - (2 * n + 1) * (n - l))
