"""Simple undirected graphs, shortest-path invariants and unicyclic structure.

Vertices are the integers ``0..n-1``.  A :class:`Graph` is immutable once
built; the distance matrix is computed lazily and cached on the instance.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    NotUnicyclic,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    degree: tuple[int, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    @cached_property
    def distances(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(_bfs(self.adjacency, s)) for s in range(self.n))

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return all(d >= 0 for d in _bfs(self.adjacency, 0))

    @property
    def is_tree(self) -> bool:
        return self.is_connected and self.m == self.n - 1

    @property
    def is_unicyclic(self) -> bool:
        return self.is_connected and self.m == self.n

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges],
                           require_connected=False)


def _bfs(adjacency, source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def build_graph(n: int, edge_list: Iterable[Sequence[int]],
                require_connected: bool = True) -> Graph:
    """Validate and normalize an edge list into a :class:`Graph`.

    Raises SelfLoop, DuplicateEdge, VertexOutOfRange, and Disconnected (the
    last only when ``require_connected`` is set).
    """
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    edges: set[Edge] = set()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for pair in edge_list:
        u, v = (int(t) for t in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise DuplicateEdge(f"edge {e} listed twice")
        edges.add(e)
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)
    g = Graph(n, frozenset(edges), adjacency, tuple(len(a) for a in adjacency))
    if require_connected and not g.is_connected:
        raise Disconnected(f"graph on {n} vertices with {len(edges)} edges is disconnected")
    return g


def shortest_distance_matrix(g: Graph) -> tuple[tuple[int, ...], ...]:
    if not g.is_connected:
        raise Disconnected("distance matrix needs a connected graph")
    return g.distances


def transmission(g: Graph, x: int) -> int:
    return sum(shortest_distance_matrix(g)[x])


def weighted_transmission(g: Graph, x: int) -> int:
    row = shortest_distance_matrix(g)[x]
    return sum(g.degree[y] * row[y] for y in range(g.n))


def wiener_index(g: Graph) -> int:
    return sum(sum(row) for row in shortest_distance_matrix(g)) // 2


def eccentricity(g: Graph, x: int) -> int:
    return max(shortest_distance_matrix(g)[x])


# --- unicyclic structure ---------------------------------------------------

@dataclass(frozen=True)
class UnicyclicDecomposition:
    """A unicyclic graph split into its cycle and the trees hanging off it.

    ``cycle[i]`` is the root of branch ``i``; ``branch_root[x]`` is the cycle
    vertex whose branch contains ``x`` and ``branch_distance[x]`` the distance
    from ``x`` to that root.  ``branch_size[i]`` and ``branch_transmission[i]``
    are the order of branch ``i`` and the transmission of its root inside it.
    """
    graph: Graph
    cycle: tuple[int, ...]
    branch_root: tuple[int, ...]
    branch_distance: tuple[int, ...]
    branch_size: tuple[int, ...]
    branch_transmission: tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.cycle)

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def cycle_index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.cycle)}

    def branch_of(self, x: int) -> int:
        """Cycle index of the branch containing ``x``."""
        return self.cycle_index[self.branch_root[x]]

    def cycle_distance(self, i: int, j: int) -> int:
        k = abs(i - j) % self.l
        return min(k, self.l - k)

    def branch_members(self, i: int) -> list[int]:
        root = self.cycle[i]
        return [x for x in range(self.n) if self.branch_root[x] == root]

    @property
    def total_branch_transmission(self) -> int:
        return sum(self.branch_transmission)


def unicyclic_decompose(g: Graph) -> UnicyclicDecomposition:
    if not g.is_connected or g.m != g.n:
        raise NotUnicyclic(f"need connected graph with m = n, got n={g.n}, m={g.m}")
    deg = list(g.degree)
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    on_cycle = [v for v in range(g.n) if alive[v]]

    # normalized orientation: smallest label first, then its smaller cycle neighbour
    start = on_cycle[0]
    cyc_nbrs = sorted(w for w in g.adjacency[start] if alive[w])
    cycle = [start, cyc_nbrs[0]]
    while True:
        prev, cur = cycle[-2], cycle[-1]
        nxt = next(w for w in g.adjacency[cur] if alive[w] and w != prev)
        if nxt == start:
            break
        cycle.append(nxt)

    root = [-1] * g.n
    dist = [-1] * g.n
    queue = deque()
    for v in cycle:
        root[v], dist[v] = v, 0
        queue.append(v)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if root[w] < 0:
                root[w], dist[w] = root[u], dist[u] + 1
                queue.append(w)

    sizes = [0] * len(cycle)
    trans = [0] * len(cycle)
    index = {v: i for i, v in enumerate(cycle)}
    for x in range(g.n):
        i = index[root[x]]
        sizes[i] += 1
        trans[i] += dist[x]
    return UnicyclicDecomposition(g, tuple(cycle), tuple(root), tuple(dist),
                                  tuple(sizes), tuple(trans))


def distance_to_cycle(g: Graph, x: int) -> int:
    return unicyclic_decompose(g).branch_distance[x]


# --- named families ------------------------------------------------------

def _check_nl(n: int, l: int) -> None:
    if not 3 <= l <= n:
        raise ValueError(f"need 3 <= l <= n, got n={n}, l={l}")


def _cycle_edges(l: int) -> list[Edge]:
    return [(i, (i + 1) % l) for i in range(l)]


def make_cycle(n: int) -> Graph:
    _check_nl(n, n)
    return build_graph(n, _cycle_edges(n))


def make_S(n: int, l: int) -> Graph:
    """Cycle ``0..l-1`` with ``n - l`` pendant vertices on vertex 0."""
    _check_nl(n, l)
    return build_graph(n, _cycle_edges(l) + [(0, v) for v in range(l, n)])


def make_P(n: int, l: int) -> Graph:
    """Cycle ``0..l-1`` with a path ``0 - l - l+1 - ... - n-1`` attached at 0."""
    _check_nl(n, l)
    tail = [0] + list(range(l, n))
    return build_graph(n, _cycle_edges(l) + list(zip(tail, tail[1:])))


def make_star(n: int) -> Graph:
    """Star with center 0."""
    return build_graph(n, [(0, v) for v in range(1, n)])


def make_path(n: int) -> Graph:
    return build_graph(n, [(v, v + 1) for v in range(n - 1)])
