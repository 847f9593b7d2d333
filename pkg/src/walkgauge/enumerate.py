"""Enumeration of trees and unicyclic graphs up to isomorphism.

Two independent routes produce the unicyclic classes:

* ``"prufer"``: every labeled tree from its Prüfer sequence, reduced to
  unlabeled trees by rooted-tree codes at the centre, then every non-edge
  added and the results deduplicated by :func:`canonical_certificate`.
* ``"forest"``: a cycle ``C_l`` with an unlabeled rooted tree hung at each
  cycle vertex; two such arrangements are isomorphic exactly when their
  sequences of rooted trees agree up to rotation and reflection.

The forest route is the default because it scales to n = 10 and beyond; the
Prüfer route is kept as a cross-check and is practical up to n = 8.
"""
from __future__ import annotations

import heapq
import itertools
import os
from functools import lru_cache
from typing import Iterator

from .canon import canonical_certificate
from .errors import SizeLimitExceeded
from .graph import Graph, build_graph

DEFAULT_MAX_N = 9


def max_enumeration_n() -> int:
    return int(os.environ.get("WALKGAUGE_MAX_N", DEFAULT_MAX_N))


def _check_limit(n: int, limit: int | None) -> None:
    if limit is None:
        limit = max_enumeration_n()
    if n > limit:
        raise SizeLimitExceeded(f"enumeration limited to n <= {limit}, got {n}")


# --- trees ----------------------------------------------------------------

def prufer_decode(seq, n: int) -> list[tuple[int, int]]:
    """Edge list of the labeled tree on ``0..n-1`` with Prüfer sequence ``seq``."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def prufer_encode(g: Graph) -> list[int]:
    if not g.is_tree:
        raise ValueError("Prüfer encoding needs a tree")
    degree = list(g.degree)
    removed = [False] * g.n
    leaves = [v for v in range(g.n) if degree[v] == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(g.n - 2):
        leaf = heapq.heappop(leaves)
        removed[leaf] = True
        nb = next(w for w in g.adjacency[leaf] if not removed[w])
        seq.append(nb)
        degree[nb] -= 1
        if degree[nb] == 1:
            heapq.heappush(leaves, nb)
    return seq


def _rooted_code(adj, root: int, parent: int = -1) -> str:
    return "(" + "".join(sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def tree_code(g: Graph) -> str:
    """Canonical string of an unlabeled tree (rooted at its centre or bicentre)."""
    if g.n <= 2:
        return "(" * g.n + ")" * g.n
    degree = list(g.degree)
    layer = [v for v in range(g.n) if degree[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in g.adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_rooted_code(g.adjacency, c) for c in layer)


def enumerate_trees(n: int, limit: int | None = None) -> Iterator[Graph]:
    """One tree per isomorphism class, from the Prüfer sequences of labeled trees."""
    _check_limit(n, limit)
    if n < 1:
        return
    seen = set()
    for seq in itertools.product(range(n), repeat=max(n - 2, 0)):
        edges = prufer_decode(seq, n)
        t = build_graph(n, edges)
        code = tree_code(t)
        if code not in seen:
            seen.add(code)
            yield t


# --- unicyclic: Prüfer route ------------------------------------------------

def _unicyclic_prufer(n: int) -> Iterator[Graph]:
    seen = set()
    for t in enumerate_trees(n, limit=n):
        for u, v in itertools.combinations(range(n), 2):
            if t.has_edge(u, v):
                continue
            g = build_graph(n, list(t.edges) + [(u, v)])
            cert = canonical_certificate(g)
            if cert not in seen:
                seen.add(cert)
                yield g


# --- unicyclic: cycle + rooted forest route -----------------------------------

@lru_cache(maxsize=None)
def rooted_trees(k: int) -> tuple[tuple, ...]:
    """All unlabeled rooted trees on ``k`` vertices, as sorted nested tuples."""
    if k == 1:
        return ((),)
    out = set()
    for children in _forests(k - 1, None):
        out.add(tuple(sorted(children)))
    return tuple(sorted(out))


def _forests(total: int, bound) -> Iterator[list]:
    # multisets of rooted trees of total size `total`, each tree <= bound (non-increasing)
    if total == 0:
        yield []
        return
    for size in range(total, 0, -1):
        for t in rooted_trees(size):
            key = (size, t)
            if bound is not None and key > bound:
                continue
            for rest in _forests(total - size, key):
                yield [t] + rest


def _tree_size(t: tuple) -> int:
    return 1 + sum(_tree_size(c) for c in t)


def _dihedral_min(seq: tuple) -> tuple:
    l = len(seq)
    variants = []
    for s in (seq, seq[::-1]):
        for r in range(l):
            variants.append(s[r:] + s[:r])
    return min(variants)


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(1, n), parts - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _assemble(seq: tuple) -> Graph:
    l = len(seq)
    edges = [(i, (i + 1) % l) for i in range(l)]
    nxt = l

    def hang(tree, at):
        nonlocal nxt
        for child in tree:
            v = nxt
            nxt += 1
            edges.append((at, v))
            hang(child, v)

    for i, tree in enumerate(seq):
        hang(tree, i)
    return build_graph(nxt, edges)


def _unicyclic_forest(n: int) -> Iterator[Graph]:
    for l in range(3, n + 1):
        seen = set()
        for sizes in _compositions(n, l):
            for seq in itertools.product(*(rooted_trees(s) for s in sizes)):
                key = _dihedral_min(tuple(seq))
                if key not in seen:
                    seen.add(key)
        for key in sorted(seen, key=lambda s: (tuple(_tree_size(t) for t in s), s)):
            yield _assemble(key)


def enumerate_unicyclic(n: int, strategy: str = "forest", limit: int | None = None) -> Iterator[Graph]:
    """Stream one unicyclic graph per isomorphism class on ``n`` vertices.

    Output is deterministic; with ``strategy="forest"`` graphs come grouped by
    cycle length, smallest first.
    """
    if n < 3:
        raise ValueError("unicyclic graphs need n >= 3")
    _check_limit(n, limit)
    if strategy == "forest":
        return _unicyclic_forest(n)
    if strategy == "prufer":
        return _unicyclic_prufer(n)
    raise ValueError(f"unknown strategy {strategy!r}")


@lru_cache(maxsize=None)
def tree_classes(n: int) -> tuple[Graph, ...]:
    """Cached tuple form of :func:`enumerate_trees`."""
    return tuple(enumerate_trees(n))
