"""Canonical certificates for small graphs.

Individualization-refinement: an ordered partition is refined until equitable
(cells split by neighbour counts into every other cell), then the first
non-singleton cell is individualized vertex by vertex.  Each discrete leaf
gives a vertex order and the certificate is the lexicographically smallest
adjacency encoding over all leaves.  Vertices of a cell that are twins
(same neighbourhood apart from each other) are interchangeable by an
automorphism fixing the partition, so only one of each twin class is tried.
"""
from __future__ import annotations

import os

from .errors import SizeLimitExceeded
from .graph import Graph, _bfs

DEFAULT_CERT_LIMIT = 12


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    adj = g.adjacency
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        k = len(cells)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * k
                for w in adj[v]:
                    counts[where[w]] += 1
                sig[v] = tuple(counts)
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                for key in keys:
                    out.append([v for v in cell if sig[v] == key])
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _encode(g: Graph, order: list[int]) -> bytes:
    n = g.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    bits = bytearray((n * (n - 1) // 2 + 7) // 8)
    for u, v in g.edges:
        a, b = sorted((pos[u], pos[v]))
        k = b * (b - 1) // 2 + a
        bits[k >> 3] |= 0x80 >> (k & 7)
    return bytes([n]) + bytes(bits)


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    reps: list[int] = []
    seen: list[tuple[int, frozenset]] = []
    for v in cell:
        nv = set(g.adjacency[v])
        for u, nu in seen:
            if nu - {v} == nv - {u}:
                break
        else:
            seen.append((v, frozenset(nv)))
            reps.append(v)
    return reps


def canonical_certificate(g: Graph, limit: int | None = None) -> bytes:
    """Isomorphism-invariant byte string: equal iff the graphs are isomorphic."""
    if limit is None:
        limit = int(os.environ.get("WALKGAUGE_MAX_CERT_N", DEFAULT_CERT_LIMIT))
    if g.n > limit:
        raise SizeLimitExceeded(f"certificate limited to n <= {limit}, got {g.n}")
    if g.n == 0:
        return b"\x00"
    # initial split: degree, then sorted distance profile
    inf = g.n + 1

    def profile(v):
        dist = g.distances[v] if g.is_connected else _bfs(g.adjacency, v)
        return (g.degree[v], tuple(sorted(inf if d < 0 else d for d in dist)))

    prof = {v: profile(v) for v in range(g.n)}
    cells = [[v for v in range(g.n) if prof[v] == key] for key in sorted(set(prof.values()))]
    best: list[bytes] = []

    def search(cells):
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _encode(g, [c[0] for c in cells])
            if not best or code < best[0]:
                best[:] = [code]
            return
        cell = cells[target]
        for v in _twin_representatives(g, cell):
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(cells)
    return best[0]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_certificate(g) == canonical_certificate(h)


def certificate_hex(g: Graph) -> str:
    return canonical_certificate(g).hex()
