"""Edge-list text and graph6 encodings.

Edge-list format: first line ``n m``, then ``m`` lines ``u v`` (0-based);
anything after ``#`` on a line is a comment.
"""
from __future__ import annotations

import re
from pathlib import Path

from .errors import DuplicateEdge, ParseError, SelfLoop, VertexOutOfRange
from .graph import Graph, build_graph

GRAPH6_HEADER = ">>graph6<<"


def parse_edge_list(text: str, require_connected: bool = True) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b, lineno)
        else:
            edges.append((a, b, lineno))
    if header is None:
        raise ParseError("empty input: missing 'n m' header")
    n, m, hline = header
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", hline)
    seen = set()
    for u, v, lineno in edges:
        e = (min(u, v), max(u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        if e in seen:
            raise DuplicateEdge(f"line {lineno}: edge {e} listed twice")
        seen.add(e)
    return build_graph(n, [(u, v) for u, v, _ in edges], require_connected=require_connected)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def _n_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def encode_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    data = _n_bytes(g.n)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        data.append(val)
    return (GRAPH6_HEADER if header else "") + "".join(chr(v + 63) for v in data)


def decode_graph6(s: str, require_connected: bool = True) -> Graph:
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    vals = [ord(c) - 63 for c in s]
    if not vals or any(v < 0 or v > 63 for v in vals):
        raise ParseError(f"invalid graph6 string {s!r}")
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] != 63:
        if len(vals) < 4:
            raise ParseError("truncated graph6 size field")
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise ParseError("truncated graph6 size field")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges, require_connected=require_connected)


_G6_TOKEN = re.compile(r"^[\x3f-\x7e]+$")


def looks_like_graph6(text: str) -> bool:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        return False
    first = lines[0]
    if first.startswith(GRAPH6_HEADER):
        return True
    return len(lines) == 1 and bool(_G6_TOKEN.match(first))


def parse_graph_text(text: str, require_connected: bool = True) -> Graph:
    if looks_like_graph6(text):
        line = next(ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#"))
        return decode_graph6(line, require_connected)
    return parse_edge_list(text, require_connected)


def read_graph(path, require_connected: bool = True) -> Graph:
    return parse_graph_text(Path(path).read_text(), require_connected)
