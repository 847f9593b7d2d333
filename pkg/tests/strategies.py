from hypothesis import strategies as st

from walkgauge.enumerate import prufer_decode
from walkgauge.graph import build_graph


@st.composite
def trees(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return build_graph(n, prufer_decode(seq, n))


@st.composite
def connected_graphs(draw, min_n=2, max_n=7, max_extra=6):
    t = draw(trees(min_n, max_n))
    missing = [(u, v) for u in range(t.n) for v in range(u + 1, t.n) if not t.has_edge(u, v)]
    extra = draw(st.lists(st.sampled_from(missing), unique=True, max_size=max_extra)) if missing else []
    return build_graph(t.n, list(t.edges) + extra)


@st.composite
def unicyclic_graphs(draw, min_n=3, max_n=8):
    t = draw(trees(min_n, max_n))
    missing = [(u, v) for u in range(t.n) for v in range(u + 1, t.n) if not t.has_edge(u, v)]
    return build_graph(t.n, list(t.edges) + [draw(st.sampled_from(missing))])


@st.composite
def relabeled(draw, graphs):
    g = draw(graphs)
    perm = draw(st.permutations(range(g.n)))
    return g, g.relabel(perm)
