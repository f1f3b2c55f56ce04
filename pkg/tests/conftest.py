from __future__ import annotations

from hypothesis import strategies as st

from palette_index.graph import Graph, build_graph


@st.composite
def simple_graphs(draw, min_n: int = 2, max_n: int = 7, max_m: int = 10):
    """Small simple graphs, possibly disconnected, possibly with isolated
    vertices (callers trim when they need none)."""
    n = draw(st.integers(min_n, max_n))
    pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pool), unique=True,
                          max_size=min(max_m, len(pool))))
    return build_graph(n, sorted(edges))


@st.composite
def bipartite_graphs(draw, max_side: int = 5, max_m: int = 12) -> Graph:
    """Random subgraphs of complete bipartite graphs, with the bipartition
    recoverable from the labeling."""
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    pool = [(i, a + j) for i in range(a) for j in range(b)]
    edges = draw(st.lists(st.sampled_from(pool), unique=True, min_size=1,
                          max_size=min(max_m, len(pool))))
    return build_graph(a + b, sorted(edges))
