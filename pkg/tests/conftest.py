"""Shared hypothesis strategies for random instances.

Sizes stay small so the brute-force oracles remain usable inside
property tests.
"""

from __future__ import annotations

from hypothesis import strategies as st

from hypercover import Graph, Hypergraph, prufer_decode


@st.composite
def hypergraphs(draw, max_n: int = 8, max_m: int = 10, min_m: int = 1):
    """Random hypergraph with distinct nonempty edges."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    vertex = st.integers(min_value=0, max_value=n - 1)
    edge = st.frozensets(vertex, min_size=1, max_size=n)
    m = draw(st.integers(min_value=min_m, max_value=max_m))
    edges = draw(st.lists(edge, min_size=min_m, max_size=m, unique=True))
    return Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))


@st.composite
def covering_hypergraphs(draw, max_n: int = 8, max_extra: int = 6):
    """Random hypergraph with no isolated vertex, so edge covers exist."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    vertex = st.integers(min_value=0, max_value=n - 1)
    edge = st.frozensets(vertex, min_size=1, max_size=n)
    extra = draw(st.lists(edge, max_size=max_extra, unique=True))
    # A random partition of the vertex range guarantees feasibility.
    cut = sorted(draw(st.sets(st.integers(min_value=1, max_value=n - 1), max_size=3)) if n > 1 else [])
    blocks = []
    last = 0
    for c in cut + [n]:
        blocks.append(frozenset(range(last, c)))
        last = c
    seen: set[frozenset] = set()
    edges = []
    for e in blocks + extra:
        if e not in seen:
            seen.add(e)
            edges.append(tuple(sorted(e)))
    return Hypergraph(n, tuple(edges))


@st.composite
def graphs(draw, max_n: int = 9):
    """Random simple graph from an upper-triangle coin flip per pair."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    flips = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, flips) if keep])


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12):
    """Uniform-ish random labeled tree via a drawn builder sequence."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 1:
        return Graph(1, ((),))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = draw(
        st.lists(
            st.integers(min_value=0, max_value=n - 1),
            min_size=n - 2,
            max_size=n - 2,
        )
    )
    return prufer_decode(tuple(seq), n)
