"""Instance factories: the gap family, random trees via builder sequences,
random hypergraphs and graphs, and the small named shapes.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercover import (
    Graph,
    complete_graph,
    cycle_graph,
    gap_family,
    path_graph,
    prufer_decode,
    prufer_encode,
    random_graph,
    random_hypergraph,
    random_tree,
    star_graph,
    strong_degree,
)
from hypercover.errors import (
    InfeasibleEdgeCountError,
    NTooSmallError,
    ParameterError,
)

from conftest import trees


def pendant_clique(n):
    """Clique on 1..n-1 plus the pendant edge 0-1."""
    edges = [(0, 1)]
    edges += [(u, v) for u in range(1, n) for v in range(u + 1, n)]
    return Graph.from_edges(n, edges)


class TestGapFamily:
    def test_frozen_n5(self):
        g = gap_family(5)
        assert g.n == 5
        assert g.edges == ((0, 1), (0, 2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3))
        assert g.edge_labels == ("N[v1]", "N(v2)", "N(v3)", "N(v4)", "N(v5)")

    @pytest.mark.parametrize("n", range(3, 9))
    def test_edges_are_pendant_clique_neighborhoods(self, n):
        """Edge list = closed hood of the pendant, open hoods of the rest."""
        g = gap_family(n)
        base = pendant_clique(n)
        expected = [tuple(sorted((0, *base.adj[0])))]
        expected += [base.adj[v] for v in range(1, n)]
        assert list(g.edges) == expected

    def test_strong_degrees_n4(self):
        g = gap_family(4)
        assert tuple(strong_degree(g, v) for v in range(4)) == (2, 3, 2, 2)

    def test_too_small(self):
        with pytest.raises(NTooSmallError):
            gap_family(2)


class TestPrufer:
    def test_frozen_decode(self):
        t = prufer_decode((0, 0, 1), 5)
        assert t.edges == ((0, 1), (0, 2), (0, 3), (1, 4))

    def test_decode_errors(self):
        with pytest.raises(ParameterError):
            prufer_decode((), 1)
        with pytest.raises(ParameterError):
            prufer_decode((0,), 5)
        with pytest.raises(ParameterError):
            prufer_decode((4,), 3)

    def test_encode_needs_two_vertices(self):
        with pytest.raises(ParameterError):
            prufer_encode(Graph(1, ((),)))

    @given(st.data())
    def test_decode_then_encode(self, data):
        n = data.draw(st.integers(min_value=3, max_value=16))
        seq = tuple(
            data.draw(
                st.lists(
                    st.integers(min_value=0, max_value=n - 1),
                    min_size=n - 2,
                    max_size=n - 2,
                )
            )
        )
        assert prufer_encode(prufer_decode(seq, n)) == seq

    @given(trees(min_n=2, max_n=16))
    def test_encode_then_decode(self, t):
        assert prufer_decode(prufer_encode(t), t.n) == t


class TestRandomTree:
    @given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=5))
    @settings(max_examples=40)
    def test_is_a_spanning_tree(self, n, seed):
        t = random_tree(n, seed)
        assert t.n == n
        assert t.m == n - 1
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in t.adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        assert len(seen) == n

    def test_deterministic(self):
        assert random_tree(12, seed=5) == random_tree(12, seed=5)
        assert random_tree(12, seed=5) != random_tree(12, seed=6)

    def test_too_small(self):
        with pytest.raises(NTooSmallError):
            random_tree(0)


class TestRandomHypergraph:
    def test_frozen(self):
        h = random_hypergraph(6, 5, 3, seed=7)
        assert h.edges == ((1, 3), (0, 4, 5), (0, 4), (0, 1, 4), (0, 3))

    @given(
        st.integers(min_value=1, max_value=9),
        st.integers(min_value=0, max_value=10),
        st.integers(min_value=1, max_value=4),
        st.integers(min_value=0, max_value=3),
    )
    @settings(max_examples=50)
    def test_shape(self, n, m, k, seed):
        try:
            h = random_hypergraph(n, m, k, seed=seed)
        except InfeasibleEdgeCountError:
            return
        assert h.n == n and h.m == m
        assert all(1 <= len(e) <= k for e in h.edges)
        assert len({frozenset(e) for e in h.edges}) == m

    @given(st.integers(min_value=3, max_value=9), st.integers(min_value=0, max_value=3))
    @settings(max_examples=30)
    def test_cover_feasible_leaves_no_vertex_out(self, n, seed):
        h = random_hypergraph(n, n + 2, 3, seed=seed, cover_feasible=True)
        covered = set().union(*map(set, h.edges))
        assert covered == set(range(n))

    def test_deterministic(self):
        a = random_hypergraph(8, 6, 3, seed=1)
        assert a == random_hypergraph(8, 6, 3, seed=1)
        assert a != random_hypergraph(8, 6, 3, seed=2)

    def test_too_many_edges(self):
        # only 3 distinct nonempty edges exist on two vertices
        with pytest.raises(InfeasibleEdgeCountError):
            random_hypergraph(2, 4, 2)

    def test_too_few_edges_for_cover(self):
        with pytest.raises(InfeasibleEdgeCountError):
            random_hypergraph(9, 2, 3, cover_feasible=True)

    def test_bad_parameters(self):
        with pytest.raises(ParameterError):
            random_hypergraph(0, 1, 1)
        with pytest.raises(ParameterError):
            random_hypergraph(3, 1, 0)


class TestNamedShapes:
    def test_path(self):
        assert path_graph(1).adj == ((),)
        assert path_graph(4).edges == ((0, 1), (1, 2), (2, 3))

    def test_cycle(self):
        assert cycle_graph(4).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
        with pytest.raises(NTooSmallError):
            cycle_graph(2)

    def test_star(self):
        g = star_graph(3, center=1)
        assert g.adj == ((1,), (0, 2, 3), (1,), (1,))
        with pytest.raises(ParameterError):
            star_graph(2, center=5)

    def test_complete(self):
        g = complete_graph(4)
        assert g.m == 6
        assert all(g.degree(v) == 3 for v in range(4))

    def test_random_graph_extremes(self):
        assert random_graph(5, 0.0).m == 0
        assert random_graph(5, 1.0).m == 10
        assert random_graph(6, 0.5, seed=3) == random_graph(6, 0.5, seed=3)
        with pytest.raises(ParameterError):
            random_graph(3, 1.5)
