"""Degeneracy-style parameters obtained by peeling minimum-degree vertices.

``strong_degeneracy`` peels on strong degree (number of maximal traces
through a vertex) and ``degeneracy`` on plain degree (number of distinct
traces).  Each returns the full elimination order; the parameter itself is
the largest per-step minimum.

The brute-force variants enumerate vertex subsets directly and are kept
deliberately independent of the peeling machinery: ``strong_degeneracy_bf``
maximizes the minimum strong degree over all induced restrictions, while
``mighty_degeneracy_bf`` does so over restrictions reachable by strong
removal only (drop a set R together with every vertex of every edge meeting
R).  No subexponential algorithm is known for the latter parameter, hence
the small size caps.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._trace_index import TraceIndex
from .core import Hypergraph
from .errors import TooLargeError

STRONG_BF_CAP = 12
MIGHTY_BF_CAP = 14


@dataclass(frozen=True)
class EliminationOrder:
    """A peeling order together with the minimum degree seen at each step."""

    order: tuple[int, ...]
    step_values: tuple[int, ...]

    @property
    def value(self) -> int:
        return max(self.step_values, default=0)


def _peel(h: Hypergraph, strong: bool) -> EliminationOrder:
    index = TraceIndex(h, strong=strong)
    order: list[int] = []
    values: list[int] = []
    while (entry := index.pop_min()) is not None:
        d, v = entry
        order.append(v)
        values.append(d)
        index.delete_vertex(v)
    return EliminationOrder(tuple(order), tuple(values))


def strong_degeneracy(h: Hypergraph) -> EliminationOrder:
    """Peel the minimum-strong-degree vertex (smallest id on ties) until no
    vertex remains."""
    return _peel(h, strong=True)


def degeneracy(h: Hypergraph) -> EliminationOrder:
    """Plain-degree analog of :func:`strong_degeneracy`."""
    return _peel(h, strong=False)


def _min_strong_degree(edge_masks: list[int], subset_mask: int) -> int:
    """Minimum, over the vertices of ``subset_mask``, of the number of
    maximal traces containing the vertex."""
    traces: set[int] = set()
    for mask in edge_masks:
        t = mask & subset_mask
        if t:
            traces.add(t)
    maximal = [t for t in traces if not any(u != t and t | u == u for u in traces)]
    best: int | None = None
    rest = subset_mask
    while rest:
        bit = rest & -rest
        rest ^= bit
        d = sum(1 for t in maximal if t & bit)
        if best is None or d < best:
            best = d
            if best == 0:
                break
    return best or 0


def strong_degeneracy_bf(h: Hypergraph, max_vertices: int = STRONG_BF_CAP) -> int:
    """Exhaustive maximum of the minimum strong degree over every nonempty
    induced restriction.

    Raises:
        TooLargeError: more vertices than ``max_vertices``.
    """
    if h.n > max_vertices:
        raise TooLargeError(f"{h.n} vertices exceed the cap of {max_vertices}")
    masks = [sum(1 << v for v in e) for e in h.edges]
    best = 0
    for subset in range(1, 1 << h.n):
        value = _min_strong_degree(masks, subset)
        if value > best:
            best = value
    return best


def mighty_degeneracy_bf(h: Hypergraph, max_vertices: int = MIGHTY_BF_CAP) -> int:
    """Exhaustive maximum of the minimum strong degree over every restriction
    reachable by strong removal (the empty removal, keeping everything,
    included).

    Raises:
        TooLargeError: more vertices than ``max_vertices``.
    """
    if h.n > max_vertices:
        raise TooLargeError(f"{h.n} vertices exceed the cap of {max_vertices}")
    masks = [sum(1 << v for v in e) for e in h.edges]
    full = (1 << h.n) - 1
    survivors: set[int] = set()
    for removed in range(1 << h.n):
        gone = removed
        for mask in masks:
            if mask & removed:
                gone |= mask
        w = full & ~gone
        if w:
            survivors.add(w)
    best = 0
    for w in survivors:
        value = _min_strong_degree(masks, w)
        if value > best:
            best = value
    return best
