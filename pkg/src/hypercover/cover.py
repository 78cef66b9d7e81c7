"""Greedy edge cover with a certified multiplicative bound, and its dual.

One greedy step takes a vertex ``x`` of minimum strong degree, puts every
maximal trace through ``x`` into the cover (each extended to the smallest
base edge reproducing it), and strongly removes ``x``.  The selected
vertices form an independent set ``X`` and the step sizes telescope into

    |C|  <=  sum of step sizes  <=  factor * |X|,

where the factor is the strong degeneracy of the input (every intermediate
restriction is reachable by strong removal, so the brute-force mighty value
tightens the same bound when it is affordable).  Since an edge cover is
never smaller than an independent set, a run certifies both quantities.

``greedy_transversal`` runs the same greedy on the dual hypergraph, turning
the cover into a transversal and the independent set into a matching.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._trace_index import TraceIndex
from .core import Hypergraph, check, dual
from .degeneracy import MIGHTY_BF_CAP, mighty_degeneracy_bf, strong_degeneracy
from .errors import IsolatedVertexError


@dataclass(frozen=True)
class CoverChecks:
    cover_valid: bool
    independent_valid: bool
    inequality_holds: bool


@dataclass(frozen=True)
class CoverCertificate:
    """Outcome of one greedy cover run.

    ``cover`` lists edge ids ascending; ``independent`` lists the selected
    vertices in removal order; ``per_step_edges`` the number of edges each
    step contributed.  ``bound_factor`` is the strong degeneracy used in the
    certified inequality and ``mighty_factor`` the brute-force tightening
    when it was requested and affordable.
    """

    cover: tuple[int, ...]
    independent: tuple[int, ...]
    per_step_edges: tuple[int, ...]
    bound_factor: int
    mighty_factor: int | None
    checks: CoverChecks


@dataclass(frozen=True)
class TransversalChecks:
    transversal_valid: bool
    matching_valid: bool
    inequality_holds: bool


@dataclass(frozen=True)
class TransversalCertificate:
    """Transversal and matching certified by one dual greedy run."""

    transversal: tuple[int, ...]
    matching: tuple[int, ...]
    per_step_edges: tuple[int, ...]
    bound_factor: int
    checks: TransversalChecks


def _require_no_isolated(h: Hypergraph) -> None:
    for v, row in enumerate(h.incidence):
        if not row:
            raise IsolatedVertexError(f"vertex {v} lies in no edge, so no cover exists")


def greedy_cover(
    h: Hypergraph,
    strong_value: int | None = None,
    mighty: bool = False,
) -> CoverCertificate:
    """Run the strong-degree greedy and return a self-checked certificate.

    ``strong_value`` may pass in an already computed strong degeneracy to
    avoid a second peeling pass on large inputs.  With ``mighty=True`` the
    brute-force mighty value is attached when the instance is small enough.

    Raises:
        IsolatedVertexError: some vertex lies in no edge.
    """
    _require_no_isolated(h)
    bound = strong_degeneracy(h).value if strong_value is None else strong_value
    mighty_value = mighty_degeneracy_bf(h) if mighty and h.n <= MIGHTY_BF_CAP else None

    index = TraceIndex(h, strong=True)
    cover_ids: list[int] = []
    chosen: list[int] = []
    per_step: list[int] = []
    while (entry := index.pop_min()) is not None:
        d, x = entry
        # No live vertex can be edgeless: isolated vertices are rejected up
        # front and strong removal takes whole edges at a time.
        assert d >= 1, f"vertex {x} became edgeless mid-run"
        pairs = index.maximal_traces_at(x)
        assert len(pairs) == d
        chosen.append(x)
        per_step.append(d)
        victims: set[int] = {x}
        for rep, trace in pairs:
            cover_ids.append(rep)
            victims |= trace
        for v in sorted(victims):
            index.delete_vertex(v)

    assert len(set(cover_ids)) == len(cover_ids), "an edge was selected twice"
    cover = tuple(sorted(cover_ids))
    independent = tuple(chosen)
    total = sum(per_step)
    inequality = len(cover) <= total <= bound * len(independent) if independent else len(cover) == 0
    if mighty_value is not None and independent:
        inequality = inequality and total <= mighty_value * len(independent)
    checks = CoverChecks(
        cover_valid=check(h, "edge-cover", cover),
        independent_valid=check(h, "independent-set", independent),
        inequality_holds=inequality,
    )
    assert checks.cover_valid and checks.independent_valid and checks.inequality_holds
    return CoverCertificate(cover, independent, tuple(per_step), bound, mighty_value, checks)


def greedy_transversal(h: Hypergraph) -> TransversalCertificate:
    """Greedy cover of the dual, mapped back: a transversal of ``h`` plus a
    matching in ``h`` within a factor of each other.

    Raises:
        IsolatedVertexError: some vertex lies in no edge (the dual would
            need an empty edge).
    """
    d = dual(h)
    cert = greedy_cover(d)
    # A dual edge is the incidence set of its generating vertices; map each
    # chosen dual edge back to its smallest generator.
    smallest: dict[frozenset[int], int] = {}
    for v in range(h.n):
        key = frozenset(h.incidence[v])
        if key not in smallest:
            smallest[key] = v
    transversal = tuple(sorted(smallest[d.edge_sets[i]] for i in cert.cover))
    matching = cert.independent
    total = sum(cert.per_step_edges)
    inequality = len(transversal) <= total <= cert.bound_factor * len(matching) if matching else len(transversal) == 0
    checks = TransversalChecks(
        transversal_valid=check(h, "transversal", transversal),
        matching_valid=check(h, "matching", matching),
        inequality_holds=inequality,
    )
    assert checks.transversal_valid and checks.matching_valid and checks.inequality_holds
    return TransversalCertificate(transversal, matching, cert.per_step_edges, cert.bound_factor, checks)
