#!/usr/bin/env python3
"""Transversals through the dual hypergraph, audited by brute force.

Swapping the roles of vertices and edges turns an edge cover into a
transversal (a hitting set) and an independent set into a matching.  The
greedy cover therefore doubles as a greedy transversal: run it on the
dual, map the chosen dual edges back to the vertices that generated them.

Run: python3 demos/duality_and_oracles.py
"""

from hypercover import (
    Hypergraph,
    dual,
    exact,
    format_hypergraph,
    greedy_transversal,
    random_hypergraph,
)


def main():
    h = Hypergraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (1, 3)])
    print("The instance:")
    print(format_hypergraph(h), end="")

    print()
    d = dual(h)
    print("Its dual (dual vertex i = original edge i; labels name the")
    print("original vertices that generated each dual edge):")
    for edge, label in zip(d.edges, d.edge_labels):
        print(f"  {label:4s} -> dual edge {edge}")

    print()
    cert = greedy_transversal(h)
    print("Greedy transversal certificate:")
    print(f"  transversal : {cert.transversal}")
    print(f"  matching    : {cert.matching}")
    print(f"  bound factor: {cert.bound_factor}")

    tau = exact(h, "min-transversal")
    rho = exact(h, "max-matching")
    print(f"  exact minimum transversal = {tau.value}, exact maximum matching = {rho.value}")
    print(f"  sandwich: {rho.value} = rho <= |T| = {len(cert.transversal)} within "
          f"factor {cert.bound_factor} of |M| = {len(cert.matching)}")

    print()
    print("The oracles replay the same sandwich on random instances:")
    for seed in range(4):
        g = random_hypergraph(8, 9, 3, seed=seed, cover_feasible=True)
        cert = greedy_transversal(g)
        tau = exact(g, "min-transversal").value
        rho = exact(g, "max-matching").value
        print(f"  seed {seed}: rho={rho} <= tau={tau} <= |T|={len(cert.transversal)}"
              f" <= factor*|M| = {cert.bound_factor * len(cert.matching)}")
        assert rho <= tau <= len(cert.transversal) <= cert.bound_factor * len(cert.matching)


if __name__ == "__main__":
    main()
