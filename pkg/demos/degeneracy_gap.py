#!/usr/bin/env python3
"""Three peeling parameters and a family that drives two of them apart.

Plain degeneracy peels on the number of edges through a vertex, strong
degeneracy on the number of maximal edges, and the mighty variant only
looks at restrictions reachable by strong removal.  The chain

    mighty <= strong <= plain

always holds.  The pendant-clique family below keeps the mighty value at 2
while the strong value grows without bound: every nonempty strong removal
annihilates the instance, so the adversary restriction that forces n-2
onto the strong parameter is simply never reachable.

Run: python3 demos/degeneracy_gap.py
"""

from hypercover import (
    degeneracy,
    gap_family,
    mighty_degeneracy_bf,
    strong_degeneracy,
    strong_remove,
)


def main():
    print("n    strong   mighty   plain")
    for n in range(3, 11):
        g = gap_family(n)
        strong = strong_degeneracy(g).value
        mighty = mighty_degeneracy_bf(g)
        plain = degeneracy(g).value
        print(f"{n:<5}{strong:<9}{mighty:<9}{plain}")
        assert mighty <= strong <= plain

    print()
    print("Why the mighty value stays at 2 (n = 5 shown):")
    g = gap_family(5)
    for r in ({0}, {1}, {2}):
        out = strong_remove(g, r)
        survivors = "nothing" if out is None else str(out.vertices)
        print(f"  strong removal of {{v{min(r) + 1}}} leaves {survivors}")
    print("Every edge meets every other vertex, so any removal cascades")
    print("through the whole vertex set; only the untouched instance is")
    print("reachable, and there the pendant vertex has strong degree 2.")

    print()
    eo = strong_degeneracy(g)
    print("The strong peeling order for n = 5:")
    for step, (v, d) in enumerate(zip(eo.order, eo.step_values), start=1):
        print(f"  step {step}: remove v{v + 1} at strong degree {d}")
    print(f"strong degeneracy = max of the step values = {eo.value}")


if __name__ == "__main__":
    main()
