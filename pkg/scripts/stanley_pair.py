#!/usr/bin/env python3
"""Find non-isomorphic graphs with equal chromatic symmetric functions and compare beta_3.

Graphs on ``--vertices`` vertices are enumerated up to isomorphism by brute
force; pairs with equal beta_2 power-sum expansions are reported together
with the difference of their beta_3 expansions.
"""
import argparse
from collections import defaultdict
from itertools import permutations

from bshopf.chromatic import psi_powersum_subsets
from bshopf.graphs import STANLEY_PAIR, all_graphs, beta_n


def canonical_edges(g):
    return min(tuple(sorted(tuple(sorted((p[u], p[w]))) for u, w in g.edges))
               for p in permutations(range(g.v)))


def key(x):
    return tuple(sorted(x.items()))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=5)
    args = ap.parse_args()

    seen = {}
    for g in all_graphs(args.vertices):
        if g.is_connected:
            seen.setdefault(canonical_edges(g), g)
    classes = defaultdict(list)
    for g in seen.values():
        classes[key(psi_powersum_subsets(beta_n(g, 2)))].append(g)

    print(f"{len(seen)} connected graphs on {args.vertices} vertices up to isomorphism")
    for group in classes.values():
        if len(group) < 2:
            continue
        for i, g1 in enumerate(group):
            for g2 in group[i + 1:]:
                diff = psi_powersum_subsets(beta_n(g1, 3)) - psi_powersum_subsets(beta_n(g2, 3))
                print("pair:", g1.edges, "|", g2.edges)
                print("  beta_3 difference:", diff)
    pinned = {canonical_edges(g) for g in STANLEY_PAIR}
    print("pinned pair found:", any(
        {canonical_edges(a) for a in group} >= pinned for group in classes.values()))


if __name__ == "__main__":
    main()
