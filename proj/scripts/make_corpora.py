#!/usr/bin/env python3
"""Regenerate the bundled graph6 corpora in data/.

Sources: the networkx graph atlas (every graph up to 7 vertices) and
nonisomorphic_trees for orders 8-9. Output is sorted per file so repeated
runs are byte-identical.
"""
import os

import networkx as nx

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def write(name, graphs):
    records = sorted(g6(g) for g in graphs)
    path = os.path.join(DATA, name)
    with open(path, "w") as f:
        for r in records:
            f.write(r + "\n")
    print(f"{name}: {len(records)} graphs")


def main():
    os.makedirs(DATA, exist_ok=True)
    atlas = nx.graph_atlas_g()[1:]  # drop the order-0 placeholder
    small = [g for g in atlas if g.number_of_nodes() <= 6]
    n7 = [g for g in atlas if g.number_of_nodes() == 7]
    trees = [t for n in (8, 9) for t in nx.nonisomorphic_trees(n)]
    write("all_n_le6.g6", small)
    write("all_n7.g6", n7)
    write("trees_n8_9.g6", trees)
    write("all_n_le7_trees_to9.g6", small + n7 + trees)


if __name__ == "__main__":
    main()
