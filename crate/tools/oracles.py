"""Reference values computed with networkx, independent of the Rust code.

Run with `python3 tools/oracles.py`. The printed numbers are frozen as
constants in the Rust test suites.
"""

from itertools import combinations

import networkx as nx


def count_labeled_triangulations(n):
    pairs = list(combinations(range(1, n + 1), 2))
    count = 0
    for subset in combinations(pairs, 3 * n - 6):
        g = nx.Graph(subset)
        if g.number_of_nodes() == n and nx.is_connected(g) and nx.check_planarity(g)[0]:
            count += 1
    return count


HEAVY = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
LIGHT = [(1, 3), (1, 4), (1, 5), (1, 8), (2, 5), (2, 6),
         (2, 8), (3, 6), (3, 8), (4, 6), (4, 7), (5, 7)]


def weight(edges):
    return sum(2 if e in HEAVY else 1 for e in edges)


def best_planar(candidates, fixed):
    # Every planar graph extends to a triangulation with zero-weight edges, so
    # the optimum equals the heaviest planar subgraph of the positive edges.
    best = None
    for k in range(len(candidates), -1, -1):
        for subset in combinations(candidates, k):
            edges = list(fixed) + list(subset)
            if nx.check_planarity(nx.Graph(edges))[0]:
                w = weight(edges)
                best = w if best is None else max(best, w)
        if best is not None and best >= weight(fixed) + 2 * k:
            break
    return best


def main():
    for n in (4, 5, 6, 7):
        print(f"labeled triangulations n={n}: {count_labeled_triangulations(n)}")

    print(f"counterexample optimum: {best_planar(HEAVY + LIGHT, [])}")
    print(f"counterexample optimum with path forced: {best_planar(LIGHT, HEAVY)}")

    g = nx.Graph()
    g.add_weighted_edges_from([(a, b, 2) for a, b in HEAVY] + [(a, b, 1) for a, b in LIGHT])
    g.add_weighted_edges_from(
        (a, b, 0) for a, b in combinations(range(1, 9), 2) if not g.has_edge(a, b)
    )
    t = nx.maximum_spanning_tree(g)
    print(f"maximum spanning tree: {sorted(tuple(sorted(e)) for e in t.edges())}, "
          f"weight {t.size(weight='weight')}")
    # Uniqueness: every other spanning tree must be strictly lighter. Swapping a
    # path edge for a non-tree edge never keeps weight 14 since other edges weigh <= 1.
    print("unique: every non-path edge weighs < 2:",
          all(d["weight"] < 2 for a, b, d in g.edges(data=True) if (min(a, b), max(a, b)) not in HEAVY))


if __name__ == "__main__":
    main()
