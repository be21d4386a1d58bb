"""Shared test utilities: independent oracles and seeded corpora.

The oracles here deliberately avoid the library's computation paths:
determinants come from permutation expansion, spanning trees from explicit
subset enumeration, connectivity from union-find.
"""
from __future__ import annotations

import itertools
import random

from leadergame.containment import LeaderLinks
from leadergame.graphs import Graph, random_connected_graph


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det_permutation(m) -> int:
    """Sum over permutations; O(n! * n), fine for the sizes used in tests."""
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
            if prod == 0:
                break
        total += _perm_sign(perm) * prod
    return total


def edges_connect_all(n: int, edges) -> bool:
    """Union-find connectivity over an explicit edge collection."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def connected_by_unionfind(g: Graph) -> bool:
    return edges_connect_all(g.n, g.edges)


def spanning_trees_by_enumeration(g: Graph) -> int:
    """Count (n-1)-edge subsets that connect every vertex."""
    if g.n == 1:
        return 1
    return sum(
        1
        for subset in itertools.combinations(g.sorted_edges(), g.n - 1)
        if edges_connect_all(g.n, subset)
    )


def connected_corpus(seed: int, count: int, n_min: int = 2, n_max: int = 6) -> list:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        p = rng.choice([0.15, 0.3, 0.5, 0.7])
        out.append(random_connected_graph(rng, n, extra_edge_prob=p))
    return out


def random_links(rng: random.Random, n: int, max_each: int = 3) -> LeaderLinks:
    k0 = rng.randint(1, min(max_each, n))
    k1 = rng.randint(1, min(max_each, n))
    return LeaderLinks.from_vertices(
        n, rng.sample(range(1, n + 1), k0), rng.sample(range(1, n + 1), k1)
    )
