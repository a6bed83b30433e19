"""Independent oracles and graph factories for the test suite.

Everything here is deliberately naive: sieves, exhaustive enumeration,
brute force over subsets.  None of it shares code with the package, so an
agreement between the two is evidence, not tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import networkx as nx
import numpy as np

from expanderlab import Graph, from_edge_list


def sieve_primes(limit: int) -> np.ndarray:
    """All primes <= limit by the sieve of Eratosthenes."""
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for i in range(2, int(limit**0.5) + 1):
        if mask[i]:
            mask[i * i:: i] = False
    return np.flatnonzero(mask)


# -- named graphs ------------------------------------------------------------


def k4() -> Graph:
    return from_edge_list(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(v, v + 1) for v in range(n - 1)])


def petersen() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def two_triangles() -> Graph:
    return from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def doubled_cycle(n: int) -> Graph:
    """4-regular connected multigraph: every cycle edge twice."""
    e = [(v, (v + 1) % n) for v in range(n)]
    return from_edge_list(n, e + e)


def parallel_k2(mult: int) -> Graph:
    """Two vertices joined by mult parallel edges."""
    return from_edge_list(2, [(0, 1)] * mult)


# -- random graphs via networkx ---------------------------------------------


def to_graph(g: nx.Graph) -> Graph:
    return from_edge_list(g.number_of_nodes(),
                          [(int(u), int(v)) for u, v in g.edges()])


def random_regular(k: int, n: int, seed: int) -> Graph:
    """Connected random k-regular simple graph (seed bumped until connected)."""
    s = seed
    while True:
        g = nx.random_regular_graph(k, n, seed=s)
        if nx.is_connected(g):
            return to_graph(g)
        s += 1000003


def random_gnp(n: int, p: float, seed: int) -> Graph:
    return to_graph(nx.gnp_random_graph(n, p, seed=seed))


# -- oracles -----------------------------------------------------------------


def nx_max_matching_size(x: Graph) -> int:
    g = nx.Graph()
    g.add_nodes_from(range(x.n))
    g.add_edges_from(set(x.edges))
    return len(nx.max_weight_matching(g, maxcardinality=True))


def exhaustive_max_matching_size(x: Graph) -> int:
    """Branch over edges; exact for small n."""
    edges = sorted(set(x.edges))
    best = 0

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for j in range(i, len(edges)):
            u, v = edges[j]
            if not (used >> u & 1 or used >> v & 1):
                rec(j + 1, used | 1 << u | 1 << v, size + 1)

    rec(0, 0, 0)
    return best


def brute_force_expansion(x: Graph) -> tuple[Fraction, tuple[int, ...]]:
    """Exact h and the lexicographically least minimizing subset.

    Subsets enumerated ascending by size then lexicographically; ratios
    compared as Fractions, so the first strict minimum seen wins ties the
    same way the package defines them only if scanned in lexicographic
    order over sorted tuples, which combinations() provides per size.
    Across sizes, candidates are collected and the least sorted tuple
    among exact minimizers is returned.
    """
    mult = x.edge_multiset()
    best: Fraction | None = None
    minimizers: list[tuple[int, ...]] = []
    for size in range(1, x.n // 2 + 1):
        for subset in combinations(range(x.n), size):
            fs = set(subset)
            cut = sum(w for (u, v), w in mult.items() if (u in fs) != (v in fs))
            ratio = Fraction(cut, size)
            if best is None or ratio < best:
                best = ratio
                minimizers = [subset]
            elif ratio == best:
                minimizers.append(subset)
    assert best is not None
    return best, min(minimizers)


def brute_force_bipartite(x: Graph) -> bool:
    """Try all 2^n colorings; exact for small n."""
    for mask in range(1 << x.n):
        if all((mask >> u & 1) != (mask >> v & 1) for u, v in x.edges):
            return True
    return False
