"""Maximum matching and matching-based regularity steps.

The search is Edmonds' blossom algorithm in its array form: a BFS forest of
even vertices, blossom contraction by rebasing vertices onto the cycle's
least common ancestor, and augmentation along parent pointers.  It is
deterministic: adjacency is scanned in ascending order, the BFS queue is
FIFO, and the greedy seed matching scans vertices in ascending order, so a
given graph always yields the same matching.

Regularity steps never trust the search: every matching is re-verified
(disjointness, coverage, membership in the intended host graph) before it
is applied.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Iterable

from .errors import NoPerfectMatchingError, ValidationError
from .graph_core import Graph, Matching, add_matching, regularity, remove_matching


def _blossom(n: int, neigh: Callable[[int], Iterable[int]]) -> list[int]:
    """Maximum matching on vertices 0..n-1 with adjacency given by neigh.

    Returns the mate array (mate[v] = -1 for exposed vertices).  neigh must
    yield neighbors in ascending order for deterministic output.
    """
    mate = [-1] * n
    parent = [0] * n
    base = [0] * n

    for v in range(n):
        if mate[v] == -1:
            for u in neigh(v):
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break

    def lca(a: int, b: int) -> int:
        flagged = [False] * n
        while True:
            a = base[a]
            flagged[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if flagged[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting(root: int) -> bool:
        visited = [False] * n
        for i in range(n):
            parent[i] = -1
            base[i] = i
        visited[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in neigh(v):
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # Odd cycle: contract the blossom at its base.
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not visited[i]:
                                visited[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # Exposed vertex reached: augment along parents.
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = mate[pv]
                            mate[u] = pv
                            mate[pv] = u
                            u = nxt
                        return True
                    visited[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] == -1:
            find_augmenting(v)
    return mate


def _mate_to_matching(mate: list[int]) -> Matching:
    return Matching((v, mate[v]) for v in range(len(mate))
                    if mate[v] != -1 and v < mate[v])


def _recheck(n: int, m: Matching, is_pair: Callable[[int, int], bool],
             where: str) -> None:
    # Independent of the search: coverage and membership are re-derived
    # from the pairs themselves.  Disjointness is enforced by Matching.
    if not m.is_perfect(n):
        raise AssertionError(f"{where}: matching is not perfect after search")
    for u, v in m:
        if not is_pair(u, v):
            raise AssertionError(f"{where}: pair ({u}, {v}) not admissible")


def maximum_matching(x: Graph) -> Matching:
    """Deterministic maximum matching of x."""
    adj = x.neighbor_lists()
    mate = _blossom(x.n, lambda v: adj[v])
    return _mate_to_matching(mate)


def perfect_matching(x: Graph) -> Matching:
    """Perfect matching of x, or NoPerfectMatchingError with the best found."""
    if x.n % 2 == 1:
        raise NoPerfectMatchingError(
            f"odd vertex count {x.n} admits no perfect matching",
            maximum_matching(x))
    m = maximum_matching(x)
    if not m.is_perfect(x.n):
        raise NoPerfectMatchingError(
            f"maximum matching has size {len(m)} < {x.n // 2}", m)
    present = set(x.edges)
    _recheck(x.n, m, lambda u, v: (u, v) in present, "perfect_matching")
    return m


def increment_regularity(x: Graph) -> tuple[Graph, Matching]:
    """Raise regularity by one by adding a perfect matching of the complement.

    The complement is never materialized: the search walks an implicit
    adjacency view, which keeps the memory footprint linear in x.
    """
    k = regularity(x)
    if k is None:
        raise ValidationError("increment requires a regular graph")
    if x.n % 2 == 1:
        raise ValidationError(f"odd vertex count {x.n}: no perfect matching exists")
    if not x.is_simple():
        raise ValidationError("increment requires a simple graph")
    adj_sets = [set(nbrs) for nbrs in x.neighbor_lists()]

    def co_neigh(v: int):
        s = adj_sets[v]
        return (u for u in range(x.n) if u != v and u not in s)

    mate = _blossom(x.n, co_neigh)
    m = _mate_to_matching(mate)
    if not m.is_perfect(x.n):
        raise NoPerfectMatchingError(
            f"complement has no perfect matching (best size {len(m)})", m)
    _recheck(x.n, m,
             lambda u, v: u != v and v not in adj_sets[u],
             "increment_regularity")
    return add_matching(x, m), m


def decrement_regularity(x: Graph) -> tuple[Graph, Matching]:
    """Lower regularity by one by deleting a perfect matching of x."""
    k = regularity(x)
    if k is None:
        raise ValidationError("decrement requires a regular graph")
    if k < 1:
        raise ValidationError("cannot decrement a 0-regular graph")
    if x.n % 2 == 1:
        raise ValidationError(f"odd vertex count {x.n}: no perfect matching exists")
    m = perfect_matching(x)
    return remove_matching(x, m), m
