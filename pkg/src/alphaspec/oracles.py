"""Exhaustive reference computations for small graphs.

These deliberately share no code with the main algorithms in
``invariants``; they exist to cross-check them.
"""

from __future__ import annotations

import itertools

from .errors import CapacityError
from .graph import Graph

ORACLE_CAP = 12


def _guard(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapacityError(f"brute-force oracle limited to n <= {cap}, got {g.n}")


def brute_matching_number(g: Graph, cap: int = ORACLE_CAP) -> int:
    """Enumerate every matching: the lowest unmatched vertex is either skipped or paired."""
    _guard(g, cap)
    adj = g.adjacency

    def best(free: frozenset[int]) -> int:
        if len(free) < 2:
            return 0
        v = min(free)
        rest = free - {v}
        result = best(rest)
        for u in adj[v] & rest:
            result = max(result, 1 + best(rest - {u}))
        return result

    return best(frozenset(range(g.n)))


def brute_domination_number(g: Graph, cap: int = ORACLE_CAP) -> int:
    """Smallest vertex subset (by increasing size) whose closed neighborhood is everything."""
    _guard(g, cap)
    everything = set(range(g.n))
    for k in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), k):
            covered = set(subset)
            for v in subset:
                covered |= g.adjacency[v]
            if covered == everything:
                return k
    raise AssertionError("unreachable: the full vertex set dominates")


def brute_edge_cover_number(g: Graph, cap: int = ORACLE_CAP) -> int | None:
    """Minimum edge cover by exhaustive branching on the lowest uncovered vertex."""
    _guard(g, cap)
    if any(d == 0 for d in g.degrees):
        return None if g.n else 0
    incident = [[e for e in g.edges if v in e] for v in range(g.n)]
    best = g.m

    def search(covered: frozenset[int], used: int) -> None:
        nonlocal best
        # every new edge covers at most two vertices
        if used + (g.n - len(covered) + 1) // 2 >= best and len(covered) < g.n:
            return
        if len(covered) == g.n:
            best = used
            return
        v = min(set(range(g.n)) - covered)
        for u, w in incident[v]:
            search(covered | {u, w}, used + 1)

    search(frozenset(), 0)
    return best


def brute_hamiltonian_path(g: Graph, cap: int = 9) -> bool:
    """Try every vertex ordering."""
    _guard(g, cap)
    if g.n <= 1:
        return True
    for perm in itertools.permutations(range(g.n)):
        if perm[0] < perm[-1] and all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
            return True
    return False
