"""Immutable simple graphs and the constructors used throughout the package.

Vertices are the integers ``0..n-1``. Every constructor documents its
labeling so that matrices built from its output are reproducible row for row.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import ArityError, GraphStructureError, InvalidOrderError

Edge = tuple[int, int]


@dataclass(frozen=True)
class DegreeView:
    degrees: tuple[int, ...]
    sorted_desc: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return self.sorted_desc[0] if self.sorted_desc else 0

    @property
    def min_degree(self) -> int:
        return self.sorted_desc[-1] if self.sorted_desc else 0


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    ``edges`` may be given as any iterable of pairs; it is normalized to a
    sorted tuple of ``(u, v)`` with ``u < v``. Duplicates and self-loops are
    rejected. ``name`` is a label only and does not take part in equality.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, int) or n < 0:
            raise InvalidOrderError(f"vertex count must be a nonnegative integer, got {n!r}")
        normalized = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphStructureError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise GraphStructureError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.append((u, v))
        unique = sorted(set(normalized))
        if len(unique) != len(normalized):
            raise GraphStructureError("duplicate edge")
        object.__setattr__(self, "edges", tuple(unique))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def degree_view(self) -> DegreeView:
        return DegreeView(self.degrees, tuple(sorted(self.degrees, reverse=True)))

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def renamed(self, name: str) -> Graph:
        return Graph(self.n, self.edges, name)

    def spanning_subgraph(self, edges: Iterable[Edge], name: str = "") -> Graph:
        """Graph on the same vertex set keeping only ``edges`` (which must be edges of self)."""
        sub = Graph(self.n, edges, name)
        if not sub.edge_set <= self.edge_set:
            raise GraphStructureError("spanning subgraph uses edges not present in the graph")
        return sub

    def remove_edge(self, u: int, v: int) -> Graph:
        if u > v:
            u, v = v, u
        if (u, v) not in self.edge_set:
            raise GraphStructureError(f"edge ({u}, {v}) not in graph")
        return Graph(self.n, [e for e in self.edges if e != (u, v)], self.name + "-e" if self.name else "")

    def induced_subgraph(self, vertices: Sequence[int], name: str = "") -> Graph:
        """Induced subgraph relabeled so that ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(vertices), edges, name)


def empty(n: int) -> Graph:
    """``nK_1``: ``n`` isolated vertices."""
    if n < 0:
        raise InvalidOrderError("order must be nonnegative")
    return Graph(n, (), f"{n}K1" if n != 1 else "K1")


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidOrderError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, itertools.combinations(range(n), 2), f"K{n}")


def path(n: int) -> Graph:
    """``P_n`` with edges ``i -- i+1``."""
    if n < 1:
        raise InvalidOrderError(f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)), f"P{n}")


def cycle(n: int) -> Graph:
    """``C_n``: the path ``0..n-1`` closed by the edge ``0 -- n-1``."""
    if n < 3:
        raise InvalidOrderError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)], f"C{n}")


def star(n: int) -> Graph:
    """``S_n`` of order ``n``: center 0, leaves ``1..n-1``."""
    if n < 1:
        raise InvalidOrderError(f"star needs n >= 1, got {n}")
    return Graph(n, ((0, i) for i in range(1, n)), f"S{n}")


def complete_bipartite(p: int, q: int) -> Graph:
    """``K_{p,q}`` with parts ``0..p-1`` and ``p..p+q-1``."""
    if p < 1 or q < 1:
        raise InvalidOrderError(f"complete bipartite needs p, q >= 1, got ({p}, {q})")
    return Graph(p + q, ((i, p + j) for i in range(p) for j in range(q)), f"K{p},{q}")


def disjoint_union(gs: Sequence[Graph], name: str | None = None) -> Graph:
    """Union with vertex blocks laid out in list order."""
    edges: list[Edge] = []
    offset = 0
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    if name is None:
        name = "+".join(g.name or "?" for g in gs)
    return Graph(offset, edges, name)


def complement(g: Graph) -> Graph:
    edges = [e for e in itertools.combinations(range(g.n), 2) if e not in g.edge_set]
    return Graph(g.n, edges, f"co({g.name})" if g.name else "")


def generalized_corona(g: Graph, hs: Sequence[Graph], name: str | None = None) -> Graph:
    """Join vertex ``i`` of ``g`` to every vertex of ``hs[i]``.

    ``g`` keeps labels ``0..g.n-1``; the copies of ``hs[0], hs[1], ...`` follow
    in order, each occupying a consecutive block.
    """
    if len(hs) != g.n:
        raise ArityError(f"generalized corona needs {g.n} graphs, got {len(hs)}")
    edges: list[Edge] = list(g.edges)
    offset = g.n
    for i, h in enumerate(hs):
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        edges.extend((i, offset + j) for j in range(h.n))
        offset += h.n
    if name is None:
        name = f"{g.name or '?'}~o[{','.join(h.name or '?' for h in hs)}]"
    return Graph(offset, edges, name)


def corona(g: Graph, h: Graph) -> Graph:
    """``g o h``: one copy of ``h`` per vertex of ``g`` (copy ``i`` joined to vertex ``i``)."""
    if g.n < 1:
        raise InvalidOrderError("corona needs a base graph with at least one vertex")
    return generalized_corona(g, [h] * g.n, name=f"{g.name or '?'}o{h.name or '?'}")


def p_theta_family(n: int, allow_repeated_hosts: bool = False) -> list[Graph]:
    """Paths ``P_n`` with ``floor(n/2) - 2`` pendants on internal non-quasipendant vertices.

    Path vertices are ``0..n-1``; the eligible hosts are ``2..n-3``. Added
    pendant vertices get labels ``n, n+1, ...`` in increasing host order.
    Host choices equal under the reflection ``i -> n-1-i`` are reported once,
    keyed by the lexicographically smaller choice.
    """
    if n < 6:
        raise InvalidOrderError(f"the P_theta family needs n >= 6, got {n}")
    k = n // 2 - 2
    hosts = range(2, n - 2)
    choose = itertools.combinations_with_replacement if allow_repeated_hosts else itertools.combinations
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    for combo in choose(hosts, k):
        mirrored = tuple(sorted(n - 1 - h for h in combo))
        key = min(combo, mirrored)
        if key in seen:
            continue
        seen.add(key)
        edges = [(i, i + 1) for i in range(n - 1)]
        edges.extend((h, n + j) for j, h in enumerate(key))
        label = ",".join(f"v{h + 1}" for h in key)
        out.append(Graph(n + k, edges, f"P{n}+pendants@{label}"))
    return out


def random_connected(n: int, edge_prob: float, seed: int, *, retries: int = 16) -> Graph:
    """Seeded Erdos-Renyi sample conditioned on connectivity.

    Up to ``retries`` independent samples are drawn; if none is connected the
    last one is patched by joining its components along a random tree.
    The result depends only on ``(n, edge_prob, seed)``.
    """
    if n < 1:
        raise InvalidOrderError(f"random graph needs n >= 1, got {n}")
    if not 0.0 < edge_prob <= 1.0:
        raise ValueError(f"edge probability must lie in (0, 1], got {edge_prob}")
    rng = random.Random(seed)
    pairs = list(itertools.combinations(range(n), 2))
    name = f"G({n},{edge_prob:g};{seed})"
    for _ in range(retries):
        edges = [e for e in pairs if rng.random() < edge_prob]
        comps = _components(n, edges)
        if len(comps) == 1:
            return Graph(n, edges, name)
    rng.shuffle(comps)
    for i in range(1, len(comps)):
        u = rng.choice(sorted(comps[rng.randrange(i)]))
        v = rng.choice(sorted(comps[i]))
        edges.append((min(u, v), max(u, v)))
    return Graph(n, edges, name)


def _components(n: int, edges: Iterable[Edge]) -> list[set[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, set[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), set()).add(v)
    return [groups[r] for r in sorted(groups)]
