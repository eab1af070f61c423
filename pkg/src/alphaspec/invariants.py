"""Exact combinatorial invariants: pendants, matching, edge cover, domination, Hamiltonicity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CapacityError, GraphStructureError
from .graph import Edge, Graph

DOMINATION_CAP = 30
HAMILTONIAN_CAP = 20
UNKNOWN = "unknown(n too large)"


class PendantInfo(NamedTuple):
    p: int
    q: int
    pendants: frozenset[int]
    quasi: frozenset[int]


def pendant_and_quasi(g: Graph) -> PendantInfo:
    deg = g.degrees
    pendants = frozenset(v for v in range(g.n) if deg[v] == 1)
    quasi = frozenset(u for v in pendants for u in g.adjacency[v])
    return PendantInfo(len(pendants), len(quasi), pendants, quasi)


def connectivity(g: Graph) -> tuple[bool, list[frozenset[int]]]:
    """Connected components by breadth-first search; the empty graph counts as connected."""
    seen = [False] * g.n
    comps: list[frozenset[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return len(comps) <= 1, comps


def is_connected(g: Graph) -> bool:
    return connectivity(g)[0]


def matching_number(g: Graph) -> tuple[int, list[Edge]]:
    """Maximum matching by Edmonds' blossom algorithm."""
    n = g.n
    adj = [sorted(s) for s in g.adjacency]
    match = [-1] * n

    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            on_path = [False] * n
            while True:
                a = base[a]
                on_path[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if on_path[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = find_augmenting(root)
        while end != -1:
            pv = parent[end]
            nxt = match[pv]
            match[end], match[pv] = pv, end
            end = nxt

    witness = sorted((v, match[v]) for v in range(n) if match[v] > v)
    return len(witness), witness


def edge_cover_number(g: Graph) -> int | None:
    """Minimum edge cover size, ``None`` when an isolated vertex makes covers impossible."""
    if g.n == 0:
        return 0
    if g.min_degree == 0:
        return None
    return g.n - matching_number(g)[0]


def _dominates(g: Graph, chosen) -> bool:
    covered = set(chosen)
    for v in chosen:
        covered |= g.adjacency[v]
    return len(covered) == g.n


def domination_number(g: Graph, cap: int = DOMINATION_CAP) -> tuple[int, frozenset[int]]:
    """Minimum dominating set by branch and bound over closed neighborhoods.

    Each node picks an undominated vertex with the fewest dominators and
    branches over those dominators (largest gain first). Nodes are pruned with
    ``ceil(undominated / max gain)`` against the incumbent, which starts as the
    greedy solution.
    """
    n = g.n
    if n > cap:
        raise CapacityError(f"domination number capped at n <= {cap}, got n = {n}; shrink the corpus or raise the cap")
    if n == 0:
        return 0, frozenset()
    full = (1 << n) - 1
    closed = [(1 << v) | sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    dominators = [[u for u in range(n) if closed[u] >> v & 1] for v in range(n)]

    dominated, greedy = 0, []
    while dominated != full:
        u = max(range(n), key=lambda x: ((closed[x] & ~dominated).bit_count(), -x))
        greedy.append(u)
        dominated |= closed[u]
    best = list(greedy)

    def search(dominated: int, chosen: list[int]) -> None:
        nonlocal best
        if dominated == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        undominated = full & ~dominated
        gains = [(closed[u] & undominated).bit_count() for u in range(n)]
        need = -(-undominated.bit_count() // max(gains))
        if len(chosen) + need >= len(best):
            return
        target, fewest = -1, n + 1
        rest = undominated
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if len(dominators[v]) < fewest:
                target, fewest = v, len(dominators[v])
        for u in sorted(dominators[target], key=lambda x: (-gains[x], x)):
            chosen.append(u)
            search(dominated | closed[u], chosen)
            chosen.pop()

    search(0, [])
    return len(best), frozenset(best)


@dataclass(frozen=True)
class StarForest:
    stars: tuple[tuple[int, frozenset[int]], ...]

    @property
    def centers(self) -> frozenset[int]:
        return frozenset(c for c, _ in self.stars)

    def validate(self, g: Graph) -> None:
        seen: list[int] = []
        for c, leaves in self.stars:
            seen.append(c)
            seen.extend(leaves)
            for v in leaves:
                if not g.has_edge(c, v):
                    raise AssertionError(f"leaf {v} is not adjacent to center {c}")
        if sorted(seen) != list(range(g.n)):
            raise AssertionError("stars do not partition the vertex set")
        if not _dominates(g, self.centers):
            raise AssertionError("centers do not dominate the graph")


def dominating_star_forest(g: Graph, cap: int = DOMINATION_CAP) -> StarForest:
    """Spanning star forest whose centers form a minimal dominating set.

    The minimum dominating set is shrunk to minimality (a no-op for a minimum
    set), every other vertex is assigned to an adjacent center (forced
    vertices first, then the lowest center index), and a center left without
    leaves takes one from a neighboring center that can spare it.
    """
    if g.min_degree == 0 and g.n > 0:
        raise GraphStructureError("star forest needs a graph without isolated vertices")
    _, witness = domination_number(g, cap)
    centers = sorted(witness)
    for c in list(centers):
        trial = [x for x in centers if x != c]
        if trial and _dominates(g, trial):
            centers = trial
    cset = set(centers)
    leaves: dict[int, set[int]] = {c: set() for c in centers}
    for v in range(g.n):
        if v in cset:
            continue
        options = sorted(cset & g.adjacency[v])
        leaves[options[0]].add(v)
    for c in centers:
        if leaves[c]:
            continue
        for v in sorted(g.adjacency[c] - cset):
            owner = next(o for o in centers if v in leaves[o])
            if len(leaves[owner]) > 1:
                leaves[owner].discard(v)
                leaves[c].add(v)
                break
    return StarForest(tuple((c, frozenset(leaves[c])) for c in centers))


def has_hamiltonian_path(g: Graph, cap: int = HAMILTONIAN_CAP) -> bool | None:
    """Bitmask DP over (visited set, endpoint); ``None`` above ``cap`` vertices."""
    n = g.n
    if n > cap:
        return None
    if n <= 1:
        return True
    if not is_connected(g) or sum(1 for d in g.degrees if d == 1) > 2:
        return False
    nbr = [sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    # ends[mask]: bitmask of vertices at which a path covering exactly mask can end
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, full + 1):
        e = ends[mask]
        if not e:
            continue
        if mask == full:
            return True
        while e:
            low = e & -e
            v = low.bit_length() - 1
            e ^= low
            ext = nbr[v] & ~mask
            while ext:
                bit = ext & -ext
                ext ^= bit
                ends[mask | bit] |= bit
    return False


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    p: int
    q: int
    max_degree: int
    min_degree: int
    domination: int | None
    matching: int
    edge_cover: int | None
    connected: bool
    isolated_count: int
    has_hamiltonian_path: bool | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "q": self.q,
            "max_degree": self.max_degree,
            "min_degree": self.min_degree,
            "domination": self.domination if self.domination is not None else UNKNOWN,
            "matching": self.matching,
            "edge_cover": self.edge_cover,
            "connected": self.connected,
            "isolated_count": self.isolated_count,
            "has_hamiltonian_path": (
                self.has_hamiltonian_path if self.has_hamiltonian_path is not None else UNKNOWN
            ),
        }

    @property
    def has_unknown(self) -> bool:
        return self.domination is None or self.has_hamiltonian_path is None


def invariant_report(
    g: Graph, domination_cap: int = DOMINATION_CAP, hamiltonian_cap: int = HAMILTONIAN_CAP
) -> InvariantReport:
    info = pendant_and_quasi(g)
    try:
        gamma: int | None = domination_number(g, domination_cap)[0]
    except CapacityError:
        gamma = None
    return InvariantReport(
        n=g.n,
        m=g.m,
        p=info.p,
        q=info.q,
        max_degree=g.max_degree,
        min_degree=g.min_degree,
        domination=gamma,
        matching=matching_number(g)[0],
        edge_cover=edge_cover_number(g),
        connected=is_connected(g),
        isolated_count=sum(1 for d in g.degrees if d == 0),
        has_hamiltonian_path=has_hamiltonian_path(g, hamiltonian_cap),
    )


def is_star(g: Graph) -> bool:
    """True for ``S_n`` with ``n >= 2`` under any labeling."""
    return g.n >= 2 and g.m == g.n - 1 and g.max_degree == g.n - 1


def is_corona_k1(g: Graph) -> bool:
    """True when ``g`` is ``H o K_1`` for a connected ``H`` (any labeling)."""
    if g.n == 2:
        return g.m == 1
    if g.n % 2 or not is_connected(g):
        return False
    info = pendant_and_quasi(g)
    if info.p != g.n // 2 or info.q != g.n // 2 or info.pendants & info.quasi:
        return False
    deg = g.degrees
    return all(sum(1 for u in g.adjacency[w] if deg[u] == 1) == 1 for w in info.quasi)


def all_internal_quasipendant(g: Graph) -> bool:
    quasi = pendant_and_quasi(g).quasi
    return all(v in quasi for v in range(g.n) if g.degrees[v] >= 2)
