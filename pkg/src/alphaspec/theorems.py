"""Certificate-producing checkers for the A_alpha eigenvalue-distribution bounds.

Each checker evaluates one result on one ``(graph, alpha)`` pair and returns
:class:`BoundCheck` records. Hypotheses that are not met produce skipped
records (with a reason) rather than exceptions. Counts are compared as exact
integers; the only tolerance is the eigenvalue-to-endpoint snapping done by
:class:`~alphaspec.spectra.IntervalSpec`.
"""

from __future__ import annotations

import dataclasses
import math
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import spectra as sp
from .corpus import CorpusItem
from .formats import CorpusManifest, graph6_encode
from .graph import Edge, Graph, disjoint_union
from .invariants import (
    InvariantReport,
    all_internal_quasipendant,
    connectivity,
    domination_number,
    invariant_report,
    is_corona_k1,
    is_star,
)


@dataclass(frozen=True)
class Tolerances:
    boundary: float = sp.BOUNDARY_TOL
    eig: float = sp.EIG_TOL

    def to_dict(self) -> dict:
        return {"boundary": self.boundary, "eig": self.eig}


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class BoundCheck:
    theorem_id: str
    graph_name: str
    graph6: str
    alpha: float | None
    lhs: int | float | None
    rhs: int | float | None
    relation: str
    holds: bool | None
    tight: bool | None
    witness: dict = field(default_factory=dict)
    skipped_reason: str | None = None

    @property
    def skipped(self) -> bool:
        return self.skipped_reason is not None

    @property
    def equality_claimed(self) -> bool:
        return bool(self.witness.get("equality_claimed"))

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "graph_name": self.graph_name,
            "graph6": self.graph6,
            "alpha": self.alpha,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "holds": self.holds,
            "tight": self.tight,
            "witness": self.witness,
            "skipped_reason": self.skipped_reason,
        }


_RELATIONS: dict[str, Callable[[int, int], bool]] = {
    ">=": lambda a, b: a >= b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
}


def certify(
    theorem_id: str,
    g: Graph,
    alpha: float | None,
    lhs: int,
    rhs: int,
    relation: str,
    witness: dict | None = None,
    claimed: bool = False,
) -> BoundCheck:
    witness = dict(witness or {})
    witness["equality_claimed"] = claimed
    return BoundCheck(
        theorem_id, g.name, _graph6(g), alpha, lhs, rhs, relation,
        _RELATIONS[relation](lhs, rhs), lhs == rhs, witness,
    )


def skip(theorem_id: str, g: Graph, alpha: float | None, relation: str, reason: str) -> BoundCheck:
    return BoundCheck(theorem_id, g.name, _graph6(g), alpha, None, None, relation, None, None, {}, reason)


@lru_cache(maxsize=8192)
def spectrum_of(g: Graph, alpha: float, eig_tol: float = sp.EIG_TOL) -> sp.Spectrum:
    return sp.eig_sym(sp.build_a_alpha(g, alpha), eig_tol)


@lru_cache(maxsize=4096)
def report_of(g: Graph) -> InvariantReport:
    return invariant_report(g)


@lru_cache(maxsize=8192)
def n_alpha_multiplicity(g: Graph, alpha: float, eig_tol: float, boundary: float) -> tuple[int, tuple[int, ...]]:
    """Multiplicity of alpha in the spectrum of N_alpha(g), with the vertices it is built on."""
    n_mat, verts = sp.build_n_alpha(g, alpha)
    return sp.multiplicity_at(sp.eig_sym(n_mat, eig_tol), alpha, boundary), tuple(verts)


@lru_cache(maxsize=8192)
def _graph6(g: Graph) -> str:
    return graph6_encode(g)


def count(s: sp.Spectrum, lo: float, hi: float, lo_closed: bool, hi_closed: bool, tol: float) -> int:
    """Eigenvalues of ``s`` in the interval; an interval with lo > hi is empty."""
    if lo > hi:
        return 0
    return sp.count_in_interval(s, sp.IntervalSpec(lo, hi, lo_closed, hi_closed, tol))


def _interval(lo: float, hi: float, lo_closed: bool = True, hi_closed: bool = True) -> dict:
    return {"lo": lo, "hi": hi, "lo_closed": lo_closed, "hi_closed": hi_closed}


def _hypothesis(g: Graph, alpha: float | None, *, connected=False, min_order=1,
                alpha_range: tuple[float, float] | None = None, alpha_below_one=False) -> str | None:
    """Return the first violated hypothesis as a reason string, or None."""
    if g.n < min_order:
        return f"order {g.n} < {min_order}"
    if connected and not connectivity(g)[0]:
        return "graph is not connected"
    if alpha is not None:
        if alpha_range and not (alpha_range[0] <= alpha <= alpha_range[1]):
            return f"alpha {alpha:g} outside [{alpha_range[0]:g}, {alpha_range[1]:g}]"
        if alpha_below_one and alpha >= 1.0:
            return "alpha = 1 (A_1 = D): the multiplicity identity behind this bound needs alpha < 1"
    return None


HALF_TO_ONE = (0.5, 1.0)


def _skip_all(ids: Sequence[str], g: Graph, alpha, relation: str, reason: str) -> tuple[BoundCheck, ...]:
    return tuple(skip(t, g, alpha, relation, reason) for t in ids)


def check_T22_alpha_multiplicity(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> BoundCheck:
    """Multiplicity of alpha equals p - q + (multiplicity of alpha in N_alpha)."""
    tid = "T2.2"
    reason = _hypothesis(g, alpha, alpha_below_one=True)
    if reason is None and alpha == 0.0 and g.min_degree == 0:
        reason = "isolated vertices add eigenvalue 0 = alpha outside the identity"
    if reason:
        return skip(tid, g, alpha, "==", reason)
    r = report_of(g)
    m_n, verts = n_alpha_multiplicity(g, alpha, tol.eig, tol.boundary)
    lhs = sp.multiplicity_at(spectrum_of(g, alpha, tol.eig), alpha, tol.boundary)
    witness = {"p": r.p, "q": r.q, "n_alpha_vertices": list(verts), "m_n_alpha": m_n}
    return certify(tid, g, alpha, lhs, r.p - r.q + m_n, "==", witness)


def _pendant_pair(ids: tuple[str, str], g: Graph, alpha: float, rhs: int, extra: dict,
                  tol: Tolerances, claimed: bool) -> tuple[BoundCheck, BoundCheck]:
    s = spectrum_of(g, alpha, tol.eig)
    lo = sp.psi(g.n, alpha)
    delta = g.max_degree
    low = count(s, lo, alpha, True, True, tol.boundary)
    high = count(s, alpha, delta, True, True, tol.boundary)
    return (
        certify(ids[0], g, alpha, low, rhs, ">=", {**extra, "interval": _interval(lo, alpha)}, claimed),
        certify(ids[1], g, alpha, high, rhs, ">=", {**extra, "interval": _interval(alpha, delta)}, claimed),
    )


def check_T31_pendant(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> tuple[BoundCheck, BoundCheck]:
    """At least p eigenvalues in [psi, alpha] and at least p in [alpha, Delta]."""
    ids = ("T3.1-i", "T3.1-ii")
    reason = _hypothesis(g, alpha, connected=True, min_order=3)
    if reason:
        return _skip_all(ids, g, alpha, ">=", reason)
    r = report_of(g)
    claimed = alpha < 1.0 and (is_star(g) or is_corona_k1(g))
    return _pendant_pair(ids, g, alpha, r.p, {"p": r.p, "psi": sp.psi(g.n, alpha)}, tol, claimed)


def check_C31_union(gs: Sequence[Graph], alpha: float, tol: Tolerances = DEFAULT_TOL,
                    name: str | None = None) -> tuple[BoundCheck, BoundCheck]:
    """Pendant-interval bounds for a disjoint union, with rhs the summed pendant counts."""
    ids = ("C3.1-i", "C3.1-ii")
    g = disjoint_union(gs, name=name)
    for i, part in enumerate(gs):
        reason = _hypothesis(part, alpha, connected=True, min_order=3)
        if reason is None and report_of(part).p == 0:
            reason = "has no pendant vertex"
        if reason:
            return _skip_all(ids, g, alpha, ">=", f"component {i}: {reason}")
    ps = [report_of(part).p for part in gs]
    return _pendant_pair(ids, g, alpha, sum(ps), {"component_p": ps, "psi": sp.psi(g.n, alpha)}, tol, False)


def check_C32_AQ_specializations(g: Graph, tol: Tolerances = DEFAULT_TOL) -> tuple[BoundCheck, ...]:
    """Adjacency and signless-Laplacian versions of the pendant bounds."""
    ids = ("C3.2-i", "C3.2-ii", "C3.2-iii", "C3.2-iv")
    reason = _hypothesis(g, None, connected=True, min_order=3)
    if reason is None and report_of(g).p == 0:
        reason = "graph has no pendant vertex"
    if reason:
        return _skip_all(ids, g, None, ">=", reason)
    p = report_of(g).p
    delta = g.max_degree
    root = math.sqrt(((g.n + 1) // 2) * (g.n // 2))
    adj = sp.eig_sym(sp.build_adjacency(g), tol.eig)
    sig = sp.eig_sym(sp.build_signless_laplacian(g), tol.eig)
    cases = [
        (adj, "A", -root, 0.0),
        (adj, "A", 0.0, float(delta)),
        (sig, "Q", 0.0, 1.0),
        (sig, "Q", 1.0, 2.0 * delta),
    ]
    out = []
    for tid, (s, matrix, lo, hi) in zip(ids, cases):
        lhs = count(s, lo, hi, True, True, tol.boundary)
        out.append(certify(tid, g, None, lhs, p, ">=", {"p": p, "matrix": matrix, "interval": _interval(lo, hi)}))
    return tuple(out)


def check_C33_quasipendant(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> tuple[BoundCheck, BoundCheck]:
    """The pendant intervals hold at least q eigenvalues each."""
    ids = ("C3.3-i", "C3.3-ii")
    reason = _hypothesis(g, alpha, connected=True, min_order=3)
    if reason:
        return _skip_all(ids, g, alpha, ">=", reason)
    q = report_of(g).q
    return _pendant_pair(ids, g, alpha, q, {"q": q, "psi": sp.psi(g.n, alpha)}, tol, False)


def _open_at_alpha(ids: tuple[str, str], g: Graph, alpha: float, rhs: int, extra: dict,
                   tol: Tolerances) -> tuple[BoundCheck, BoundCheck]:
    s = spectrum_of(g, alpha, tol.eig)
    lo = sp.psi(g.n, alpha)
    delta = g.max_degree
    below = count(s, lo, alpha, True, False, tol.boundary)
    above = count(s, alpha, delta, False, True, tol.boundary)
    return (
        certify(ids[0], g, alpha, below, rhs, ">=", {**extra, "interval": _interval(lo, alpha, True, False)}),
        certify(ids[1], g, alpha, above, rhs, ">=", {**extra, "interval": _interval(alpha, delta, False, True)}),
    )


def check_C34_refined(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> tuple[BoundCheck, BoundCheck]:
    """At least q - m_N(alpha) eigenvalues in [psi, alpha) and in (alpha, Delta]."""
    ids = ("C3.4-i", "C3.4-ii")
    reason = _hypothesis(g, alpha, connected=True, min_order=3, alpha_below_one=True)
    if reason:
        return _skip_all(ids, g, alpha, ">=", reason)
    q = report_of(g).q
    m_n, verts = n_alpha_multiplicity(g, alpha, tol.eig, tol.boundary)
    extra = {"q": q, "m_n_alpha": m_n, "n_alpha_vertices": list(verts), "psi": sp.psi(g.n, alpha)}
    return _open_at_alpha(ids, g, alpha, q - m_n, extra, tol)


def check_R31_all_internal_quasipendant(g: Graph, alpha: float,
                                        tol: Tolerances = DEFAULT_TOL) -> tuple[BoundCheck, BoundCheck]:
    """When every internal vertex is quasi-pendant, q bounds both open-at-alpha counts."""
    ids = ("R3.1-i", "R3.1-ii")
    reason = _hypothesis(g, alpha, connected=True, min_order=3, alpha_below_one=True)
    if reason is None and not all_internal_quasipendant(g):
        reason = "some internal vertex is not quasi-pendant"
    if reason:
        return _skip_all(ids, g, alpha, ">=", reason)
    q = report_of(g).q
    return _open_at_alpha(ids, g, alpha, q, {"q": q, "psi": sp.psi(g.n, alpha)}, tol)


def check_P41_subgraph_monotonicity(g: Graph, kept_edges: Sequence[Edge], a: float, alpha: float,
                                    tol: Tolerances = DEFAULT_TOL) -> tuple[BoundCheck, BoundCheck]:
    """Deleting edges cannot decrease m[0, a) nor increase m[a, Delta]."""
    ids = ("P4.1-i", "P4.1-ii")
    reason = _hypothesis(g, alpha, alpha_range=HALF_TO_ONE)
    h = Graph(g.n, kept_edges, f"{g.name}[F]")
    if reason is None and not h.edge_set <= g.edge_set:
        reason = "F is not a subset of E(G)"
    if reason is None and not 0.0 <= a <= g.max_degree:
        reason = f"a = {a:g} outside [0, Delta(G)]"
    if reason:
        return _skip_all(ids, g, alpha, ">=", reason)
    sg = spectrum_of(g, alpha, tol.eig)
    sh = spectrum_of(h, alpha, tol.eig)
    b = tol.boundary
    witness = {"a": a, "removed_edges": g.m - h.m, "subgraph_graph6": graph6_encode(h)}
    claimed = h.m == g.m
    return (
        certify(ids[0], g, alpha, count(sh, 0.0, a, True, False, b), count(sg, 0.0, a, True, False, b),
                ">=", witness, claimed),
        certify(ids[1], g, alpha, count(sg, a, g.max_degree, True, True, b),
                count(sh, a, h.max_degree, True, True, b), ">=", witness, claimed),
    )


def check_C42_hamiltonian(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> tuple[BoundCheck, BoundCheck]:
    """Graphs with a Hamiltonian path: 2*floor(n/3) eigenvalues in [alpha, Delta], floor(n/3) above the S_3 threshold."""
    ids = ("C4.2-i", "C4.2-ii")
    reason = _hypothesis(g, alpha, alpha_range=HALF_TO_ONE)
    if reason is None:
        ham = report_of(g).has_hamiltonian_path
        if ham is None:
            reason = "Hamiltonian path status unknown(n too large)"
        elif not ham:
            reason = "graph has no Hamiltonian path"
    if reason:
        return _skip_all(ids, g, alpha, ">=", reason)
    s = spectrum_of(g, alpha, tol.eig)
    delta = g.max_degree
    thr = sp.hamiltonian_threshold(alpha)
    k = g.n // 3
    return (
        certify(ids[0], g, alpha, count(s, alpha, delta, True, True, tol.boundary), 2 * k, ">=",
                {"interval": _interval(alpha, delta)}),
        certify(ids[1], g, alpha, count(s, thr, delta, True, True, tol.boundary), k, ">=",
                {"interval": _interval(thr, delta), "threshold": thr}),
    )


def _domination(g: Graph) -> tuple[int, list[int]] | None:
    r = report_of(g)
    if r.domination is None:
        return None
    gamma, witness = domination_number(g)
    return gamma, sorted(witness)


def check_T41_domination(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> BoundCheck:
    """At most gamma eigenvalues in [0, alpha)."""
    tid = "T4.1"
    reason = _hypothesis(g, alpha, alpha_range=HALF_TO_ONE)
    dom = _domination(g) if reason is None else None
    if reason is None and dom is None:
        reason = "capacity: domination number is only computed for small graphs"
    if reason:
        return skip(tid, g, alpha, "<=", reason)
    gamma, dom_set = dom
    s = spectrum_of(g, alpha, tol.eig)
    lhs = count(s, 0.0, alpha, True, False, tol.boundary)
    witness: dict = {"gamma": gamma, "dominating_set": dom_set, "interval": _interval(0.0, alpha, True, False)}
    isolated = [v for v in range(g.n) if g.degrees[v] == 0]
    if isolated:
        rest = g.induced_subgraph([v for v in range(g.n) if g.degrees[v] > 0])
        m_rest = count(spectrum_of(rest, alpha, tol.eig), 0.0, alpha, True, False, tol.boundary)
        witness["isolated_decomposition"] = {
            "isolated": len(isolated),
            "count_without_isolated": m_rest,
            "holds": lhs == m_rest + len(isolated),
        }
    return certify(tid, g, alpha, lhs, gamma, "<=", witness, alpha < 1.0 and is_star(g))


def check_C43_domination_complement(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> BoundCheck:
    """At least n - gamma eigenvalues in [alpha, Delta]."""
    tid = "C4.3"
    reason = _hypothesis(g, alpha, alpha_range=HALF_TO_ONE)
    dom = _domination(g) if reason is None else None
    if reason is None and dom is None:
        reason = "capacity: domination number is only computed for small graphs"
    if reason:
        return skip(tid, g, alpha, ">=", reason)
    gamma, _ = dom
    s = spectrum_of(g, alpha, tol.eig)
    lhs = count(s, alpha, g.max_degree, True, True, tol.boundary)
    return certify(tid, g, alpha, lhs, g.n - gamma, ">=",
                   {"gamma": gamma, "interval": _interval(alpha, g.max_degree)})


def check_T42_edge_cover(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> BoundCheck:
    """At least beta eigenvalues in [alpha, Delta]; equality when nu = q."""
    tid = "T4.2"
    reason = _hypothesis(g, alpha, connected=True, min_order=2, alpha_range=HALF_TO_ONE)
    if reason:
        return skip(tid, g, alpha, ">=", reason)
    r = report_of(g)
    s = spectrum_of(g, alpha, tol.eig)
    lhs = count(s, alpha, g.max_degree, True, True, tol.boundary)
    witness = {"beta": r.edge_cover, "nu": r.matching, "q": r.q, "interval": _interval(alpha, g.max_degree)}
    return certify(tid, g, alpha, lhs, r.edge_cover, ">=", witness, alpha < 1.0 and r.matching == r.q)


def check_C44_sandwich(g: Graph, alpha: float, tol: Tolerances = DEFAULT_TOL) -> tuple[BoundCheck, BoundCheck]:
    """q <= m[0, alpha) <= nu."""
    ids = ("C4.4-lower", "C4.4-upper")
    reason = _hypothesis(g, alpha, connected=True, min_order=2, alpha_range=HALF_TO_ONE)
    if reason:
        return _skip_all(ids, g, alpha, ">=", reason)
    r = report_of(g)
    s = spectrum_of(g, alpha, tol.eig)
    lhs = count(s, 0.0, alpha, True, False, tol.boundary)
    witness = {"q": r.q, "nu": r.matching, "interval": _interval(0.0, alpha, True, False)}
    claimed = alpha < 1.0 and r.matching == r.q
    lower_reason = _hypothesis(g, alpha, min_order=3, alpha_below_one=True)
    if lower_reason:
        lower = skip(ids[0], g, alpha, ">=", lower_reason)
    else:
        lower = certify(ids[0], g, alpha, lhs, r.q, ">=", witness, claimed)
    upper = certify(ids[1], g, alpha, lhs, r.matching, "<=", witness, claimed)
    return lower, upper


def spanning_forest_edges(g: Graph) -> list[Edge]:
    """Breadth-first spanning forest, roots taken in vertex order."""
    seen = [False] * g.n
    out: list[Edge] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for y in sorted(g.adjacency[x]):
                    if not seen[y]:
                        seen[y] = True
                        out.append((min(x, y), max(x, y)))
                        nxt.append(y)
            frontier = nxt
    return out


def _components_of(g: Graph) -> list[Graph]:
    comps = sorted(connectivity(g)[1], key=min)
    return [g.induced_subgraph(sorted(c), f"{g.name}#{i}") for i, c in enumerate(comps)]


# Per-(graph, alpha) checkers used by the corpus runner, keyed by result.
CHECKERS: dict[str, Callable[[Graph, float, Tolerances], Sequence[BoundCheck] | BoundCheck]] = {
    "T2.2": check_T22_alpha_multiplicity,
    "T3.1": check_T31_pendant,
    "C3.1": lambda g, a, tol: check_C31_union(_components_of(g), a, tol, name=g.name),
    "C3.3": check_C33_quasipendant,
    "C3.4": check_C34_refined,
    "R3.1": check_R31_all_internal_quasipendant,
    "P4.1": lambda g, a, tol: check_P41_subgraph_monotonicity(g, spanning_forest_edges(g), a, a, tol),
    "C4.2": check_C42_hamiltonian,
    "T4.1": check_T41_domination,
    "C4.3": check_C43_domination_complement,
    "T4.2": check_T42_edge_cover,
    "C4.4": check_C44_sandwich,
}

# Checkers that do not take alpha.
STATIC_CHECKERS: dict[str, Callable[[Graph, Tolerances], Sequence[BoundCheck]]] = {
    "C3.2": check_C32_AQ_specializations,
}


def _as_tuple(result) -> tuple[BoundCheck, ...]:
    return (result,) if isinstance(result, BoundCheck) else tuple(result)


def check_item(item: CorpusItem, alpha_grid: Sequence[float], tol: Tolerances = DEFAULT_TOL) -> list[BoundCheck]:
    """All applicable certificates for one corpus graph over the alpha grid."""
    g = item.graph
    if not g.name:
        g = g.renamed(item.label())
    records: list[BoundCheck] = []
    if g.n == 0:
        return [skip(tid, g, None, "", "empty graph") for tid in sorted(CHECKERS.keys() | STATIC_CHECKERS.keys())]
    for checker in STATIC_CHECKERS.values():
        records.extend(_as_tuple(checker(g, tol)))
    for a in alpha_grid:
        for checker in CHECKERS.values():
            records.extend(_as_tuple(checker(g, a, tol)))
    if item.claims:
        records = [_apply_family_claim(r, item.claims) for r in records]
    records.sort(key=lambda r: (-1.0 if r.alpha is None else r.alpha, r.theorem_id))
    return records


def _apply_family_claim(r: BoundCheck, claims: frozenset[str]) -> BoundCheck:
    if r.skipped or r.theorem_id not in claims or r.alpha is None or r.alpha >= 1.0:
        return r
    return dataclasses.replace(r, witness={**r.witness, "equality_claimed": True})


def _check_item_task(args) -> list[BoundCheck]:
    return check_item(*args)


def tolerances_for(manifest: CorpusManifest, override: Tolerances | None = None) -> Tolerances:
    if override is not None:
        return override
    return Tolerances(**{k: manifest.tolerances[k] for k in ("boundary", "eig") if k in manifest.tolerances})


def run_corpus(manifest: CorpusManifest, jobs: int = 1, tol: Tolerances | None = None) -> list[BoundCheck]:
    """Every certificate for the manifest, ordered by (corpus item, alpha, theorem id).

    With ``jobs > 1`` items are distributed over worker processes; the output
    order does not depend on the job count.
    """
    tol = tolerances_for(manifest, tol)
    items = manifest.items()
    tasks = [(item, manifest.alpha_grid, tol) for item in items]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_check_item_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        chunks = [_check_item_task(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]


def summarize(records: Sequence[BoundCheck]) -> dict[str, int]:
    evaluated = [r for r in records if not r.skipped]
    return {
        "checked": len(evaluated),
        "held": sum(1 for r in evaluated if r.holds),
        "failed": sum(1 for r in evaluated if not r.holds),
        "tight": sum(1 for r in evaluated if r.tight),
        "skipped": len(records) - len(evaluated),
        "claimed_equality_missed": sum(1 for r in evaluated if r.equality_claimed and not r.tight),
    }
