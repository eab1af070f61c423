"""Named graph families that manifests and the CLI can refer to."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

from . import graph as gc
from .graph import Graph


def _named_graphs() -> dict[str, Callable[[], Graph]]:
    k1, p2 = gc.empty(1), gc.path(2)
    return {
        "c3_corona": lambda: gc.corona(gc.cycle(3), k1),
        "p3_gcorona": lambda: gc.generalized_corona(gc.path(3), [k1, gc.empty(2), gc.empty(3)]),
        "k4_gcorona": lambda: gc.generalized_corona(gc.complete(4), [k1, gc.empty(2), gc.empty(3), p2]),
        "c4_gcorona_2131": lambda: gc.generalized_corona(
            gc.cycle(4), [gc.empty(2), k1, gc.empty(3), k1]
        ),
        "paw": lambda: Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)], "paw"),
        "petersen": lambda: Graph(
            10,
            [(i, (i + 1) % 5) for i in range(5)]
            + [(i, i + 5) for i in range(5)]
            + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
            "Petersen",
        ),
    }


NAMED_GRAPHS = _named_graphs()

_CORONA_BASES: dict[str, Callable[[int], Graph]] = {
    "path": gc.path,
    "cycle": gc.cycle,
    "complete": gc.complete,
    "star": gc.star,
}


def _corona_k1(base: str, k: int) -> list[Graph]:
    if base not in _CORONA_BASES:
        raise ValueError(f"unknown corona base {base!r}; expected one of {sorted(_CORONA_BASES)}")
    return [gc.corona(_CORONA_BASES[base](k), gc.empty(1))]


def _named(name: str) -> list[Graph]:
    if name not in NAMED_GRAPHS:
        raise ValueError(f"unknown named graph {name!r}; expected one of {sorted(NAMED_GRAPHS)}")
    return [NAMED_GRAPHS[name]().renamed(name)]


@dataclass(frozen=True)
class Family:
    name: str
    params: dict[str, type]
    build: Callable[..., list[Graph]]
    defaults: dict[str, object] = field(default_factory=dict)
    # theorem ids whose equality is expected for every member
    claims: frozenset[str] = frozenset()


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in [
        Family("star", {"n": int}, lambda n: [gc.star(n)]),
        Family("path", {"n": int}, lambda n: [gc.path(n)]),
        Family("cycle", {"n": int}, lambda n: [gc.cycle(n)]),
        Family("complete", {"n": int}, lambda n: [gc.complete(n)]),
        Family("empty", {"n": int}, lambda n: [gc.empty(n)]),
        Family("complete_bipartite", {"p": int, "q": int}, lambda p, q: [gc.complete_bipartite(p, q)]),
        Family("corona_k1", {"base": str, "k": int}, _corona_k1),
        Family(
            "p_theta",
            {"n": int, "repeated": int},
            lambda n, repeated: gc.p_theta_family(n, allow_repeated_hosts=bool(repeated)),
            defaults={"repeated": 0},
            claims=frozenset({"C4.4-lower", "C4.4-upper", "T4.2"}),
        ),
        Family(
            "star_forest",
            {"n": int, "k": int},
            lambda n, k: [gc.disjoint_union([gc.star(n)] * k, name=f"{k}S{n}")],
        ),
        Family("named", {"name": str}, _named),
        Family(
            "random",
            {"n": int, "prob": float, "seed": int},
            lambda n, prob, seed: [gc.random_connected(n, prob, seed)],
        ),
    ]
}


@dataclass(frozen=True)
class CorpusItem:
    family: str
    params: tuple[tuple[str, object], ...]
    graph: Graph
    claims: frozenset[str] = frozenset()

    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({args})"


def build_family(name: str, params: dict[str, object]) -> list[CorpusItem]:
    fam = FAMILIES[name]
    kwargs = {**fam.defaults, **params}
    missing = [k for k in fam.params if k not in kwargs]
    if missing:
        raise ValueError(f"family {name!r} is missing parameters {missing}")
    graphs = fam.build(**{k: kwargs[k] for k in fam.params})
    base = tuple((k, kwargs[k]) for k in fam.params)
    items = []
    for i, g in enumerate(graphs):
        params_i = base + (("member", i),) if len(graphs) > 1 else base
        items.append(CorpusItem(name, params_i, g, fam.claims))
    return items
