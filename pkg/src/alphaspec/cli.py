"""Command-line interface: ``alphaspec {spectrum,invariants,verify,corpus,sweep}``.

Exit codes: 0 success, 1 a bound certificate failed, 2 bad input,
3 numeric failure, 4 a capacity cap left a field unknown under ``--strict``.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from . import spectra as sp
from . import theorems
from .corpus import FAMILIES, build_family
from .errors import AlphaSpecError, CapacityError, NumericInputError
from .formats import (
    CorpusManifest,
    FamilyEntry,
    dumps_canonical,
    edge_list_parse,
    graph6_decode,
    graph6_encode,
    manifest_load,
    parse_alpha_grid,
    report_write,
)
from .graph import Graph
from .invariants import invariant_report

EXIT_OK, EXIT_BOUND, EXIT_INPUT, EXIT_NUMERIC, EXIT_CAPACITY = 0, 1, 2, 3, 4


class InputError(AlphaSpecError, ValueError):
    """Bad command-line usage."""


def _parse_params(text: str | None) -> dict[str, str]:
    out: dict[str, str] = {}
    for tok in (text or "").replace(";", " ").split():
        key, eq, value = tok.partition("=")
        if not eq:
            raise InputError(f"--params expects key=value pairs, got {tok!r}")
        out[key] = value
    return out


def _family_entry(args) -> FamilyEntry:
    """Turn ``--family/--n/--params`` into a manifest entry (``--n`` may be a range ``a..b``)."""
    name = args.family
    if name not in FAMILIES:
        raise InputError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    fam = FAMILIES[name]
    raw = _parse_params(args.params)
    if args.n is not None:
        raw.setdefault("k" if "n" not in fam.params and "k" in fam.params else "n", args.n)
    if name == "random" and "seed" not in raw:
        raw["seed"] = str(args.seed)
    text = "family: " + " ".join([name] + [f"{k}={v}" for k, v in raw.items()])
    return manifest_load(text).entries[0]


def load_graph(args) -> Graph:
    sources = [x for x in (args.g6, args.file, args.family) if x is not None]
    if len(sources) != 1:
        raise InputError("give exactly one of --g6, --file or --family")
    if args.g6 is not None:
        return graph6_decode(args.g6, strict=True, name=args.g6)
    if args.file is not None:
        text = Path(args.file).read_text()
        body = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if body and body[0].split()[0] == "n":
            return edge_list_parse(text, name=Path(args.file).name)
        if len(body) != 1:
            raise InputError(f"{args.file}: expected one graph6 line or an edge list")
        return graph6_decode(body[0], strict=True, name=Path(args.file).name)
    graphs = [item.graph for p in _family_entry(args).expand() for item in build_family(args.family, p)]
    if len(graphs) != 1:
        raise InputError(f"family selection yields {len(graphs)} graphs; this command takes one")
    return graphs[0]


def _alpha_grid(args, default: str) -> list[float]:
    return parse_alpha_grid(args.alpha if args.alpha is not None else default)


def _single_alpha(args) -> float:
    if args.alpha is None:
        raise InputError("--alpha is required")
    try:
        return sp.check_alpha(float(args.alpha))
    except ValueError as exc:
        if isinstance(exc, AlphaSpecError):
            raise
        raise InputError(f"--alpha expects a number, got {args.alpha!r}") from None


def _tolerances(args, base: theorems.Tolerances | None = None) -> theorems.Tolerances:
    base = base or theorems.DEFAULT_TOL
    return theorems.Tolerances(
        args.boundary_tol if args.boundary_tol is not None else base.boundary,
        args.eig_tol if args.eig_tol is not None else base.eig,
    )


def load_manifest(spec: str) -> CorpusManifest:
    if spec == "canonical":
        text = resources.files("alphaspec").joinpath("data/canonical.manifest").read_text()
    else:
        text = Path(spec).read_text()
    return manifest_load(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _table(rows: list[list[object]]) -> str:
    cells = [[_fmt(x) for x in row] for row in rows]
    widths = [max(len(r[i]) for r in cells if i < len(r)) for i in range(max(map(len, cells)))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells)


def _fmt(x: object) -> str:
    if isinstance(x, float):
        return format(x, ".10g")
    if x is None:
        return "-"
    return str(x)


def _standard_counts(g: Graph, s: sp.Spectrum, alpha: float, tol: theorems.Tolerances) -> dict[str, int]:
    delta = g.max_degree
    b = tol.boundary
    lo = sp.psi(g.n, alpha) if g.n else alpha
    return {
        "[psi,alpha]": theorems.count(s, lo, alpha, True, True, b),
        "[alpha,Delta]": theorems.count(s, alpha, delta, True, True, b),
        "[0,alpha)": theorems.count(s, 0.0, alpha, True, False, b),
        "m(alpha)": sp.multiplicity_at(s, alpha, b),
    }


def cmd_spectrum(args) -> int:
    g = load_graph(args)
    alpha = _single_alpha(args)
    tol = _tolerances(args)
    s = sp.eig_sym(sp.build_a_alpha(g, alpha), tol.eig)
    payload = {
        "graph": g.name,
        "graph6": graph6_encode(g),
        "alpha": alpha,
        "eigenvalues": list(s.eigenvalues),
        "residual_bound": s.residual_bound,
        "psi": sp.psi(g.n, alpha) if g.n else None,
        "counts": _standard_counts(g, s, alpha, tol),
    }
    if args.format == "json":
        _emit(dumps_canonical(payload), args.out)
    else:
        rows = [["eigenvalue"]] + [[x] for x in s.eigenvalues]
        rows += [["residual_bound", s.residual_bound]] + [[k, v] for k, v in payload["counts"].items()]
        _emit(_table(rows), args.out)
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = load_graph(args)
    report = invariant_report(g)
    data = {"graph": g.name, "graph6": graph6_encode(g), **report.to_dict()}
    if args.format == "json":
        _emit(dumps_canonical(data), args.out)
    else:
        _emit(_table([[k, v] for k, v in sorted(data.items())]), args.out)
    if args.strict and report.has_unknown:
        print("error: a capacity cap left an invariant unknown", file=sys.stderr)
        return EXIT_CAPACITY
    return EXIT_OK


def _single_graph_records(g: Graph, grid: list[float], tol: theorems.Tolerances) -> list[theorems.BoundCheck]:
    from .corpus import CorpusItem

    return theorems.check_item(CorpusItem("input", (), g), grid, tol)


def cmd_verify(args) -> int:
    if args.manifest is not None:
        manifest = load_manifest(args.manifest)
        tol = _tolerances(args, theorems.tolerances_for(manifest))
        records = theorems.run_corpus(manifest, jobs=args.jobs, tol=tol)
        meta = {"manifest_sha256": manifest.digest, "alpha_grid": list(manifest.alpha_grid)}
    else:
        g = load_graph(args)
        tol = _tolerances(args)
        grid = _alpha_grid(args, "0:1:0.1")
        records = _single_graph_records(g, grid, tol)
        meta = {"graph6": graph6_encode(g), "alpha_grid": grid}
    summary = theorems.summarize(records)
    meta.update({"tool_version": __version__, "tolerances": tol.to_dict(), "summary": summary})
    if args.format == "json":
        _emit(report_write(records, meta), args.out)
    else:
        rows = [["theorem", "graph", "alpha", "lhs", "rel", "rhs", "holds", "tight", "skipped"]]
        for r in records:
            rows.append([r.theorem_id, r.graph_name, r.alpha, r.lhs, r.relation, r.rhs, r.holds, r.tight,
                         r.skipped_reason])
        _emit(_table(rows), args.out)
    print(
        "checked {checked} held {held} tight {tight} skipped {skipped} failed {failed}".format(**summary),
        file=sys.stderr,
    )
    return EXIT_BOUND if summary["failed"] else EXIT_OK


def cmd_corpus(args) -> int:
    if args.manifest is not None:
        items = load_manifest(args.manifest).items()
    elif args.family is not None:
        entry = _family_entry(args)
        items = [item for p in entry.expand() for item in build_family(entry.family, p)]
    else:
        raise InputError("corpus needs --manifest or --family")
    lines = "".join(graph6_encode(item.graph) + "\n" for item in items)
    _emit(lines, args.out)
    if args.out:
        sidecar = [
            {"index": i, "family": item.family, "params": dict(item.params), "name": item.graph.name,
             "n": item.graph.n, "m": item.graph.m}
            for i, item in enumerate(items)
        ]
        Path(args.out + ".json").write_text(dumps_canonical(sidecar))
    return EXIT_OK


def cmd_sweep(args) -> int:
    g = load_graph(args)
    grid = _alpha_grid(args, "0:1:0.1")
    tol = _tolerances(args)
    rows = []
    for a in grid:
        s = sp.eig_sym(sp.build_a_alpha(g, a), tol.eig)
        c = _standard_counts(g, s, a, tol)
        rows.append({"alpha": a, "eigenvalues": list(s.eigenvalues), "m[0,alpha)": c["[0,alpha)"],
                     "m[alpha,Delta]": c["[alpha,Delta]"], "m(alpha)": c["m(alpha)"]})
    if args.format == "json":
        _emit(dumps_canonical({"graph": g.name, "graph6": graph6_encode(g), "rows": rows}), args.out)
    else:
        header = ["alpha"] + [f"lambda_{i + 1}" for i in range(g.n)] + ["m[0,alpha)", "m[alpha,Delta]", "m(alpha)"]
        body = [[r["alpha"], *r["eigenvalues"], r["m[0,alpha)"], r["m[alpha,Delta]"], r["m(alpha)"]] for r in rows]
        _emit(_table([header] + body), args.out)
    return EXIT_OK


COMMANDS = {
    "spectrum": cmd_spectrum,
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "corpus": cmd_corpus,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alphaspec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("graph input")
    src.add_argument("--g6", help="inline graph6 string")
    src.add_argument("--file", help="file holding one graph6 line or an edge list")
    src.add_argument("--family", help=f"family constructor: {', '.join(sorted(FAMILIES))}")
    src.add_argument("--n", help="order for --family (a range a..b where several graphs are allowed)")
    src.add_argument("--params", help="extra family parameters, e.g. 'p=2 q=3'")
    common.add_argument("--alpha", help="alpha value, or grid 'a:b:step' / comma list")
    common.add_argument("--manifest", help="corpus manifest path, or 'canonical'")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0, help="seed for --family random")
    common.add_argument("--strict", action="store_true", help="exit 4 when a capacity cap leaves a field unknown")
    common.add_argument("--boundary-tol", type=float)
    common.add_argument("--eig-tol", type=float)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=fn.__doc__)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        for tol in (args.boundary_tol, args.eig_tol):
            if tol is not None and not tol > 0:
                raise InputError("tolerances must be positive")
        return COMMANDS[args.command](args)
    except NumericInputError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValueError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
