"""Text formats: graph6, edge lists, corpus manifests and deterministic JSON reports."""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from collections.abc import Iterable
from dataclasses import dataclass, field

from .corpus import FAMILIES, CorpusItem, build_family
from .errors import EdgeListError, Graph6Error, ManifestError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = (1 << 36) - 1


def _order_field(n: int) -> bytes:
    if n < 0 or n > GRAPH6_MAX_ORDER:
        raise Graph6Error(f"graph6 cannot encode order {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def graph6_encode(g: Graph) -> str:
    """Canonical graph6 text (no header, no newline)."""
    out = bytearray(_order_field(g.n))
    acc = nbits = 0
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, g.n):
        nbr = g.adjacency[j]
        for i in range(j):
            acc = (acc << 1) | (i in nbr)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(line: str, strict: bool = True, name: str = "") -> Graph:
    """Decode one graph6 line.

    With ``strict`` (the default) nonzero padding bits and surplus bytes are
    errors; otherwise they are ignored.
    """
    text = line.strip()
    start = 0
    if text.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    for k, ch in enumerate(text[start:]):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range [63, 126]", start + k)
    data = text[start:].encode("ascii")
    if not data:
        raise Graph6Error("empty graph6 string", start)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte order field", start + len(data))
        n, pos = 0, 8
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte order field", start + len(data))
        n, pos = 0, 4
        for b in data[1:4]:
            n = (n << 6) | (b - 63)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes for n={n}, found {len(body)}", start + len(data))
    if len(body) > nbytes and strict:
        raise Graph6Error("unexpected bytes after the adjacency data", start + pos + nbytes)
    pad = nbytes * 6 - nbits
    if pad and strict and (body[nbytes - 1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", start + pos + nbytes - 1)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges, name)


def graph6_read(text: str, strict: bool = True) -> list[Graph]:
    return [graph6_decode(line, strict) for line in text.splitlines() if line.strip()]


def edge_list_write(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def edge_list_parse(text: str, name: str = "") -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line (``#`` starts a comment)."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise EdgeListError("first line must be 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise EdgeListError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise EdgeListError("vertex count must be nonnegative", lineno)
            continue
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer endpoint in {line!r}", lineno) from None
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"endpoint out of range 0..{n - 1}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise EdgeListError("missing 'n <count>' header")
    return Graph(n, edges, name)


def parse_alpha_grid(spec: str) -> list[float]:
    """``"a:b:step"`` (inclusive within 1e-12) or a comma list, optionally bracketed."""
    text = spec.strip().strip("[]").strip()
    if not text:
        return []
    try:
        if ":" in text:
            parts = [float(x) for x in text.split(":")]
            if len(parts) != 3:
                raise ValueError
            lo, hi, step = parts
            if step <= 0:
                raise ManifestError(f"grid step must be positive in {spec!r}")
            count = math.floor((hi - lo) / step + 1e-12) + 1
            values = [round(lo + i * step, 12) for i in range(max(count, 0))]
        else:
            values = [float(x) for x in text.split(",")]
    except ValueError:
        raise ManifestError(f"malformed alpha grid {spec!r}") from None
    for a in values:
        if not (0.0 <= a <= 1.0) or math.isnan(a):
            raise ManifestError(f"alpha {a:g} outside [0, 1]")
    return values


@dataclass(frozen=True)
class FamilyEntry:
    family: str
    ranges: tuple[tuple[str, tuple], ...]

    def expand(self) -> list[dict[str, object]]:
        keys = [k for k, _ in self.ranges]
        return [dict(zip(keys, combo)) for combo in itertools.product(*(vals for _, vals in self.ranges))]


@dataclass(frozen=True)
class CorpusManifest:
    entries: tuple[FamilyEntry, ...] = ()
    alpha_grid: tuple[float, ...] = ()
    tolerances: dict[str, float] = field(default_factory=dict)
    source: str = ""

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.source.encode("utf-8")).hexdigest()

    def items(self) -> list[CorpusItem]:
        out: list[CorpusItem] = []
        for entry in self.entries:
            for params in entry.expand():
                out.extend(build_family(entry.family, params))
        return out

    def work_plan(self) -> list[tuple[CorpusItem, float]]:
        return [(item, a) for item in self.items() for a in self.alpha_grid]


TOLERANCE_KEYS = {"tolerance.boundary": "boundary", "tolerance.eig": "eig"}


def _parse_values(raw: str, kind: type, lineno: int) -> tuple:
    values: list[object] = []
    for tok in raw.split(","):
        tok = tok.strip()
        try:
            if kind is int and ".." in tok:
                lo, hi = (int(x) for x in tok.split(".."))
                values.extend(range(lo, hi + 1))
            elif kind is int:
                values.append(int(tok))
            elif kind is float:
                values.append(float(tok))
            else:
                if not tok:
                    raise ValueError
                values.append(tok)
        except ValueError:
            raise ManifestError(f"malformed {kind.__name__} value {tok!r}", lineno) from None
    return tuple(values)


def manifest_load(text: str) -> CorpusManifest:
    """Parse a line-oriented manifest.

    Lines are ``key: value``; ``#`` starts a comment. Recognized keys are
    ``alpha_grid``, ``tolerance.boundary``, ``tolerance.eig`` and the
    repeatable ``family: <name> key=values ...`` where values are comma lists
    whose integer items may be ranges ``a..b``.
    """
    entries: list[FamilyEntry] = []
    grid: list[float] = []
    tolerances: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ManifestError(f"expected 'key: value', got {line!r}", lineno)
        if key == "alpha_grid":
            try:
                grid = parse_alpha_grid(value)
            except ManifestError as exc:
                raise ManifestError(str(exc), lineno) from None
        elif key in TOLERANCE_KEYS:
            try:
                tol = float(value)
            except ValueError:
                raise ManifestError(f"malformed number {value!r}", lineno) from None
            if not tol > 0:
                raise ManifestError("tolerances must be positive", lineno)
            tolerances[TOLERANCE_KEYS[key]] = tol
        elif key == "family":
            tokens = value.split()
            if not tokens:
                raise ManifestError("family line needs a family name", lineno)
            name = tokens[0]
            if name not in FAMILIES:
                raise ManifestError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}", lineno)
            fam = FAMILIES[name]
            given: dict[str, tuple] = {}
            for tok in tokens[1:]:
                pname, eq, pval = tok.partition("=")
                if not eq or pname not in fam.params:
                    raise ManifestError(f"family {name!r} has no parameter {pname!r}", lineno)
                given[pname] = _parse_values(pval, fam.params[pname], lineno)
            ranges = []
            for pname in fam.params:
                if pname in given:
                    ranges.append((pname, given[pname]))
                elif pname in fam.defaults:
                    ranges.append((pname, (fam.defaults[pname],)))
                else:
                    raise ManifestError(f"family {name!r} needs parameter {pname!r}", lineno)
            entries.append(FamilyEntry(name, tuple(ranges)))
        else:
            raise ManifestError(f"unknown key {key!r}", lineno)
    return CorpusManifest(tuple(entries), tuple(grid), tolerances, text)


def _dump(obj, indent: int, level: int) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if math.isfinite(obj):
            return format(obj, ".17g")
        return json.dumps(str(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=True)
    pad = "\n" + " " * (indent * (level + 1))
    close = "\n" + " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",".join(
            f"{pad}{json.dumps(str(k))}: {_dump(obj[k], indent, level + 1)}" for k in sorted(obj, key=str)
        )
        return "{" + body + close + "}"
    if isinstance(obj, (list, tuple, frozenset, set)):
        seq = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        if not seq:
            return "[]"
        return "[" + ",".join(f"{pad}{_dump(x, indent, level + 1)}" for x in seq) + close + "]"
    if hasattr(obj, "to_dict"):
        return _dump(obj.to_dict(), indent, level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_canonical(obj, indent: int = 2) -> str:
    """JSON with sorted keys and floats printed to 17 significant digits."""
    return _dump(obj, indent, 0) + "\n"


def report_write(records: Iterable, meta: dict) -> str:
    return dumps_canonical({"meta": meta, "records": list(records)})
