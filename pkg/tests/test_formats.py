from __future__ import annotations

import json
import random

import networkx as nx
import pytest
from hypothesis import given

from alphaspec import graph as gc
from alphaspec.errors import EdgeListError, Graph6Error, ManifestError
from alphaspec.formats import (
    dumps_canonical,
    edge_list_parse,
    edge_list_write,
    graph6_decode,
    graph6_encode,
    graph6_read,
    manifest_load,
    parse_alpha_grid,
    report_write,
)
from alphaspec.graph import Graph
from conftest import graphs, random_graph


def _nx_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_graph6_k2():
    assert graph6_decode("A_") == gc.complete(2)
    assert graph6_encode(gc.complete(2)) == "A_"


def test_graph6_empty():
    assert graph6_decode("?") == Graph(0)
    assert graph6_encode(Graph(0)) == "?"


def test_graph6_hand_decoded_five_vertices():
    # "D?{": n=5, bytes 0 and 60 -> bits 000000 111100; bit order x01 x02 x12 x03 x13 x23 x04 x14 x24 x34
    g = graph6_decode("D?{")
    assert g.n == 5
    assert g.edges == ((0, 4), (1, 4), (2, 4), (3, 4))
    h = nx.from_graph6_bytes(b"D?{")
    assert sorted(tuple(sorted(e)) for e in h.edges) == list(g.edges)


def test_graph6_header_is_accepted():
    assert graph6_decode(">>graph6<<A_") == gc.complete(2)


@pytest.mark.parametrize(
    "text, offset",
    [("A\x7f", 1), ("A ", 1), ("Aé", 1), ("C", 1), ("", 0)],
)
def test_graph6_malformed(text, offset):
    with pytest.raises(Graph6Error) as info:
        graph6_decode(text)
    assert info.value.offset == offset


def test_graph6_padding_is_strict_by_default():
    # n=2 has one data bit; 'A`' sets a padding bit
    with pytest.raises(Graph6Error):
        graph6_decode("A`")
    assert graph6_decode("A`", strict=False) == gc.complete(2)


def test_graph6_surplus_bytes():
    with pytest.raises(Graph6Error):
        graph6_decode("A__")
    assert graph6_decode("A__", strict=False) == gc.complete(2)


def test_graph6_truncated_order_field():
    with pytest.raises(Graph6Error):
        graph6_decode("~??")
    with pytest.raises(Graph6Error):
        graph6_decode("~~????")


@pytest.mark.parametrize("n", [62, 63, 64, 70])
def test_graph6_multibyte_order_matches_networkx(n):
    g = random_graph(random.Random(n), n, 0.1)
    text = graph6_encode(g)
    assert text.startswith("~") == (n >= 63)
    assert text == _nx_graph6(g)
    assert graph6_decode(text) == g


def test_graph6_eight_byte_order_field():
    # n = 258048 needs the 8-byte form; only the header is exercised
    from alphaspec.formats import _order_field

    field = _order_field(258048)
    assert field[:2] == b"~~" and len(field) == 8
    assert _order_field(258047)[:1] == b"~" and len(_order_field(258047)) == 4


@given(graphs(max_n=20))
def test_graph6_matches_networkx(g):
    assert graph6_encode(g) == _nx_graph6(g)
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_read_multiple_lines():
    assert graph6_read("A_\n\n?\n") == [gc.complete(2), Graph(0)]


def test_edge_list_parse():
    assert edge_list_parse("n 3\n0 1\n1 2") == gc.path(3)
    assert edge_list_parse("# comment\nn 2\n0 1  # edge\n") == gc.complete(2)


@pytest.mark.parametrize(
    "text, line",
    [("n 2\n0 0", 2), ("n 2\n0 2", 2), ("n 3\n0 1\n1 0", 3), ("3\n", 1), ("n 2\n0", 2), ("n x", 1)],
)
def test_edge_list_errors(text, line):
    with pytest.raises(EdgeListError) as info:
        edge_list_parse(text)
    assert info.value.line == line


@given(graphs(max_n=10))
def test_edge_list_round_trip(g):
    assert edge_list_parse(edge_list_write(g)) == g


def test_parse_alpha_grid():
    assert parse_alpha_grid("0:1:0.1") == [round(0.1 * i, 12) for i in range(11)]
    assert parse_alpha_grid("0:1:0.25") == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert parse_alpha_grid("[0, 0.5, 1]") == [0.0, 0.5, 1.0]
    assert parse_alpha_grid("0.3") == [0.3]
    for bad in ("1.5", "0:2:0.5", "a,b", "0:1", "0:1:0"):
        with pytest.raises(ManifestError):
            parse_alpha_grid(bad)


def test_manifest_work_plan():
    m = manifest_load("family: star n=3..10\nalpha_grid: [0, 0.5, 1]\n")
    assert len(m.items()) == 8
    assert len(m.work_plan()) == 24
    assert m.alpha_grid == (0.0, 0.5, 1.0)


def test_manifest_empty_is_valid():
    m = manifest_load("# nothing here\n")
    assert m.items() == [] and m.work_plan() == []


@pytest.mark.parametrize(
    "text, line",
    [
        ("alpha_grid: 0, 1.5", 1),
        ("\nfamily: hexagon n=3", 2),
        ("family: star m=3", 1),
        ("family: star n=x", 1),
        ("tolerance.eig: abc", 1),
        ("colour: red", 1),
        ("family: complete_bipartite p=1", 1),
    ],
)
def test_manifest_errors(text, line):
    with pytest.raises(ManifestError) as info:
        manifest_load(text)
    assert info.value.line == line


def test_manifest_tolerances_and_digest():
    text = "tolerance.boundary: 1e-9\ntolerance.eig: 1e-13\n"
    m = manifest_load(text)
    assert m.tolerances == {"boundary": 1e-9, "eig": 1e-13}
    assert m.digest == manifest_load(text).digest != manifest_load("").digest


def test_dumps_canonical_is_sorted_and_full_precision():
    text = dumps_canonical({"b": 0.1 + 0.2, "a": [1, None, True], "c": float("nan")})
    assert text.index('"a"') < text.index('"b"') < text.index('"c"')
    assert "0.30000000000000004" in text
    assert json.loads(text)["c"] == "nan"


def test_report_write_round_trips_through_json():
    text = report_write([{"x": 1.5}], {"tool_version": "t"})
    assert json.loads(text) == {"meta": {"tool_version": "t"}, "records": [{"x": 1.5}]}
    assert text == report_write([{"x": 1.5}], {"tool_version": "t"})
