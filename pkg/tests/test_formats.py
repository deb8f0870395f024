from __future__ import annotations

import io

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from longcycle.errors import FormatError
from longcycle.families import complete_graph, cycle
from longcycle.formats import (edge_list_decode, edge_list_encode, graph6_decode,
                               graph6_encode, read_graph6_lines)
from longcycle.graph import empty, from_edge_list
from oracles import graph6_reference


def test_known_strings():
    assert graph6_encode(empty(0)) == "?"
    assert graph6_encode(complete_graph(3)) == "Bw"
    assert graph6_encode(complete_graph(4)) == "C~"
    assert graph6_encode(cycle(5)) == "Dhc"


@given(graphs(max_n=12))
def test_graph6_roundtrip_and_reference(g):
    s = graph6_encode(g)
    assert graph6_decode(s) == g
    assert s == graph6_reference(g.n, g.adj)
    assert s == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_large_order_prefix():
    g = from_edge_list(64, [(0, 63), (5, 6)])
    s = graph6_encode(g)
    assert s[0] == "~" and graph6_decode(s) == g
    assert s == graph6_reference(64, g.adj)


def test_header_and_newline_accepted():
    assert graph6_decode(">>graph6<<C~\n") == complete_graph(4)


@pytest.mark.parametrize("text, offset", [("C\x20~", 1), ("", 0), ("C", 1), ("C~~", 2)])
def test_malformed_graph6_reports_offset(text, offset):
    with pytest.raises(FormatError) as err:
        graph6_decode(text)
    assert err.value.offset == offset


def test_read_lines_stops_at_blank_and_reports_offset():
    gs = list(read_graph6_lines(io.StringIO("C~\nDhc\n\nBw\n")))
    assert gs == [complete_graph(4), cycle(5)]
    with pytest.raises(FormatError) as err:
        list(read_graph6_lines(["C~\n", "D!c\n"]))
    assert err.value.offset == 4


@given(graphs(max_n=9))
def test_edge_list_roundtrip(g):
    assert edge_list_decode(edge_list_encode(g)) == g


def test_edge_list_errors():
    with pytest.raises(FormatError):
        edge_list_decode("3 2\n0 1\n")
    with pytest.raises(FormatError):
        edge_list_decode("3 1\n0 x\n")
