from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, to_nx
from longcycle.errors import InvalidVertex, NoSuchEdge, SelfLoop
from longcycle.graph import (add_edge, complement, complete, components, delete_vertex,
                             disjoint_union, duplicate_vertex, empty, from_adjacency,
                             from_edge_list, induced_subgraph, is_bipartite, is_connected,
                             join, min_degree, relabel, remove_edge, subdivide_edge)


def test_basic_accessors():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4 and g.size == 3
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)


def test_rejects_bad_input():
    with pytest.raises(SelfLoop):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(InvalidVertex):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(NoSuchEdge):
        remove_edge(empty(3), 0, 1)


def test_graph_is_immutable_and_hashable():
    g = complete(4)
    with pytest.raises(AttributeError):
        g.n = 5
    assert hash(g) == hash(complete(4)) and g == complete(4)


def test_join_and_union():
    g = join(empty(2), empty(3))
    assert g.size == 6 and is_connected(g)
    u = disjoint_union(complete(3), complete(2))
    assert u.n == 5 and u.size == 4 and len(components(u)) == 2


def test_subdivide_and_duplicate():
    g = subdivide_edge(complete(3), 0, 1)
    assert g.n == 4 and g.size == 4 and not g.has_edge(0, 1)
    d = duplicate_vertex(from_edge_list(3, [(0, 1), (1, 2)]), 1)
    assert d.n == 4 and d.neighbors(3) == [0, 2]


def test_induced_and_delete():
    g = complete(5)
    assert induced_subgraph(g, [0, 2, 4]) == complete(3)
    assert delete_vertex(g, 0) == complete(4)


@given(graphs(max_n=8))
def test_complement_matches_networkx(g):
    assert nx.is_isomorphic(to_nx(complement(g)), nx.complement(to_nx(g)))
    assert complement(complement(g)) == g


@given(graphs(max_n=9))
def test_components_and_bipartite_match_networkx(g):
    h = to_nx(g)
    assert len(components(g)) == nx.number_connected_components(h)
    assert is_connected(g) == (g.n > 0 and nx.is_connected(h))
    assert is_bipartite(g) == nx.is_bipartite(h)


@given(graphs(min_n=1, max_n=8), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    h = relabel(g, perm)
    assert h.size == g.size and sorted(h.degrees()) == sorted(g.degrees())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


@given(graphs(min_n=2, max_n=8))
def test_add_remove_roundtrip(g):
    if g.size:
        u, v = next(iter(g.edges()))
        assert add_edge(remove_edge(g, u, v), u, v) == g
    assert from_adjacency(g.adj) == g
    assert min_degree(g) == min(g.degrees())
