from __future__ import annotations

import networkx as nx
import pytest

from longcycle.canon import canonical_form
from longcycle.enumeration import UniverseSpec, count, enumerate_graphs, shard, universe
from longcycle.errors import InvalidParameter, UniverseTooLarge
from longcycle.formats import graph6_encode
from oracles import CONNECTED_COUNTS, GRAPH_COUNTS, labeled_class_count


def _nx(adj):
    h = nx.Graph()
    n = len(adj)
    h.add_nodes_from(range(n))
    h.add_edges_from((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1)
    return h


def _induced_free(names):
    pats = {"P4": nx.path_graph(4), "C4": nx.cycle_graph(4),
            "2K2": nx.Graph([(0, 1), (2, 3)])}

    def keep(adj):
        h = _nx(adj)
        return not any(nx.algorithms.isomorphism.GraphMatcher(h, pats[p]).subgraph_is_isomorphic()
                       for p in names)
    return keep


FILTERS = {
    "connected": (dict(connected=True), lambda a: nx.is_connected(_nx(a))),
    "2-connected": (dict(min_connectivity=2),
                    lambda a: len(a) > 2 and nx.node_connectivity(_nx(a)) >= 2),
    "bipartite": (dict(bipartite=True), lambda a: nx.is_bipartite(_nx(a))),
    "girth4": (dict(min_girth=4), lambda a: nx.girth(_nx(a)) >= 4),
    "girth5": (dict(min_girth=5), lambda a: nx.girth(_nx(a)) >= 5),
    "mindeg2": (dict(min_degree=2), lambda a: min(x.bit_count() for x in a) >= 2),
    "max_edges5": (dict(max_edges=5), lambda a: sum(x.bit_count() for x in a) // 2 <= 5),
    "p4_free": (dict(induced_free=("P4",)), _induced_free(["P4"])),
    "p4_2k2_free": (dict(induced_free=("P4", "2K2")), _induced_free(["P4", "2K2"])),
    "bip_connected": (dict(bipartite=True, connected=True),
                      lambda a: nx.is_bipartite(_nx(a)) and nx.is_connected(_nx(a))),
}


@pytest.mark.parametrize("n", range(0, 8))
def test_unfiltered_counts(n):
    assert count(UniverseSpec(n)) == GRAPH_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_match_labeled_dedup(n):
    assert count(UniverseSpec(n)) == labeled_class_count(n)


@pytest.mark.parametrize("name", sorted(FILTERS))
@pytest.mark.parametrize("n", range(2, 7))
def test_filtered_counts_match_labeled_dedup(name, n):
    kw, keep = FILTERS[name]
    assert count(UniverseSpec(n, **kw)) == labeled_class_count(n, keep)


def test_small_known_filtered_counts():
    assert count(UniverseSpec(4, connected=True)) == 6
    assert count(UniverseSpec(3, min_girth=4)) == 3
    assert [count(UniverseSpec(n, connected=True)) for n in range(1, 8)] == CONNECTED_COUNTS[1:8]


def test_classes_are_pairwise_nonisomorphic_and_deterministic():
    gs = list(enumerate_graphs(UniverseSpec(7)))
    assert len({canonical_form(g).canon for g in gs}) == len(gs)
    again = [graph6_encode(g) for g in enumerate_graphs(UniverseSpec(7))]
    assert again == [graph6_encode(g) for g in gs]


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_shards_partition_the_universe(m):
    spec = UniverseSpec(7, connected=True)
    full = sorted(graph6_encode(g) for g in enumerate_graphs(spec))
    parts = [graph6_encode(g) for i in range(m) for g in shard(spec, i, m)]
    assert sorted(parts) == full
    assert sorted(graph6_encode(g) for i in range(m) for g in universe(spec, i, m)) == full


def test_feasibility_guard():
    with pytest.raises(UniverseTooLarge):
        list(enumerate_graphs(UniverseSpec(12)))
    with pytest.raises(UniverseTooLarge):
        count(UniverseSpec(14, min_girth=6))
    assert next(enumerate_graphs(UniverseSpec(12, min_girth=6))).size == 0
    with pytest.raises(InvalidParameter):
        list(shard(UniverseSpec(5), 3, 2))
    with pytest.raises(InvalidParameter):
        UniverseSpec(-1)


def test_describe():
    spec = UniverseSpec(9, min_connectivity=2, bipartite=True, min_girth=3)
    assert spec.describe() == {"n": 9, "min_connectivity": 2, "bipartite": True}
