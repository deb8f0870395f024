from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from longcycle.enumeration import UniverseSpec, enumerate_graphs
from longcycle.errors import PatternTooLarge
from longcycle.families import complete_graph, cycle, path, remark4_family, theta
from longcycle.graph import Graph, complete, empty, from_edge_list, induced_subgraph, relabel
from longcycle.recognition import (PATTERNS, contains_induced, find_induced, is_claw_free,
                                   is_cycle_graph, is_induced_free, is_threshold,
                                   is_uniform_theta, line_graph, pattern_names,
                                   threshold_weights)
from longcycle.canon import is_isomorphic

STAR = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
K23 = from_edge_list(5, [(i, j) for i in range(2) for j in range(2, 5)])


def test_pattern_examples():
    assert contains_induced(path(5), "P4")
    assert not contains_induced(complete(6), "2K2")
    g = remark4_family(1, 3)
    assert not contains_induced(g, "P4") and not contains_induced(g, "C4")
    assert is_induced_free(cycle(5), ["C4", "2K2"]) and contains_induced(cycle(5), "P4")
    assert is_induced_free(cycle(5), [])


def test_witness_is_first_and_induces_pattern():
    g = path(6)
    w = find_induced(g, "P4")
    assert w == (0, 1, 2, 3)
    assert is_isomorphic(induced_subgraph(g, w), PATTERNS["P4"])


def test_pattern_too_large():
    with pytest.raises(PatternTooLarge):
        contains_induced(complete(8), complete(7))


@given(graphs(max_n=8))
def test_induced_search_matches_networkx(g):
    h = to_nx(g)
    for name in ("P4", "C4", "2K2", "K13"):
        matcher = nx.algorithms.isomorphism.GraphMatcher(h, to_nx(PATTERNS[name]))
        assert contains_induced(g, name) == matcher.subgraph_is_isomorphic()


def test_threshold_examples():
    assert is_threshold(complete(5)) and is_threshold(STAR) and is_threshold(empty(4))
    assert not is_threshold(path(4))


def test_threshold_agrees_with_forbidden_triple():
    for n in range(1, 9):
        for g in enumerate_graphs(UniverseSpec(n)):
            assert is_threshold(g) == is_induced_free(g, ["P4", "C4", "2K2"])


def _random_threshold(r: random.Random, n: int) -> Graph:
    adj = [0] * n
    for v in range(1, n):
        if r.random() < 0.5:
            for u in range(v):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    perm = list(range(n))
    r.shuffle(perm)
    return relabel(Graph(n, adj), perm)


def test_threshold_weights_realize_graph():
    r = random.Random(5)
    for _ in range(200):
        g = _random_threshold(r, r.randint(1, 16))
        f, t = threshold_weights(g)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert (f[u] + f[v] > t) == g.has_edge(u, v)
    assert threshold_weights(path(4)) is None


def test_claw_free():
    assert is_claw_free(line_graph(complete(4)))
    assert not is_claw_free(STAR)
    assert is_claw_free(cycle(6))


def test_cycle_and_theta_recognition():
    assert is_cycle_graph(cycle(7)) and not is_cycle_graph(path(7))
    assert is_uniform_theta(K23) == (True, 2, 3)
    assert is_uniform_theta(theta([4, 3, 3]))[0] is False
    assert is_uniform_theta(theta([3, 3, 3, 3])) == (True, 3, 4)
    assert is_uniform_theta(cycle(6))[0] is False


def test_pattern_names():
    assert pattern_names([PATTERNS["P4"], PATTERNS["K13"], complete_graph(3)]) == \
        ["P4", "K13", "graph6:Bw"]
