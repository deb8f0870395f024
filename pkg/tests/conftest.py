from __future__ import annotations

import random
import sys
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from longcycle.graph import Graph, from_edge_list  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, chosen) if keep]
    if connected:
        edges += [(i, i + 1) for i in range(n - 1)]
    return from_edge_list(n, edges)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                              if rng.random() < p])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


# one line per acceptance criterion, repeated in the terminal summary
CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    def record(number: int, ok: bool, note: str) -> bool:
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {note}"
        CRITERIA[number] = line
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[number])
