"""Structural predicates: induced patterns, threshold graphs, thetas."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .canon import canonical_form
from .errors import PatternTooLarge
from .graph import Graph, from_edge_list, induced_subgraph, is_connected, iter_bits

MAX_PATTERN = 6

P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
C4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
TWO_K2 = from_edge_list(4, [(0, 1), (2, 3)])
CLAW = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])

PATTERNS = {"P4": P4, "C4": C4, "2K2": TWO_K2, "K13": CLAW, "claw": CLAW}


def pattern(name_or_graph: str | Graph) -> Graph:
    if isinstance(name_or_graph, Graph):
        if name_or_graph.n > MAX_PATTERN:
            raise PatternTooLarge(f"pattern order {name_or_graph.n} exceeds {MAX_PATTERN}")
        return name_or_graph
    try:
        return PATTERNS[name_or_graph]
    except KeyError:
        raise ValueError(f"unknown pattern {name_or_graph!r}; known: {sorted(PATTERNS)}") from None


def find_induced(g: Graph, h: Graph | str, containing: int | None = None) -> tuple[int, ...] | None:
    """First vertex subset (lexicographic order) inducing a copy of ``h``.

    With ``containing`` set, only subsets holding that vertex are tried.
    """
    h = pattern(h)
    k = h.n
    if k > g.n:
        return None
    if k == 0:
        return ()
    hdeg = sorted(h.degrees())
    hedges = h.size
    hcanon = canonical_form(h).canon if k > 4 else None
    adj = g.adj
    if containing is None:
        pools: Iterable[tuple[int, ...]] = combinations(range(g.n), k)
    else:
        others = [v for v in range(g.n) if v != containing]
        pools = (tuple(sorted(c + (containing,))) for c in combinations(others, k - 1))
    for sub in pools:
        m = 0
        for v in sub:
            m |= 1 << v
        degs = sorted((adj[v] & m).bit_count() for v in sub)
        if sum(degs) != 2 * hedges or degs != hdeg:
            continue
        # graphs on at most four vertices are determined by their degree sequence
        if hcanon is None or canonical_form(induced_subgraph(g, sub)).canon == hcanon:
            return sub
    return None


def contains_induced(g: Graph, h: Graph | str) -> bool:
    return find_induced(g, h) is not None


def is_induced_free(g: Graph, patterns: Iterable[Graph | str]) -> bool:
    return all(find_induced(g, p) is None for p in patterns)


def is_claw_free(g: Graph) -> bool:
    return find_induced(g, CLAW) is None


# -- threshold graphs --------------------------------------------------------

def threshold_elimination(g: Graph) -> list[tuple[int, str]] | None:
    """Remove isolated or dominating vertices until nothing is left.

    Returns the removal order as ``(vertex, "isolated" | "dominating")`` pairs,
    or None when the process gets stuck (the graph is not threshold).  The
    lowest-labeled removable vertex goes first.
    """
    alive = g.vertex_mask
    order = []
    while alive:
        for v in iter_bits(alive):
            nb = g.adj[v] & alive
            if not nb:
                order.append((v, "isolated"))
                break
            if nb == alive & ~(1 << v):
                order.append((v, "dominating"))
                break
        else:
            return None
        alive &= ~(1 << v)
    return order


def is_threshold(g: Graph) -> bool:
    return threshold_elimination(g) is not None


def threshold_weights(g: Graph) -> tuple[dict[int, int], int] | None:
    """Weights ``f`` and threshold ``t`` with ``uv`` an edge iff ``f(u) + f(v) > t``.

    Built from the elimination order read backwards: the ``j``-th vertex added
    gets ``n + j`` if it dominates everything before it, ``n - j`` otherwise.
    """
    order = threshold_elimination(g)
    if order is None:
        return None
    n = g.n
    f = {}
    for j, (v, kind) in enumerate(reversed(order), start=1):
        f[v] = n + j if kind == "dominating" and j > 1 else n - j
    return f, 2 * n


# -- cycles and theta graphs -------------------------------------------------

def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_uniform_theta(g: Graph) -> tuple[bool, int, int]:
    """``(True, a, m)`` iff ``g`` is theta(a^m) with ``m >= 3`` branches."""
    degs = g.degrees()
    hubs = [v for v, d in enumerate(degs) if d != 2]
    if len(hubs) != 2 or not is_connected(g):
        return False, 0, 0
    x, y = hubs
    m = degs[x]
    if m < 3 or degs[y] != m:
        return False, 0, 0
    lengths = []
    for start in iter_bits(g.adj[x]):
        prev, cur, length = x, start, 1
        while cur != y:
            if cur == x or degs[cur] != 2:
                return False, 0, 0
            nxt = g.adj[cur] & ~(1 << prev)
            prev, cur = cur, nxt.bit_length() - 1
            length += 1
        lengths.append(length)
    a = lengths[0]
    if any(l != a for l in lengths) or g.n != 2 + m * (a - 1):
        return False, 0, 0
    return True, a, m


def line_graph(g: Graph) -> Graph:
    edges = list(g.edges())
    pairs = [(i, j) for i, j in combinations(range(len(edges)), 2)
             if set(edges[i]) & set(edges[j])]
    return from_edge_list(len(edges), pairs)


def pattern_names(patterns: Sequence[Graph]) -> list[str]:
    rev = {canonical_form(p).canon: name for name, p in PATTERNS.items() if name != "claw"}
    return [rev.get(canonical_form(p).canon, f"graph6:{_g6(p)}") for p in patterns]


def _g6(p: Graph) -> str:
    from .formats import graph6_encode
    return graph6_encode(p)
