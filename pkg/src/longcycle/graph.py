"""Immutable simple graphs stored as bitset adjacency rows.

Vertex ``v`` of a graph of order ``n`` is the integer ``v`` in ``range(n)``;
``adj[v]`` is a Python ``int`` whose bit ``u`` is set iff ``uv`` is an edge.
All combinators are pure and label deterministically: the left operand keeps
its labels and new vertices are appended.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import InvalidVertex, NoSuchEdge, SelfLoop

MAX_ORDER = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple graph; hashable and compared by labeled adjacency.

    Use :func:`is_isomorphic` for equality up to isomorphism.
    """

    __slots__ = ("n", "adj", "_cache")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0 or n > MAX_ORDER:
            raise InvalidVertex(f"order {n} outside 0..{MAX_ORDER}")
        if len(adj) != n:
            raise ValueError("need exactly one adjacency row per vertex")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def __len__(self):
        return self.n

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} not in 0..{self.n - 1}")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InvalidVertex(f"negative order {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) leaves 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def from_adjacency(rows: Sequence[int]) -> Graph:
    """Build from bitset rows, validating symmetry and irreflexivity."""
    n = len(rows)
    full = (1 << n) - 1
    for v, row in enumerate(rows):
        if row & ~full:
            raise InvalidVertex(f"row {v} has bits beyond vertex {n - 1}")
        if row >> v & 1:
            raise SelfLoop(f"self-loop at {v}")
        for u in iter_bits(row):
            if not rows[u] >> v & 1:
                raise ValueError(f"asymmetric adjacency between {v} and {u}")
    return Graph(n, rows)


def empty(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def join(g: Graph, h: Graph) -> Graph:
    a, b = g.n, h.n
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    adj = [row | right for row in g.adj] + [(row << a) | left for row in h.adj]
    return Graph(a + b, adj)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    a = g.n
    return Graph(a + h.n, list(g.adj) + [row << a for row in h.adj])


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = empty(0)
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Append a false twin of ``v``: same neighborhood, not adjacent to ``v``."""
    g._check(v)
    new = g.n
    nbrs = g.adj[v]
    adj = [row | (1 << new) if nbrs >> u & 1 else row for u, row in enumerate(g.adj)]
    adj.append(nbrs)
    return Graph(g.n + 1, adj)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    g._check(u)
    g._check(v)
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"({u}, {v}) is not an edge")
    w = g.n
    adj = list(g.adj)
    adj[u] = (adj[u] & ~(1 << v)) | (1 << w)
    adj[v] = (adj[v] & ~(1 << u)) | (1 << w)
    adj.append((1 << u) | (1 << v))
    return Graph(g.n + 1, adj)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check(u)
    g._check(v)
    if u == v:
        raise SelfLoop(f"self-loop at {u}")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, adj)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise NoSuchEdge(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabeled by increasing original label."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check(v)
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(g.adj[v]):
            i = pos.get(u)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    return Graph(len(keep), adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check(v)
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        r = 0
        for u in iter_bits(row):
            r |= 1 << perm[u]
        adj[perm[v]] = r
    return Graph(g.n, adj)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


# -- elementary predicates ---------------------------------------------------

def min_degree(g: Graph) -> int:
    """delta(G); the null graph reports 0."""
    return min(g.degrees(), default=0)


def reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Mask of vertices reachable from ``start`` inside ``allowed`` (start included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by least vertex."""
    left = g.vertex_mask
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = reach(g.adj, v, left)
        out.append(comp)
        left &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    """True for every graph with exactly one component (so False for K_0)."""
    return g.n > 0 and reach(g.adj, 0, g.vertex_mask) == g.vertex_mask


def two_coloring(g: Graph) -> tuple[bool, list[int]]:
    """Return ``(True, colors)`` with a proper 2-coloring, or ``(False, cycle)``.

    In the second case ``cycle`` lists the vertices of an odd cycle in order.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, _odd_cycle(u, w, parent, depth)
    return True, color


def _odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> list[int]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends and right ends at the common ancestor
    return left + right[-2::-1]


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g)[0]
