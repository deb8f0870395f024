"""Exact invariants: connectivity, girth, circumference, detour order, dc and cc.

Longest paths and cycles come from the compiled branch-and-bound kernels in
:mod:`longcycle._kernels`.  Results are cached on the graph object, so
repeated queries on the same :class:`~longcycle.graph.Graph` are free.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import InvalidVertex, NotACummerbund, SearchTimeout
from .graph import Graph, components, is_bipartite, iter_bits, mask_of, min_degree

INFINITY = math.inf


# -- witnesses ---------------------------------------------------------------

@dataclass(frozen=True)
class PathWitness:
    """A path given by its vertex sequence, stored with the smaller end first."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        v = tuple(int(x) for x in self.vertices)
        if len(v) > 1 and v[-1] < v[0]:
            v = v[::-1]
        object.__setattr__(self, "vertices", v)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def vertex_mask(self) -> int:
        return mask_of(self.vertices)

    def is_valid_in(self, g: Graph) -> bool:
        v = self.vertices
        return (len(set(v)) == len(v) and all(0 <= x < g.n for x in v)
                and all(g.has_edge(a, b) for a, b in zip(v, v[1:])))


@dataclass(frozen=True)
class CycleWitness:
    """A cycle stored in its lexicographically least rotation/reflection.

    Two witnesses compare equal iff they describe the same cycle subgraph.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        v = [int(x) for x in self.vertices]
        if len(v) < 3:
            raise ValueError("a cycle needs at least three vertices")
        i = v.index(min(v))
        fwd = v[i:] + v[:i]
        back = [fwd[0]] + fwd[:0:-1]
        object.__setattr__(self, "vertices", tuple(min(fwd, back)))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_mask(self) -> int:
        return mask_of(self.vertices)

    def distance(self, x: int, y: int) -> int:
        """Distance between ``x`` and ``y`` along the cycle (shorter arc)."""
        i, j = self.vertices.index(x), self.vertices.index(y)
        d = abs(i - j)
        return min(d, self.length - d)

    def is_valid_in(self, g: Graph) -> bool:
        v = self.vertices
        return (len(set(v)) == len(v) and all(0 <= x < g.n for x in v)
                and all(g.has_edge(v[i - 1], v[i]) for i in range(len(v))))


@dataclass(frozen=True)
class InvariantProfile:
    order: int
    size: int
    kappa: int
    girth: float
    circumference: int
    detour_order: int
    dc: int
    cc: int
    detour_covered: bool
    cummerbund_covered: bool
    bipartite: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["girth"] == INFINITY:
            d["girth"] = None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantProfile":
        d = dict(d)
        d["girth"] = INFINITY if d["girth"] is None else d["girth"]
        return cls(**d)


# -- kernel plumbing ---------------------------------------------------------

def _np_adj(g: Graph) -> np.ndarray:
    arr = g._cache.get("np")
    if arr is None:
        arr = np.array(g.adj, dtype=np.uint64) if g.n else np.zeros(1, np.uint64)
        g._cache["np"] = arr
    return arr


def _memo(n: int) -> np.ndarray:
    if n <= K.MEMO_MAX:
        return np.zeros(max(1, (n << n) >> 3), dtype=np.uint8)
    return np.zeros(1, dtype=np.uint8)


_NO_STORE = np.zeros((0, 1), dtype=np.int64)


class _Budget:
    """Shared node-expansion allowance across several kernel calls."""

    def __init__(self, total: int | None):
        self.total = total or 0
        self.left = self.total

    def arg(self) -> int:
        return self.left if self.total else 0

    def spend(self, value: int, nodes: int) -> int:
        if value == K.TIMEOUT:
            raise SearchTimeout(self.total)
        if self.total:
            self.left -= nodes
            if self.left <= 0:
                raise SearchTimeout(self.total)
        return value


def _popcount(m: int) -> int:
    return m.bit_count()


# -- structure ---------------------------------------------------------------

def blocks(g: Graph) -> list[int]:
    """Vertex masks of the blocks (maximal 2-connected subgraphs and bridges).

    Isolated vertices are not blocks.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[int] = []
    timer = 0
    for s in range(n):
        if disc[s] >= 0 or not g.adj[s]:
            continue
        disc[s] = low[s] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(s, -1, iter_bits(g.adj[s]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter_bits(g.adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    m = 0
                    while True:
                        a, b = edge_stack.pop()
                        m |= (1 << a) | (1 << b)
                        if (a, b) == (p, u):
                            break
                    out.append(m)
    return out


def is_biconnected(g: Graph) -> bool:
    """2-connected: order at least 3, connected and without cut vertices."""
    if g.n < 3:
        return False
    b = blocks(g)
    return len(b) == 1 and b[0] == g.vertex_mask


def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Internally disjoint s-t paths (s, t nonadjacent), stopping at ``cap``.

    Unit-capacity augmenting paths on the split graph: vertex v becomes
    v_in = 2v and v_out = 2v + 1 joined by one arc of capacity 1.
    """
    flow: dict[tuple[int, int], int] = {}

    def capacity(a: int, b: int) -> int:
        if a // 2 == b // 2:
            return 1 if b == a + 1 and a % 2 == 0 else 0
        return 1 if a % 2 == 1 and b % 2 == 0 and g.has_edge(a // 2, b // 2) else 0

    source, sink = 2 * s + 1, 2 * t
    total = 0
    while total < cap:
        prev = {source: -1}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            v = a // 2
            if a % 2 == 0:
                nbrs = [a + 1] + [2 * w + 1 for w in iter_bits(g.adj[v])]
            else:
                nbrs = [a - 1] + [2 * w for w in iter_bits(g.adj[v])]
            for b in nbrs:
                if b not in prev and (capacity(a, b) - flow.get((a, b), 0) > 0
                                      or flow.get((b, a), 0) > 0):
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] != -1:
            a = prev[b]
            if flow.get((b, a), 0) > 0:
                flow[(b, a)] -= 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        total += 1
    return total


def connectivity(g: Graph) -> int:
    """Vertex connectivity; 0 for disconnected graphs and K_1, n-1 for K_n."""
    if "kappa" in g._cache:
        return g._cache["kappa"]
    n = g.n
    from .graph import is_connected
    if n <= 1 or not is_connected(g):
        k = 0
    elif g.size == n * (n - 1) // 2:
        k = n - 1
    else:
        k = min_degree(g)
        i = 0
        while i <= k and i < n:
            non = g.vertex_mask & ~g.adj[i] & ~(1 << i)
            for w in iter_bits(non):
                k = min(k, _local_connectivity(g, i, w, k))
            i += 1
    g._cache["kappa"] = k
    return k


def is_k_connected(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if g.n < k + 1:
        return False
    if k == 1:
        from .graph import is_connected
        return is_connected(g)
    if k == 2:
        return is_biconnected(g)
    return connectivity(g) >= k


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INFINITY`` for forests."""
    if "girth" in g._cache:
        return g._cache["girth"]
    best = INFINITY
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    g._cache["girth"] = best
    return best


# -- longest cycles ----------------------------------------------------------

def longest_cycle(g: Graph, budget: int | None = None) -> CycleWitness | None:
    """A longest cycle (deterministic: first found in label order), or None."""
    if "cyc" in g._cache:
        return g._cache["cyc"]
    adj = _np_adj(g)
    n = g.n
    out = np.zeros(max(n, 1), dtype=np.int64)
    best, witness = 2, None
    spend = _Budget(budget)
    for block in sorted(blocks(g), key=lambda m: (-_popcount(m), m)):
        if _popcount(block) <= best:
            break
        memo = _memo(n)
        for root in iter_bits(block):
            allowed = block & ~((1 << root) - 1)
            if _popcount(allowed) <= best:
                break
            val, nodes = K.cycle_search(adj, n, root, np.uint64(allowed), best, K.MAXIMIZE,
                                        memo, n <= K.MEMO_MAX, spend.arg(), out, _NO_STORE)
            val = spend.spend(val, nodes)
            if val > best:
                best = val
                witness = CycleWitness(tuple(out[:val]))
    g._cache["cyc"] = witness
    return witness


def circumference(g: Graph, budget: int | None = None) -> int:
    """c(G); 0 for forests."""
    w = longest_cycle(g, budget)
    return 0 if w is None else w.length


def cycle_through(g: Graph, v: int, length: int, budget: int | None = None) -> CycleWitness | None:
    """A cycle with at least ``length`` vertices through ``v``, or None."""
    adj = _np_adj(g)
    n = g.n
    out = np.zeros(max(n, 1), dtype=np.int64)
    spend = _Budget(budget)
    for block in blocks(g):
        if not block >> v & 1 or _popcount(block) < length:
            continue
        val, nodes = K.cycle_search(adj, n, v, np.uint64(block), length - 1, K.FIRST,
                                    _memo(n), n <= K.MEMO_MAX, spend.arg(), out, _NO_STORE)
        val = spend.spend(val, nodes)
        if val:
            return CycleWitness(tuple(out[:val]))
    return None


def cummerbund_cover_set(g: Graph, budget: int | None = None) -> frozenset[int]:
    """Vertices lying on some longest cycle; empty for forests."""
    if "ccset" in g._cache:
        return g._cache["ccset"]
    w = longest_cycle(g, budget)
    cover = 0
    if w is not None:
        c = w.length
        cover = w.vertex_mask
        for v in range(g.n):
            if cover >> v & 1:
                continue
            hit = cycle_through(g, v, c, budget)
            if hit is not None:
                cover |= hit.vertex_mask
    result = frozenset(iter_bits(cover))
    g._cache["ccset"] = result
    return result


def cc(g: Graph) -> int:
    return len(cummerbund_cover_set(g))


def is_cummerbund_covered(g: Graph) -> bool:
    """Every vertex on a longest cycle; forests (and K_0) are never covered."""
    return g.n > 0 and circumference(g) >= 3 and cc(g) == g.n


# -- longest paths -----------------------------------------------------------

def longest_path(g: Graph, budget: int | None = None) -> PathWitness | None:
    """A detour (deterministic), or None for the null graph."""
    if "path" in g._cache:
        return g._cache["path"]
    if g.n == 0:
        return None
    adj = _np_adj(g)
    n = g.n
    out = np.zeros(n, dtype=np.int64)
    best, witness = 0, None
    spend = _Budget(budget)
    for comp in sorted(components(g), key=lambda m: (-_popcount(m), m)):
        size = _popcount(comp)
        if size <= best:
            break
        memo = _memo(n)
        for s in iter_bits(comp):
            val, nodes = K.path_search(adj, n, s, np.uint64(comp), best, K.MAXIMIZE, np.uint64(0),
                                       memo, n <= K.MEMO_MAX, spend.arg(), out, _NO_STORE)
            val = spend.spend(val, nodes)
            if val > best:
                best = val
                witness = PathWitness(tuple(out[:val]))
            if best == size:
                break
    g._cache["path"] = witness
    return witness


def detour_order(g: Graph, budget: int | None = None) -> int:
    """Number of vertices of a longest path (1 for any nonnull edgeless graph)."""
    w = longest_path(g, budget)
    return 0 if w is None else w.order


def path_through(g: Graph, v: int, order: int, budget: int | None = None) -> PathWitness | None:
    """A path with at least ``order`` vertices containing ``v``, or None."""
    adj = _np_adj(g)
    n = g.n
    out = np.zeros(n, dtype=np.int64)
    comp = next(c for c in components(g) if c >> v & 1)
    if _popcount(comp) < order:
        return None
    memo = _memo(n)
    spend = _Budget(budget)
    for s in iter_bits(comp):
        val, nodes = K.path_search(adj, n, s, np.uint64(comp), order - 1, K.FIRST, np.uint64(1 << v),
                                   memo, n <= K.MEMO_MAX, spend.arg(), out, _NO_STORE)
        val = spend.spend(val, nodes)
        if val:
            return PathWitness(tuple(out[:val]))
    return None


def detour_cover_set(g: Graph, budget: int | None = None) -> frozenset[int]:
    if "dcset" in g._cache:
        return g._cache["dcset"]
    w = longest_path(g, budget)
    cover = 0
    if w is not None:
        p = w.order
        cover = w.vertex_mask
        for v in range(g.n):
            if cover >> v & 1:
                continue
            hit = path_through(g, v, p, budget)
            if hit is not None:
                cover |= hit.vertex_mask
    result = frozenset(iter_bits(cover))
    g._cache["dcset"] = result
    return result


def dc(g: Graph) -> int:
    return len(detour_cover_set(g))


def is_detour_covered(g: Graph) -> bool:
    return g.n > 0 and dc(g) == g.n


# -- counting and enumerating all maximum paths / cycles ---------------------

def _collect_cycles(g: Graph, length: int, collect: bool):
    adj = _np_adj(g)
    n = g.n
    out = np.zeros(max(n, 1), dtype=np.int64)
    total = 0
    found: list = []
    memo = _memo(n)
    for root in range(n):
        allowed = g.vertex_mask & ~((1 << root) - 1)
        if _popcount(allowed) < length:
            break
        cap = 64
        while True:
            store = np.zeros((cap, max(length, 1)), dtype=np.int64) if collect else _NO_STORE
            val, _ = K.cycle_search(adj, n, root, np.uint64(allowed), length - 1,
                                    K.COLLECT if collect else K.COUNT,
                                    memo if not collect else _memo(n), n <= K.MEMO_MAX, 0, out, store)
            if val != K.OVERFLOW:
                break
            cap *= 4
        total += val
        if collect:
            found.extend(tuple(store[i]) for i in range(val))
    return total // 2, found


def count_cummerbunds(g: Graph) -> int:
    """Number of distinct longest cycles (as edge sets); 0 for forests."""
    c = circumference(g)
    return _collect_cycles(g, c, False)[0] if c else 0


def cummerbunds(g: Graph) -> list[CycleWitness]:
    """All longest cycles, sorted."""
    c = circumference(g)
    if not c:
        return []
    return sorted(set(CycleWitness(t) for t in _collect_cycles(g, c, True)[1]),
                  key=lambda w: w.vertices)


def _collect_paths(g: Graph, order: int, collect: bool):
    adj = _np_adj(g)
    n = g.n
    out = np.zeros(max(n, 1), dtype=np.int64)
    total = 0
    found: list = []
    memo = _memo(n)
    for s in range(n):
        cap = 64
        while True:
            store = np.zeros((cap, max(order, 1)), dtype=np.int64) if collect else _NO_STORE
            val, _ = K.path_search(adj, n, s, np.uint64(g.vertex_mask), order - 1,
                                   K.COLLECT if collect else K.COUNT, np.uint64(0),
                                   memo if not collect else _memo(n), n <= K.MEMO_MAX, 0, out, store)
            if val != K.OVERFLOW:
                break
            cap *= 4
        total += val
        if collect:
            found.extend(tuple(store[i]) for i in range(val))
    return (total if order == 1 else total // 2), found


def count_detours(g: Graph) -> int:
    """Number of distinct longest paths (a path and its reversal count once)."""
    p = detour_order(g)
    return _collect_paths(g, p, False)[0] if p else 0


def detours(g: Graph) -> list[PathWitness]:
    p = detour_order(g)
    if not p:
        return []
    return sorted(set(PathWitness(t) for t in _collect_paths(g, p, True)[1]),
                  key=lambda w: w.vertices)


# -- domination --------------------------------------------------------------

def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff ``G - S`` has no edges (domination in the cycle/path sense)."""
    s = mask_of(vertices)
    if s & ~g.vertex_mask:
        raise InvalidVertex("dominating set leaves the vertex range")
    rest = g.vertex_mask & ~s
    return all(not (g.adj[v] & rest) for v in iter_bits(rest))


def complement_structure_after_cummerbund(g: Graph, w: CycleWitness | Sequence[int]) -> str:
    """Classify ``G - V(W)`` as ``"empty"``, ``"complete"`` or ``"mixed"``.

    The null graph and K_1 count as empty.
    """
    if not isinstance(w, CycleWitness):
        w = CycleWitness(tuple(w))
    if not w.is_valid_in(g) or w.length != circumference(g):
        raise NotACummerbund(f"{w.vertices} is not a longest cycle")
    rest = g.vertex_mask & ~w.vertex_mask
    if all(not (g.adj[v] & rest) for v in iter_bits(rest)):
        return "empty"
    if all((g.adj[v] | (1 << v)) & rest == rest for v in iter_bits(rest)):
        return "complete"
    return "mixed"


def profile(g: Graph) -> InvariantProfile:
    c = circumference(g)
    return InvariantProfile(
        order=g.n,
        size=g.size,
        kappa=connectivity(g),
        girth=girth(g),
        circumference=c,
        detour_order=detour_order(g),
        dc=dc(g),
        cc=cc(g),
        detour_covered=is_detour_covered(g),
        cummerbund_covered=is_cummerbund_covered(g),
        bipartite=is_bipartite(g),
    )
