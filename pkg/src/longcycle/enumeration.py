"""Isomorph-free generation of small graphs by canonical augmentation.

A graph of order ``m + 1`` is produced from a graph of order ``m`` by adding
vertex ``m`` with some neighborhood ``S``.  The child is kept only when the
new vertex lies in the orbit of the *canonical deletion vertex*: among the
vertices maximizing (degree, triangles, sorted neighbor degrees), the one that receives
the largest canonical label.  Each isomorphism class then has exactly one
accepted parent; children of one parent are deduplicated by certificate only
when that parent has a nontrivial automorphism group.

Hereditary filters (girth, bipartite, induced-free, edge bound, and the
order-aware form of the degree bound) prune every level of the tree.
Connectivity filters are applied to the finished graphs only.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterator

from .canon import canonical_form, has_nontrivial_automorphism
from .errors import InvalidParameter, UniverseTooLarge
from .graph import Graph, is_connected, iter_bits, min_degree, two_coloring
from .invariants import is_k_connected
from .recognition import find_induced, pattern

MAX_ORDER = 13
DENSE_LIMIT = 11
SHARD_LEVEL = 6


@dataclass(frozen=True)
class UniverseSpec:
    """Declarative description of a set of isomorphism classes of graphs.

    ``min_girth`` of 3 or less means no restriction; ``induced_free`` holds
    pattern names (``"P4"``, ``"C4"``, ``"2K2"``, ``"K13"``) or graphs.
    """

    n: int
    connected: bool = False
    min_connectivity: int = 0
    bipartite: bool = False
    min_girth: int = 0
    induced_free: tuple = ()
    min_degree: int = 0
    max_edges: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "induced_free", tuple(self.induced_free))
        if self.n < 0:
            raise InvalidParameter("order must be nonnegative")

    def hereditary(self) -> "UniverseSpec":
        """The part of the spec used for pruning (connectivity stripped)."""
        return replace(self, connected=False, min_connectivity=0)

    def describe(self) -> dict:
        d = {"n": self.n}
        if self.connected:
            d["connected"] = True
        if self.min_connectivity:
            d["min_connectivity"] = self.min_connectivity
        if self.bipartite:
            d["bipartite"] = True
        if self.min_girth > 3:
            d["min_girth"] = self.min_girth
        if self.induced_free:
            d["induced_free"] = [p if isinstance(p, str) else repr(p) for p in self.induced_free]
        if self.min_degree:
            d["min_degree"] = self.min_degree
        if self.max_edges is not None:
            d["max_edges"] = self.max_edges
        return d


def _check_feasible(spec: UniverseSpec) -> None:
    if spec.n > MAX_ORDER:
        raise UniverseTooLarge(f"order {spec.n} exceeds the cap {MAX_ORDER}")
    if spec.n > DENSE_LIMIT and not (spec.min_girth >= 6 or spec.bipartite):
        raise UniverseTooLarge(
            f"order {spec.n} > {DENSE_LIMIT} needs a girth >= 6 or bipartite filter")


# -- pruning helpers ---------------------------------------------------------

def _distances(adj: tuple[int, ...], n: int, limit: int) -> list[int]:
    """near[a] = mask of vertices b != a with dist(a, b) < limit."""
    near = []
    for a in range(n):
        seen = 1 << a
        frontier = seen
        for _ in range(limit - 1):
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u]
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
        near.append(seen & ~(1 << a))
    return near


def _compatibility(parent: Graph, spec: UniverseSpec) -> list[int]:
    """compat[a] = vertices that may share the new vertex's neighborhood with a."""
    m = parent.n
    full = (1 << m) - 1
    compat = [full & ~(1 << a) for a in range(m)]
    if spec.min_girth > 3:
        # a new vertex adjacent to a and b closes a cycle of length dist(a, b) + 2
        near = _distances(parent.adj, m, spec.min_girth - 2)
        compat = [c & ~near[a] for a, c in enumerate(compat)]
    if spec.bipartite:
        _, color = two_coloring(parent)
        comp_of = _component_masks(parent)
        for a in range(m):
            same_comp = comp_of[a]
            wrong = 0
            for b in iter_bits(same_comp):
                if color[b] != color[a]:
                    wrong |= 1 << b
            compat[a] &= ~wrong
    return compat


def _component_masks(g: Graph) -> list[int]:
    out = [0] * g.n
    left = g.vertex_mask
    while left:
        v = (left & -left).bit_length() - 1
        seen = 1 << v
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adj[u] & ~seen):
                seen |= 1 << w
                queue.append(w)
        for u in iter_bits(seen):
            out[u] = seen
        left &= ~seen
    return out


def _subsets(pool: list[int], size: int, compat: list[int], forced: int) -> Iterator[int]:
    """Masks of ``size``-subsets of ``pool`` that are cliques in ``compat`` and contain ``forced``."""
    k = len(pool)
    forced_count = forced.bit_count()

    def rec(i: int, chosen: int, allowed: int, left: int) -> Iterator[int]:
        if left == 0:
            if chosen & forced == forced:
                yield chosen
            return
        for j in range(i, k - left + 1):
            v = pool[j]
            bit = 1 << v
            if not allowed & bit:
                if forced & bit:
                    return
                continue
            yield from rec(j + 1, chosen | bit, allowed & compat[v], left - 1)
            if forced & bit:
                return

    if forced_count <= size:
        yield from rec(0, 0, (1 << (max(pool) + 1)) - 1 if pool else 0, size)


def _accept(child: Graph, new: int, degree: int) -> bool:
    """Is ``new`` in the orbit of the canonical deletion vertex of ``child``?

    Candidates are the vertices maximizing (degree, triangles, sorted neighbor
    degrees);
    among them the deletion vertex is the one with the largest canonical label.
    """
    adj = child.adj
    top = [v for v in range(child.n) if adj[v].bit_count() == degree]
    if len(top) == 1:
        return True
    degs = [a.bit_count() for a in adj]
    keys = {}
    for v in top:
        nb = adj[v]
        ds = sorted(degs[u] for u in iter_bits(nb))
        tri = sum((adj[u] & nb).bit_count() for u in iter_bits(nb))
        keys[v] = (tri, ds)
    key = max(keys.values())
    if keys[new] != key:
        return False
    last = [v for v in top if keys[v] == key]
    if len(last) == 1:
        return True
    cert = canonical_form(child)
    chosen = max(last, key=lambda v: cert.relabeling[v])
    return cert.orbits[chosen] == cert.orbits[new]


def _children(parent: Graph, spec: UniverseSpec, target: int) -> Iterator[Graph]:
    m = parent.n
    degs = parent.degrees()
    maxdeg = max(degs, default=0)
    compat = _compatibility(parent, spec)
    patterns = [pattern(p) for p in spec.induced_free]
    # after this step the graph has order m + 1; each later deletion costs at most 1 degree
    need = spec.min_degree - (target - (m + 1))
    forced = 0
    for v, d in enumerate(degs):
        if d < need:
            if d + 1 < need:
                return
            forced |= 1 << v
    edge_room = None if spec.max_edges is None else spec.max_edges - parent.size
    dedupe = m > 0 and has_nontrivial_automorphism(parent)
    seen: set[bytes] = set()
    lo = max(maxdeg, need, 0)
    hi = m if edge_room is None else min(m, edge_room)
    for size in range(lo, hi + 1):
        pool = [v for v in range(m) if degs[v] <= size - 1]
        if forced & ~sum(1 << v for v in pool):
            continue
        for s in _subsets(pool, size, compat, forced):
            adj = [row | (1 << m) if s >> v & 1 else row for v, row in enumerate(parent.adj)]
            adj.append(s)
            child = Graph(m + 1, adj)
            if patterns and any(find_induced(child, p, containing=m) is not None for p in patterns):
                continue
            if not _accept(child, m, size):
                continue
            if dedupe:
                cert = canonical_form(child).canon
                if cert in seen:
                    continue
                seen.add(cert)
            yield child


def _final_ok(g: Graph, spec: UniverseSpec) -> bool:
    if spec.min_degree and min_degree(g) < spec.min_degree:
        return False
    if spec.connected and not is_connected(g):
        return False
    if spec.min_connectivity and not is_k_connected(g, spec.min_connectivity):
        return False
    return True


def _walk(g: Graph, spec: UniverseSpec, stop: int) -> Iterator[Graph]:
    if g.n == stop:
        yield g
        return
    for child in _children(g, spec, spec.n):
        yield from _walk(child, spec, stop)


def _roots(spec: UniverseSpec) -> Iterator[Graph]:
    if spec.n == 0:
        yield Graph(0, [])
    else:
        yield Graph(1, [0])


def _raw(spec: UniverseSpec, shard_index: int = 0, shard_count: int = 1) -> Iterator[Graph]:
    """Hereditary stream for one shard (no leaf filters)."""
    target = spec.n
    if shard_count == 1 or target <= 1:
        if shard_index == 0:
            for root in _roots(spec):
                yield from _walk(root, spec, target)
        return
    level = min(SHARD_LEVEL, target - 1)
    for root in _roots(spec):
        for i, node in enumerate(_walk(root, spec, level)):
            if i % shard_count == shard_index:
                yield from _walk(node, spec, target)


def enumerate_graphs(spec: UniverseSpec) -> Iterator[Graph]:
    """One graph per isomorphism class of order ``spec.n`` passing every filter.

    Deterministic order.  Raises :class:`UniverseTooLarge` instead of starting
    an enumeration outside the desk-scale envelope.
    """
    yield from shard(spec, 0, 1)


def shard(spec: UniverseSpec, shard_index: int, shard_count: int) -> Iterator[Graph]:
    """The part of :func:`enumerate_graphs` under every ``shard_count``-th top branch."""
    if shard_count < 1 or not 0 <= shard_index < shard_count:
        raise InvalidParameter(f"bad shard {shard_index}/{shard_count}")
    _check_feasible(spec)
    hered = spec.hereditary()
    for g in _raw(hered, shard_index, shard_count):
        if _final_ok(g, spec):
            yield g


def count(spec: UniverseSpec, shard_index: int = 0, shard_count: int = 1) -> int:
    return sum(1 for _ in shard(spec, shard_index, shard_count))


@lru_cache(maxsize=8)
def _cached_raw(hered: UniverseSpec, shard_index: int, shard_count: int) -> tuple[Graph, ...]:
    return tuple(_raw(hered, shard_index, shard_count))


def universe(spec: UniverseSpec, shard_index: int = 0, shard_count: int = 1) -> list[Graph]:
    """Materialized :func:`shard`, memoized on the hereditary part of ``spec``.

    Checks that sweep the same base universe with different leaf filters
    share one generation run per process.
    """
    if shard_count < 1 or not 0 <= shard_index < shard_count:
        raise InvalidParameter(f"bad shard {shard_index}/{shard_count}")
    _check_feasible(spec)
    raw = _cached_raw(spec.hereditary(), shard_index, shard_count)
    return [g for g in raw if _final_ok(g, spec)]


def worker_count() -> int:
    """Worker processes for sharded runs, from ``LONGCYCLE_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("LONGCYCLE_THREADS", "1")))
    except ValueError:
        return 1
