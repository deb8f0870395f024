"""Canonical labeling by partition refinement and individualization.

The search follows the usual scheme: refine the ordered vertex partition to
an equitable one, then branch on the vertices of the first non-singleton
cell.  Every discrete leaf yields a relabeled adjacency matrix and the
lexicographically greatest one is the canonical form.  Leaves that reproduce
an already-seen matrix give automorphisms, which prune sibling branches
lying in the same orbit of the stabilizer of the current prefix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Certificate:
    """``canon`` is equal for two graphs iff they are isomorphic.

    ``relabeling[v]`` is the canonical label of vertex ``v``.
    """

    canon: bytes
    relabeling: tuple[int, ...]
    automorphisms_found: bool = False
    orbits: tuple[int, ...] = ()


def refine(adj: Sequence[int], cells: list[list[int]],
           splitters: list[list[int]] | None = None) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Splitter cells are taken first-in first-out; a cell splits by the number
    of neighbors in the splitter and its fragments keep the cell's position,
    ordered by that count.  Every step depends only on the partition
    structure, so the result commutes with relabeling.  ``splitters`` (cells
    of the input, by identity) restricts the initial queue when the rest of
    the partition is already known to be equitable.
    """
    if splitters is None:
        cells = [list(c) for c in cells]
        queue = deque(cells)
    else:
        cells = list(cells)
        queue = deque(splitters)
    n = sum(len(c) for c in cells)
    queued = {id(c) for c in queue}
    while queue and len(cells) < n:
        w = queue.popleft()
        queued.discard(id(w))
        near = 0
        wm = 0
        for v in w:
            wm |= 1 << v
            near |= adj[v]
        i = 0
        while i < len(cells):
            x = cells[i]
            if len(x) == 1:
                i += 1
                continue
            hits = [v for v in x if near >> v & 1]
            if not hits or len(hits) == len(x) and len(w) == 1:
                i += 1
                continue
            counts = [(adj[v] & wm).bit_count() for v in x]
            lo = min(counts)
            if lo == max(counts):
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(x, counts):
                groups.setdefault(c, []).append(v)
            frags = [groups[c] for c in sorted(groups)]
            cells[i:i + 1] = frags
            if id(x) in queued:
                queue.remove(x)
                queued.discard(id(x))
            for f in frags:
                queue.append(f)
                queued.add(id(f))
            i += len(frags)
    return cells


def _leaf_rows(nbrs: list[list[int]], order: list[int], n: int) -> tuple[int, ...]:
    bit = [0] * n
    for i, v in enumerate(order):
        bit[v] = 1 << (n - 1 - i)
    rows = []
    for v in order:
        r = 0
        for u in nbrs[v]:
            r |= bit[u]
        rows.append(r)
    return tuple(rows)


def _pack(rows: tuple[int, ...], n: int) -> bytes:
    width = (n + 7) // 8
    return bytes([n]) + b"".join(r.to_bytes(width, "big") for r in rows)


def _orbit_roots(perms: list[tuple[int, ...]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical_form(g: Graph, partition: list[list[int]] | None = None) -> Certificate:
    """Canonical certificate of ``g``, optionally respecting an ordered vertex coloring.

    With ``partition`` given, the certificate is invariant only under
    relabelings that map each color class to itself.
    """
    n = g.n
    if n == 0:
        return Certificate(b"\x00", (), False, ())
    if partition is None and "canon" in g._cache:
        return g._cache["canon"]
    adj = g.adj
    cells = [list(c) for c in partition] if partition is not None else [list(range(n))]
    root = refine(adj, cells)

    nbrs = [list(iter_bits(a)) for a in adj]
    first: list = []      # [rows, order]
    best: list = []
    auts: list[tuple[int, ...]] = []

    def record_aut(order_a: list[int], order_b: list[int]) -> None:
        p = [0] * n
        for a, b in zip(order_a, order_b):
            p[a] = b
        auts.append(tuple(p))

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            order = [c[0] for c in cells]
            rows = _leaf_rows(nbrs, order, n)
            if not first:
                first[:] = [rows, order]
                best[:] = [rows, order]
            elif rows == first[0]:
                record_aut(first[1], order)
            elif rows == best[0]:
                record_aut(best[1], order)
            elif rows > best[0]:
                best[:] = [rows, order]
            return
        cell = cells[target]
        tried: list[int] = []
        seen_auts = 0
        roots = None
        for v in cell:
            if tried and auts:
                if len(auts) != seen_auts:
                    seen_auts = len(auts)
                    stab = [p for p in auts if all(p[x] == x for x in prefix)]
                    roots = _orbit_roots(stab, n) if stab else None
                if roots is not None and any(roots[v] == roots[t] for t in tried):
                    continue
            tried.append(v)
            single = [v]
            child = cells[:target] + [single, [u for u in cell if u != v]] + cells[target + 1:]
            search(refine(adj, child, [single]), prefix + [v])

    search(root, [])
    order = best[1]
    labeling = [0] * n
    for i, v in enumerate(order):
        labeling[v] = i
    orbits = tuple(_orbit_roots(auts, n)) if auts else tuple(range(n))
    cert = Certificate(_pack(best[0], n), tuple(labeling), bool(auts), orbits)
    if partition is None:
        g._cache["canon"] = cert
    return cert


def canonical(g: Graph) -> Certificate:
    return canonical_form(g)


def canonical_graph(g: Graph) -> Graph:
    from .graph import relabel
    return relabel(g, canonical_form(g).relabeling)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).canon == canonical_form(h).canon


def has_nontrivial_automorphism(g: Graph) -> bool:
    """Exact: an unpruned search that meets no automorphism proves the group trivial."""
    return canonical_form(g).automorphisms_found


def same_orbit(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``g`` maps ``u`` to ``v``."""
    if u == v:
        return True
    rest_u = [x for x in range(g.n) if x != u]
    rest_v = [x for x in range(g.n) if x != v]
    return (canonical_form(g, [rest_u, [u]]).canon
            == canonical_form(g, [rest_v, [v]]).canon)
