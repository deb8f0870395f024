"""Compiled branch-and-bound kernels for longest paths and cycles.

Adjacency is a ``uint64`` array (n <= 64).  Both kernels run an explicit
stack DFS extending a path one vertex at a time, smallest label first, and
prune a node when

* the vertices reachable from the path end through unvisited allowed
  vertices cannot lift the length past the bound,
* a required vertex (or, for cycles, every neighbor of the root) is no longer
  reachable, or
* the state ``(end, visited)`` already failed (failure memo, n <= MEMO_MAX).

Search modes: MAXIMIZE improves ``best`` and writes the witness to ``out``;
FIRST stops at the first witness longer than ``best``; COUNT counts walks of
exactly ``best + 1`` vertices; COLLECT additionally stores them in ``store``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAXIMIZE, FIRST, COUNT, COLLECT = 0, 1, 2, 3
TIMEOUT = -2
OVERFLOW = -3
MEMO_MAX = 20

_ONE = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def _reach(adj, n, start, avail):
    seen = adj[start] & avail
    frontier = seen
    while frontier != np.uint64(0):
        nxt = np.uint64(0)
        for u in range(n):
            if (frontier >> np.uint64(u)) & _ONE:
                nxt |= adj[u]
        nxt &= avail & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@njit(cache=True, inline="always")
def _memo_get(memo, end, visited, n):
    i = (np.int64(end) << np.int64(n)) | np.int64(visited)
    return (memo[i >> 3] >> (i & 7)) & 1


@njit(cache=True, inline="always")
def _memo_set(memo, end, visited, n):
    i = (np.int64(end) << np.int64(n)) | np.int64(visited)
    memo[i >> 3] |= np.uint8(1 << (i & 7))


@njit(cache=True)
def cycle_search(adj, n, root, allowed, best, mode, memo, use_memo, budget, out, store):
    """Cycles through ``root`` inside ``allowed``.

    Returns ``(value, nodes)``; value is the new best length (MAXIMIZE), the
    found length or 0 (FIRST), or the number of directed closed walks of
    length ``best + 1`` (COUNT/COLLECT; each cycle appears twice).
    """
    path = np.empty(n, np.int64)
    cand = np.empty(n, np.uint64)
    mark = np.empty(n, np.int64)
    target = best + 1
    root_nbrs = adj[root] & allowed
    visited = _ONE << np.uint64(root)
    path[0] = root
    cand[0] = root_nbrs
    found = 0
    mark[0] = best
    depth = 0
    nodes = 0
    limit = _popcount(allowed)
    while depth >= 0:
        if cand[depth] == np.uint64(0):
            if use_memo and depth > 0:
                if (mode <= FIRST and best == mark[depth]) or (mode >= COUNT and found == mark[depth]):
                    _memo_set(memo, path[depth], visited, n)
            visited ^= _ONE << np.uint64(path[depth])
            depth -= 1
            continue
        c = cand[depth]
        low = c & (~c + _ONE)
        cand[depth] = c ^ low
        u = _popcount(low - _ONE)
        nodes += 1
        if budget > 0 and nodes > budget:
            return TIMEOUT, nodes
        depth += 1
        path[depth] = u
        visited |= low
        length = depth + 1
        if length >= 3 and (root_nbrs >> np.uint64(u)) & _ONE:
            if mode == MAXIMIZE and length > best:
                best = length
                for i in range(length):
                    out[i] = path[i]
                if best == limit:
                    return best, nodes
            elif mode == FIRST and length > best:
                for i in range(length):
                    out[i] = path[i]
                return length, nodes
            elif mode >= COUNT and length == target:
                if mode == COLLECT:
                    if found >= store.shape[0]:
                        return OVERFLOW, nodes
                    for i in range(length):
                        store[found, i] = path[i]
                found += 1
        pruned = False
        if use_memo and _memo_get(memo, u, visited, n):
            pruned = True
        elif mode >= COUNT and length >= target:
            pruned = True
        else:
            avail = allowed & ~visited
            r = _reach(adj, n, u, avail)
            if (r & root_nbrs) == np.uint64(0):
                pruned = True
            elif mode <= FIRST and length + _popcount(r) <= best:
                pruned = True
            elif mode >= COUNT and length + _popcount(r) < target:
                pruned = True
            if pruned and use_memo:
                _memo_set(memo, u, visited, n)
            if not pruned:
                cand[depth] = adj[u] & avail
                mark[depth] = best if mode <= FIRST else found
        if pruned:
            visited ^= low
            depth -= 1
    if mode >= COUNT:
        return found, nodes
    if mode == FIRST:
        return 0, nodes
    return best, nodes


@njit(cache=True)
def path_search(adj, n, start, allowed, best, mode, required, memo, use_memo, budget, out, store):
    """Paths starting at ``start`` inside ``allowed`` that contain ``required``.

    Lengths count vertices.  Return convention as :func:`cycle_search`;
    COUNT/COLLECT report directed paths of exactly ``best + 1`` vertices.
    """
    path = np.empty(n, np.int64)
    cand = np.empty(n, np.uint64)
    mark = np.empty(n, np.int64)
    target = best + 1
    visited = _ONE << np.uint64(start)
    path[0] = start
    found = 0
    depth = 0
    nodes = 0
    limit = _popcount(allowed)
    if (required & ~visited) == np.uint64(0):
        if mode == MAXIMIZE and 1 > best:
            best = 1
            out[0] = start
        elif mode == FIRST and 1 > best:
            out[0] = start
            return 1, nodes
        elif mode >= COUNT and target == 1:
            if mode == COLLECT:
                if store.shape[0] == 0:
                    return OVERFLOW, nodes
                store[0, 0] = start
            return 1, nodes
    if mode == MAXIMIZE and best == limit:
        return best, nodes
    cand[0] = adj[start] & allowed
    mark[0] = best if mode <= FIRST else found
    while depth >= 0:
        if cand[depth] == np.uint64(0):
            if use_memo and depth > 0:
                if (mode <= FIRST and best == mark[depth]) or (mode >= COUNT and found == mark[depth]):
                    _memo_set(memo, path[depth], visited, n)
            visited ^= _ONE << np.uint64(path[depth])
            depth -= 1
            continue
        c = cand[depth]
        low = c & (~c + _ONE)
        cand[depth] = c ^ low
        u = _popcount(low - _ONE)
        nodes += 1
        if budget > 0 and nodes > budget:
            return TIMEOUT, nodes
        depth += 1
        path[depth] = u
        visited |= low
        length = depth + 1
        if (required & ~visited) == np.uint64(0):
            if mode == MAXIMIZE and length > best:
                best = length
                for i in range(length):
                    out[i] = path[i]
                if best == limit:
                    return best, nodes
            elif mode == FIRST and length > best:
                for i in range(length):
                    out[i] = path[i]
                return length, nodes
            elif mode >= COUNT and length == target:
                if mode == COLLECT:
                    if found >= store.shape[0]:
                        return OVERFLOW, nodes
                    for i in range(length):
                        store[found, i] = path[i]
                found += 1
        pruned = False
        if use_memo and _memo_get(memo, u, visited, n):
            pruned = True
        elif mode >= COUNT and length >= target:
            pruned = True
        else:
            avail = allowed & ~visited
            r = _reach(adj, n, u, avail)
            if (required & ~visited & ~r) != np.uint64(0):
                pruned = True
            elif mode <= FIRST and length + _popcount(r) <= best:
                pruned = True
            elif mode >= COUNT and length + _popcount(r) < target:
                pruned = True
            if pruned and use_memo:
                _memo_set(memo, u, visited, n)
            if not pruned:
                cand[depth] = adj[u] & avail
                mark[depth] = best if mode <= FIRST else found
        if pruned:
            visited ^= low
            depth -= 1
    if mode >= COUNT:
        return found, nodes
    if mode == FIRST:
        return 0, nodes
    return best, nodes
