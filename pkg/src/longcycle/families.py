"""Constructors for the named graph families, with their claimed invariants.

Every constructor labels deterministically.  Joins put the left operand first,
theta graphs use hubs 0 and 1 followed by the branch interiors in the given
order, and the bipartite family puts the 8-cycle on 0..7 with attachments
appended.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .errors import InvalidParameter, NotSimple
from .graph import (Graph, add_edge, complete, disjoint_union, empty, from_edge_list,
                    join, subdivide_edge)


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise InvalidParameter("order must be nonnegative")
    return complete(n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"C_n needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 0:
        raise InvalidParameter("order must be nonnegative")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def matching(q: int) -> Graph:
    """qK_2."""
    if q < 0:
        raise InvalidParameter("q must be nonnegative")
    return from_edge_list(2 * q, [(2 * i, 2 * i + 1) for i in range(q)])


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise InvalidParameter("order must be nonnegative")
    return empty(n)


BASIC = {"K": complete_graph, "C": cycle, "P": path, "qK2": matching, "empty": empty_graph}


def basic(kind: str, param: int) -> Graph:
    try:
        return BASIC[kind](param)
    except KeyError:
        raise InvalidParameter(f"unknown basic family {kind!r}") from None


def mixed_join(k: int, q: int, m: int) -> Graph:
    """kK_1 joined with qK_2 + mK_1."""
    if min(k, q, m) < 0:
        raise InvalidParameter("parameters must be nonnegative")
    if k + 2 * q + m == 0:
        raise InvalidParameter("mixed_join(0, 0, 0) is the null graph")
    return join(empty(k), disjoint_union(matching(q), empty(m)))


def remark1_family(n: int) -> Graph:
    """2-connected, minimum degree ceil(n/3) - 1, not cummerbund covered."""
    if n < 9:
        raise InvalidParameter(f"needs n >= 9, got {n}")
    k, r = divmod(n, 3)
    if r == 0:
        return mixed_join(k - 1, k - 1, 3)
    return mixed_join(k, k, r)


def remark3_family(n: int) -> Graph:
    """Connected, minimum degree ceil((n-2)/3) - 1, not detour covered."""
    if n < 6:
        raise InvalidParameter(f"needs n >= 6, got {n}")
    k, r = divmod(n, 3)
    return mixed_join(k - 1, k, r + 1)


def remark4_family(a: int, b: int) -> Graph:
    """K_2 joined with aK_1 + bK_2."""
    if a < 1 or b < 3:
        raise InvalidParameter(f"needs a >= 1 and b >= 3, got a={a}, b={b}")
    return join(complete(2), disjoint_union(empty(a), matching(b)))


# -- theta graphs ------------------------------------------------------------

def theta(lengths: Sequence[int]) -> Graph:
    """Internally disjoint paths of the given lengths between hubs 0 and 1."""
    lengths = list(lengths)
    if len(lengths) < 2:
        raise InvalidParameter("a theta graph needs at least two paths")
    if any(l < 1 for l in lengths):
        raise InvalidParameter("path lengths must be positive")
    if lengths.count(1) > 1:
        raise NotSimple("two paths of length 1 would be parallel edges")
    if sum(1 for l in lengths if l >= 2) < 2:
        raise InvalidParameter("at least two paths must have length >= 2")
    edges = []
    nxt = 2
    for l in lengths:
        prev = 0
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return from_edge_list(nxt, edges)


def uniform_theta(a: int, m: int) -> Graph:
    if a == 1 and m >= 2:
        raise NotSimple("uniform_theta(1, m) has parallel edges")
    if a < 2 or m < 2:
        raise InvalidParameter(f"needs a >= 2 and m >= 2, got a={a}, m={m}")
    return theta([a] * m)


def _check_order(n: int, parity: int, low: int) -> None:
    if n % 2 != parity or n < low:
        kind = "even" if parity == 0 else "odd"
        raise InvalidParameter(f"needs {kind} n >= {low}, got {n}")


def thm16_girth5_even(n: int) -> Graph:
    """theta(4, 4, 3^((n-10)/2), 2) with the chord xr added and then subdivided.

    Hubs are x = 0 and y = 1; the first branch is x-2-3-4-y, so r = 4.
    """
    _check_order(n, 0, 10)
    base = theta([4, 4] + [3] * ((n - 10) // 2) + [2])
    return subdivide_edge(add_edge(base, 0, 4), 0, 4)


def thm16_girth5_odd(n: int) -> Graph:
    _check_order(n, 1, 11)
    return theta([4, 4] + [3] * ((n - 9) // 2) + [2])


def thm16_girth6_even(n: int) -> Graph:
    _check_order(n, 0, 12)
    return theta([4, 4] + [3] * ((n - 8) // 2))


def thm16_girth6_odd(n: int) -> Graph:
    _check_order(n, 1, 13)
    return theta([5, 4] + [3] * ((n - 9) // 2))


def thm16_girth4(n: int) -> Graph:
    """theta(3, 3, 2^(n-6)); girth 4 and cc = 6 from order 8 on."""
    if n < 6:
        raise InvalidParameter(f"needs n >= 6, got {n}")
    return theta([3, 3] + [2] * (n - 6))


# -- the bipartite family ----------------------------------------------------

# chords of the 8-cycle v1..v8, 1-based as in the case analysis
CHORDS = {
    1: (),
    2: ((1, 4),),
    3: ((1, 4), (1, 6)),
    4: ((1, 4), (2, 5)),
    5: ((1, 4), (5, 8)),
    6: ((1, 4), (1, 6), (2, 5)),
    7: ((1, 4), (1, 6), (2, 5), (5, 8)),
}


def bipartite_family(i: int, n: int, attach: tuple[int, int] = (1, 5)) -> Graph:
    """G_{i,n}: an 8-cycle with chord set S_i plus n - 8 vertices on {v1, v5}.

    ``attach`` names the (1-based) cycle vertices shared by the off-cycle
    vertices; (4, 8) is the alternative the case analysis also allows.
    """
    if i not in CHORDS:
        raise InvalidParameter(f"i must be in 1..7, got {i}")
    if n < 9:
        raise InvalidParameter(f"needs n >= 9, got {n}")
    edges = [(j, (j + 1) % 8) for j in range(8)]
    edges += [(a - 1, b - 1) for a, b in CHORDS[i]]
    a, b = attach
    for v in range(8, n):
        edges += [(v, a - 1), (v, b - 1)]
    return from_edge_list(n, edges)


# -- claimed profiles --------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """One family member together with the invariant values asserted for it.

    ``claims`` maps InvariantProfile field names to values; fields that are
    not asserted are absent.
    """

    family: str
    params: tuple
    build: Callable[[], Graph] = field(compare=False, repr=False)
    claims: dict = field(default_factory=dict, compare=False)

    def graph(self) -> Graph:
        return self.build()


def _spec(family: str, params: tuple, build: Callable[[], Graph], **claims) -> FamilySpec:
    return FamilySpec(family, params, build, claims)


def catalog(n_max: int = 16, k_max: int = 4) -> Iterator[FamilySpec]:
    """Every constructor over a parameter sweep, with the values it should attain."""
    for k in range(2, k_max + 1):
        for n in range(3 * k + 1, n_max + 1):
            yield _spec("thm7", (k, n), lambda k=k, n=n: mixed_join(k, k, n - 3 * k),
                        order=n, kappa=k, circumference=3 * k, cc=3 * k)
    for k in range(1, k_max + 1):
        for n in range(3 * k + 3, n_max + 1):
            yield _spec("thm8", (k, n), lambda k=k, n=n: mixed_join(k, k + 1, n - 3 * k - 2),
                        order=n, kappa=k, detour_order=3 * k + 2, dc=3 * k + 2)
    for n in range(9, n_max + 1):
        yield _spec("remark1", (n,), lambda n=n: remark1_family(n),
                    order=n, cummerbund_covered=False, min_degree=-(-n // 3) - 1,
                    two_connected=True)
    for n in range(6, n_max + 1):
        yield _spec("remark3", (n,), lambda n=n: remark3_family(n),
                    order=n, detour_covered=False, min_degree=-(-(n - 2) // 3) - 1,
                    connected=True)
    for a in range(1, 3):
        for b in range(3, 6):
            yield _spec("remark4", (a, b), lambda a=a, b=b: remark4_family(a, b),
                        order=2 + a + 2 * b, detour_covered=False, cummerbund_covered=False,
                        two_connected=True, p4_free=True, c4_free=True)
    for n in range(8, max(n_max, 20) + 1):
        yield _spec("thm16_g4", (n,), lambda n=n: thm16_girth4(n), order=n, girth=4, cc=6)
    for n in range(10, max(n_max, 20) + 1, 2):
        yield _spec("thm16_g5_even", (n,), lambda n=n: thm16_girth5_even(n),
                    order=n, girth=5, cc=8, kappa=2)
    for n in range(11, max(n_max, 20) + 1, 2):
        yield _spec("thm16_g5_odd", (n,), lambda n=n: thm16_girth5_odd(n),
                    order=n, girth=5, cc=8)
    for n in range(12, max(n_max, 20) + 1, 2):
        yield _spec("thm16_g6_even", (n,), lambda n=n: thm16_girth6_even(n),
                    order=n, girth=6, cc=8)
    for n in range(13, max(n_max, 20) + 1, 2):
        yield _spec("thm16_g6_odd", (n,), lambda n=n: thm16_girth6_odd(n),
                    order=n, girth=6, cc=9)
    for i in range(1, 8):
        for n in range(9, n_max + 1):
            yield _spec("bipartite", (i, n), lambda i=i, n=n: bipartite_family(i, n),
                        order=n, bipartite=True, two_connected=True, cc=8)
