"""Executable checks of the covering-number theorems over enumerated universes.

Each ``check_*`` function sweeps one or more :class:`UniverseSpec` streams
(sharded across worker processes when ``LONGCYCLE_THREADS`` > 1), together
with the relevant family constructors, and returns a :class:`CheckReport`.
Reports are deterministic apart from ``elapsed_ms``: counterexamples and
witnesses are sorted by the graph6 string of their canonical form, and each
counterexample is re-derived from its graph6 before it is emitted.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import families as F
from .canon import canonical_graph
from .enumeration import UniverseSpec, universe, worker_count
from .errors import InvalidParameter, SearchTimeout, UniverseTooLarge
from .formats import graph6_decode, graph6_encode
from .graph import (Graph, empty, from_adjacency, is_connected, join, min_degree,
                    subdivide_edge)
from .invariants import (InvariantProfile, circumference, complement_structure_after_cummerbund,
                         connectivity, cc, cummerbunds, dc, detour_order, detours, girth,
                         is_cummerbund_covered, is_detour_covered, is_dominating,
                         is_k_connected, profile)
from .recognition import contains_induced, is_cycle_graph, is_threshold, is_uniform_theta

PASS, COUNTEREXAMPLE, PARTIAL, ABSENT = "pass", "counterexample", "partial", "absent"


@dataclass
class CheckReport:
    check_id: str
    params: dict
    universe: list = field(default_factory=list)
    universe_size: int = 0
    outcome: str = PASS
    counterexamples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seed: int | None = None
    elapsed_ms: int = 0

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "check_id": self.check_id,
            "params": self.params,
            "universe": self.universe,
            "universe_size": self.universe_size,
            "outcome": self.outcome,
            "counterexamples": self.counterexamples,
            "details": self.details,
        }
        if self.seed is not None:
            d["seed"] = self.seed
        if timing:
            d["elapsed_ms"] = self.elapsed_ms
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(d["check_id"], d["params"], d.get("universe", []), d["universe_size"],
                   d["outcome"], d["counterexamples"], d.get("details", {}), d.get("seed"),
                   d.get("elapsed_ms", 0))

    @property
    def passed(self) -> bool:
        return self.outcome == PASS


@dataclass(frozen=True)
class WitnessProfile:
    """Target of a witness search.

    ``required`` maps InvariantProfile field names to exact values; the extra
    keys ``min_kappa`` (lower bound on connectivity) and ``induced_free``
    (pattern names) are also understood.  ``mode`` is ``"exhaustive"`` or
    ``"randomized"``.
    """

    name: str
    order: int
    required: dict
    mode: str = "exhaustive"
    budget: int = 0

    def describe(self) -> dict:
        return {"name": self.name, "order": self.order, "required": self.required,
                "mode": self.mode, "budget": self.budget}


PROFILE_A = WitnessProfile("a", 7, {"min_kappa": 2, "detour_covered": True,
                                    "cummerbund_covered": False, "circumference": 6,
                                    "detour_order": 7})
PROFILE_B = WitnessProfile("b", 12, {"min_kappa": 2, "cummerbund_covered": True,
                                     "detour_covered": False, "circumference": 8,
                                     "detour_order": 11}, "randomized", 3000)
PROFILE_C = WitnessProfile("c", 12, {"induced_free": ("2K2", "C4"), "detour_order": 11,
                                     "circumference": 9, "dc": 11, "cc": 11},
                           "randomized", 3000)


# -- violation predicates ------------------------------------------------------
# Each takes (graph, arg) and returns True when the graph violates the claim.
# They double as the self-audit: a counterexample is emitted only if its
# decoded graph6 still satisfies the predicate.

def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _not_cc_covered(g, arg):
    return not is_cummerbund_covered(g)


def _not_dc_covered(g, arg):
    return not is_detour_covered(g)


def _join_duality_broken(g, arg):
    # an edgeless G makes G v K_1 a star, which has no cycle at all
    if g.size == 0:
        return False
    h = join(empty(1), g)
    return is_cummerbund_covered(h) != is_detour_covered(g)


def _cc_below(g, bound):
    return cc(g) < bound


def _dc_below(g, bound):
    return dc(g) < bound


def _small_circumference_not_covered(g, arg):
    return circumference(g) <= 6 and not is_cummerbund_covered(g)


def _lemma15_broken(g, arg):
    return (girth(g) == circumference(g)) != (is_cycle_graph(g) or is_uniform_theta(g)[0])


def _cummerbund_leaves_mixed(g, arg):
    if circumference(g) == g.n:
        return False
    return any(complement_structure_after_cummerbund(g, w) == "mixed" for w in cummerbunds(g))


def _cummerbund_not_dominating(g, arg):
    if circumference(g) in (0, g.n):
        return False
    return any(not is_dominating(g, w.vertices) for w in cummerbunds(g))


def _detour_not_dominating(g, arg):
    if detour_order(g) == g.n:
        return False
    return any(not is_dominating(g, p.vertices) for p in detours(g))


def _lemma4_broken(g, arg):
    h = join(empty(1), g)
    if connectivity(h) != connectivity(g) + 1:
        return True
    # the count identity needs a path with two ends; see the star remark above
    return g.size > 0 and dc(g) != cc(h) - 1


def _family_claim_broken(g, claims):
    return bool(_claim_mismatches(g, claims))


def _profile_mismatch(g, required):
    return not _matches(g, required)


def _subdivision_broken(g, arg):
    return not (is_k_connected(g, 2) and is_detour_covered(g) and not is_cummerbund_covered(g))


PREDICATES: dict[str, Callable] = {
    "not_cummerbund_covered": _not_cc_covered,
    "not_detour_covered": _not_dc_covered,
    "join_duality": _join_duality_broken,
    "cc_below": _cc_below,
    "dc_below": _dc_below,
    "small_circumference_not_covered": _small_circumference_not_covered,
    "girth_circumference_iff_theta": _lemma15_broken,
    "cummerbund_leaves_mixed": _cummerbund_leaves_mixed,
    "cummerbund_not_dominating": _cummerbund_not_dominating,
    "detour_not_dominating": _detour_not_dominating,
    "join_duality_numbers": _lemma4_broken,
    "family_claim": _family_claim_broken,
    "profile_mismatch": _profile_mismatch,
    "subdivision": _subdivision_broken,
}


# -- measurements used by family claims and witness profiles ------------------

def _measure(g: Graph, key: str):
    if key == "min_degree":
        return min_degree(g)
    if key == "two_connected":
        return is_k_connected(g, 2)
    if key == "connected":
        return is_connected(g)
    if key == "p4_free":
        return not contains_induced(g, "P4")
    if key == "c4_free":
        return not contains_induced(g, "C4")
    value = getattr(profile(g), key)
    return None if value == math.inf else value


def _claim_mismatches(g: Graph, claims: dict) -> dict:
    out = {}
    for key, want in sorted(claims.items()):
        got = _measure(g, key)
        if got != want:
            out[key] = {"claimed": want, "computed": got}
    return out


def _violations(g: Graph, required: dict) -> float:
    """Distance of ``g`` from a witness profile (0 iff it matches)."""
    score = 0.0
    for key, want in required.items():
        if key == "min_kappa":
            score += max(0, want - connectivity(g))
        elif key == "induced_free":
            score += sum(contains_induced(g, p) for p in want)
        else:
            got = _measure(g, key)
            if isinstance(want, bool):
                score += got != want
            else:
                score += abs(got - want)
    return score


def _matches(g: Graph, required: dict) -> bool:
    for key, want in required.items():
        if key == "min_kappa":
            if not is_k_connected(g, want):
                return False
        elif key == "induced_free":
            if any(contains_induced(g, p) for p in want):
                return False
        elif _measure(g, key) != want:
            return False
    return True


# -- report helpers ---------------------------------------------------------------

def canonical_g6(g: Graph) -> str:
    return graph6_encode(canonical_graph(g))


def _json_value(arg):
    if isinstance(arg, tuple):
        return [_json_value(a) for a in arg]
    if isinstance(arg, dict):
        return {k: _json_value(v) for k, v in arg.items()}
    return arg


def _payload(g: Graph, violation: str, arg=None) -> dict:
    """Counterexample entry for ``g``; re-verified from its graph6 first."""
    g6 = canonical_g6(g)
    again = graph6_decode(g6)
    if not PREDICATES[violation](again, arg):
        raise AssertionError(f"counterexample {g6} for {violation} does not reproduce")
    d = {"graph6": g6, "profile": profile(again).to_dict(), "violation": violation}
    if arg is not None:
        d["arg"] = _json_value(arg)
    return d


def _witness_entry(g: Graph) -> dict:
    g6 = canonical_g6(g)
    return {"graph6": g6, "profile": profile(graph6_decode(g6)).to_dict()}


def _finish(report: CheckReport, start: float) -> CheckReport:
    report.counterexamples.sort(key=lambda c: (c["violation"], c["graph6"]))
    if report.counterexamples:
        report.outcome = COUNTEREXAMPLE
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


# -- sharded sweeps ------------------------------------------------------------------
# A visitor maps one graph to a list of JSON-able records; records from all
# shards are concatenated and sorted, so the result is schedule-independent.

def _visit_violation(g, arg):
    name, parg = arg
    return [("viol", graph6_encode(g), name)] if PREDICATES[name](g, parg) else []


def _visit_violations(g, arg):
    out = []
    for name, parg in arg:
        if PREDICATES[name](g, parg):
            out.append(("viol", graph6_encode(g), name))
    return out


def _visit_min_cc(g, bound):
    # cc >= c, so graphs with c > bound cannot reach the minimum
    if circumference(g) > bound:
        return []
    value = cc(g)
    return [("value", value, graph6_encode(g) if value <= bound else "")]


def _visit_min_dc(g, bound):
    if detour_order(g) > bound:
        return []
    value = dc(g)
    return [("value", value, graph6_encode(g) if value <= bound else "")]


def _visit_t14(g, arg):
    out = []
    if _small_circumference_not_covered(g, None):
        out.append(("viol", graph6_encode(g), "small_circumference_not_covered"))
    if circumference(g) <= 8:
        value = cc(g)
        if value < 8:
            out.append(("viol", graph6_encode(g), "cc_below"))
        elif value == 8:
            out.append(("equal", canonical_g6(g), ""))
    return out


def _visit_l15(g, arg):
    out = []
    if _lemma15_broken(g, None):
        out.append(("viol", graph6_encode(g), "girth_circumference_iff_theta"))
    if girth(g) == circumference(g):
        out.append(("equal", canonical_g6(g), ""))
    return out


def _visit_forbidden(g, arg):
    """Detour/cummerbund coverage over the {P4, 2K2}-free universe."""
    out = []
    two = is_k_connected(g, 2)
    thr = is_threshold(g)
    if thr:
        out.append(("threshold", int(two), ""))
        if thr == contains_induced(g, "C4"):
            out.append(("viol", graph6_encode(g), "threshold_mismatch"))
    if not is_detour_covered(g):
        out.append(("viol", graph6_encode(g), "not_detour_covered"))
    if two:
        out.append(("two_connected", 1, ""))
        if not is_cummerbund_covered(g):
            out.append(("viol", graph6_encode(g), "not_cummerbund_covered"))
    return out


def _visit_uncovered(g, arg):
    out = []
    if not is_detour_covered(g):
        out.append(("uncovered_detour", canonical_g6(g), ""))
    if is_k_connected(g, 2) and not is_cummerbund_covered(g):
        out.append(("uncovered_cummerbund", canonical_g6(g), ""))
    return out


def _visit_lemma6(g, arg):
    if circumference(g) <= 3 * connectivity(g) - 1 and _cummerbund_not_dominating(g, None):
        return [("viol", graph6_encode(g), "cummerbund_not_dominating")]
    return []


def _visit_witness(g, required):
    return [("match", canonical_g6(g), "")] if _matches(g, required) else []


def _visit_values(g, arg):
    """Engine values per graph, keyed by canonical form (determinism fingerprints)."""
    return [("value", canonical_g6(g),
             [circumference(g), detour_order(g), dc(g), cc(g)])]


def _visit_count(g, arg):
    return []


VISITORS: dict[str, Callable] = {
    "count": _visit_count,
    "violation": _visit_violation,
    "violations": _visit_violations,
    "min_cc": _visit_min_cc,
    "min_dc": _visit_min_dc,
    "t14": _visit_t14,
    "l15": _visit_l15,
    "forbidden": _visit_forbidden,
    "uncovered": _visit_uncovered,
    "lemma6": _visit_lemma6,
    "witness": _visit_witness,
    "values": _visit_values,
}

PREDICATES["threshold_mismatch"] = lambda g, arg: is_threshold(g) == contains_induced(g, "C4")


def _run_shard(task) -> tuple[int, list]:
    spec, visitor, arg, index, count = task
    visit = VISITORS[visitor]
    seen = 0
    records: list = []
    for g in universe(spec, index, count):
        seen += 1
        records.extend(visit(g, arg))
        g._cache.clear()
    return seen, records


def sweep(spec: UniverseSpec, visitor: str, arg=None,
          shards: int | None = None) -> tuple[int, list]:
    """Run ``visitor`` over the universe; returns (universe size, sorted records).

    ``shards`` defaults to the worker count; with more than one worker the
    shards run in a process pool.
    """
    workers = worker_count()
    count = shards or workers
    tasks = [(spec, visitor, arg, i, count) for i in range(count)]
    if workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=min(workers, count)) as pool:
            results = list(pool.map(_run_shard, tasks))
    else:
        results = [_run_shard(t) for t in tasks]
    size = sum(r[0] for r in results)
    records = sorted((rec for r in results for rec in r[1]), key=repr)
    return size, records


def _add_violations(report: CheckReport, records: list, args: dict) -> None:
    for rec in records:
        if rec[0] == "viol":
            name = rec[2]
            report.counterexamples.append(_payload(graph6_decode(rec[1]), name, args.get(name)))


def _two_connected(n: int, **kw) -> UniverseSpec:
    return UniverseSpec(n, min_connectivity=2, **kw)


def _k_connected(n: int, k: int, **kw) -> UniverseSpec:
    if k == 1:
        return UniverseSpec(n, connected=True, **kw)
    return UniverseSpec(n, min_connectivity=k, **kw)


# -- checks ------------------------------------------------------------------------

def check_T3(n_max: int = 9, sharp_max: int = 15, shards: int | None = None) -> CheckReport:
    """2-connected graphs with minimum degree >= n/3 are cummerbund covered."""
    if n_max > 10:
        raise UniverseTooLarge("check_T3 supports n_max <= 10")
    start = time.perf_counter()
    report = CheckReport("T3", {"n_max": n_max, "sharp_max": sharp_max})
    for n in range(3, n_max + 1):
        spec = _two_connected(n, min_degree=max(2, _ceil_div(n, 3)))
        size, recs = sweep(spec, "violation", ("not_cummerbund_covered", None), shards)
        report.universe.append(spec.describe())
        report.universe_size += size
        _add_violations(report, recs, {})
    sharp = []
    for n in range(9, sharp_max + 1):
        claims = {"two_connected": True, "min_degree": _ceil_div(n, 3) - 1,
                  "cummerbund_covered": False}
        g = F.remark1_family(n)
        if _family_claim_broken(g, claims):
            report.counterexamples.append(_payload(g, "family_claim", claims))
        sharp.append(n)
    report.details["sharpness_orders"] = sharp
    return _finish(report, start)


def check_T5(n_max: int = 9, sharp_max: int = 15, shards: int | None = None) -> CheckReport:
    """Connected graphs with minimum degree >= (n-2)/3 are detour covered.

    Every graph in the universe is also checked against the join duality: it
    is detour covered iff its join with K_1 is cummerbund covered.
    """
    if n_max > 10:
        raise UniverseTooLarge("check_T5 supports n_max <= 10")
    start = time.perf_counter()
    report = CheckReport("T5", {"n_max": n_max, "sharp_max": sharp_max})
    for n in range(1, n_max + 1):
        spec = UniverseSpec(n, connected=True, min_degree=_ceil_div(n - 2, 3) if n > 2 else 0)
        arg = (("not_detour_covered", None), ("join_duality", None))
        size, recs = sweep(spec, "violations", arg, shards)
        report.universe.append(spec.describe())
        report.universe_size += size
        _add_violations(report, recs, {})
    sharp = []
    for n in range(6, sharp_max + 1):
        claims = {"connected": True, "min_degree": _ceil_div(n - 2, 3) - 1,
                  "detour_covered": False}
        g = F.remark3_family(n)
        if _family_claim_broken(g, claims):
            report.counterexamples.append(_payload(g, "family_claim", claims))
        sharp.append(n)
    report.details["sharpness_orders"] = sharp
    return _finish(report, start)


def _certify(report: CheckReport, specs: Iterable[F.FamilySpec]) -> None:
    done = []
    for spec in specs:
        g = spec.graph()
        if _family_claim_broken(g, spec.claims):
            report.counterexamples.append(_payload(g, "family_claim", spec.claims))
        done.append([spec.family, list(spec.params)])
    report.details["certified"] = done


def _exhaustive_min(report: CheckReport, spec: UniverseSpec, visitor: str, bound: int,
                    below: str, shards: int | None) -> dict:
    size, recs = sweep(spec, visitor, bound, shards)
    report.universe.append(spec.describe())
    report.universe_size += size
    values = [r[1] for r in recs if r[0] == "value"]
    for r in recs:
        if r[0] == "value" and r[1] < bound:
            report.counterexamples.append(_payload(graph6_decode(r[2]), below, bound))
    observed = min(values) if values else None
    attained = sum(1 for v in values if v == bound)
    if observed is None or observed > bound:
        # nothing in the universe reaches the claimed minimum
        report.outcome = COUNTEREXAMPLE
    return {"n": spec.n, "claimed_min": bound, "observed_min": observed,
            "graphs": size, "attaining": attained}


def check_T7(k: int = 2, n_range: Sequence[int] = (7, 8, 9), family_n_max: int = 16,
             family_k_max: int = 4, shards: int | None = None) -> CheckReport:
    """Minimum cc over k-connected graphs of order n is min{n, 3k}."""
    if k < 2:
        raise InvalidParameter("the cummerbund minimum needs k >= 2")
    start = time.perf_counter()
    report = CheckReport("T7", {"k": k, "n_range": list(n_range)})
    report.details["minima"] = [
        _exhaustive_min(report, _k_connected(n, k), "min_cc", min(n, 3 * k), "cc_below", shards)
        for n in n_range if n > k]
    _certify(report, (s for s in F.catalog(family_n_max, family_k_max) if s.family == "thm7"))
    return _finish(report, start)


def check_T8(k: int = 1, n_range: Sequence[int] = (6, 7, 8, 9), family_n_max: int = 16,
             family_k_max: int = 4, shards: int | None = None) -> CheckReport:
    """Minimum dc over k-connected graphs of order n is min{n, 3k + 2}."""
    if k < 1:
        raise InvalidParameter("k must be positive")
    start = time.perf_counter()
    report = CheckReport("T8", {"k": k, "n_range": list(n_range)})
    report.details["minima"] = [
        _exhaustive_min(report, _k_connected(n, k), "min_dc", min(n, 3 * k + 2), "dc_below",
                        shards)
        for n in n_range if n > k]
    _certify(report, (s for s in F.catalog(family_n_max, family_k_max) if s.family == "thm8"))
    return _finish(report, start)


def check_T10_T12_C13(n_max: int = 8, remark_a: int = 2, remark_b: int = 5,
                      shards: int | None = None) -> CheckReport:
    """Induced-{P4, 2K2}-free and threshold graphs are covered.

    The threshold graphs are the C4-free members of the {P4, 2K2}-free
    universe, so one sweep covers all four statements; membership is decided
    by the elimination test and cross-checked against C4-freeness.
    """
    if n_max > 9:
        raise UniverseTooLarge("check_T10_T12_C13 supports n_max <= 9")
    start = time.perf_counter()
    report = CheckReport("T10_T12_C13", {"n_max": n_max, "remark_a": remark_a,
                                         "remark_b": remark_b})
    threshold = {"connected": 0, "two_connected": 0}
    two = 0
    for n in range(1, n_max + 1):
        spec = UniverseSpec(n, connected=True, induced_free=("P4", "2K2"))
        size, recs = sweep(spec, "forbidden", None, shards)
        report.universe.append(spec.describe())
        report.universe_size += size
        _add_violations(report, recs, {})
        for r in recs:
            if r[0] == "threshold":
                threshold["connected"] += 1
                threshold["two_connected"] += r[1]
            elif r[0] == "two_connected":
                two += 1
    report.details["two_connected"] = two
    report.details["threshold"] = threshold
    claims = {"two_connected": True, "p4_free": True, "c4_free": True,
              "detour_covered": False, "cummerbund_covered": False}
    sharp = []
    for a in range(1, remark_a + 1):
        for b in range(3, remark_b + 1):
            g = F.remark4_family(a, b)
            if _family_claim_broken(g, claims):
                report.counterexamples.append(_payload(g, "family_claim", claims))
            sharp.append([a, b])
    report.details["remark_family"] = sharp
    # forbidding only one of the two patterns is not enough
    single = {}
    for pat in ("P4", "2K2"):
        found = {"detour": [], "cummerbund": []}
        for n in range(1, n_max + 1):
            _, recs = sweep(UniverseSpec(n, connected=True, induced_free=(pat,)), "uncovered",
                            None, shards)
            for r in recs:
                found[r[0].split("_")[1]].append(r[1])
        single[pat] = {key: {"count": len(v), "first": min(v, default=None)}
                       for key, v in found.items()}
    report.details["single_pattern_uncovered"] = single
    return _finish(report, start)


def check_T14(n: int = 9, shards: int | None = None) -> CheckReport:
    """2-connected bipartite graphs of order n >= 9 have cc >= 8, with equality
    exactly for the seven members of the bipartite family."""
    if n < 9:
        raise InvalidParameter("the bipartite bound needs n >= 9")
    if n > 10:
        raise UniverseTooLarge("check_T14 supports n <= 10")
    start = time.perf_counter()
    report = CheckReport("T14", {"n": n})
    spec = _two_connected(n, bipartite=True)
    size, recs = sweep(spec, "t14", None, shards)
    report.universe.append(spec.describe())
    report.universe_size = size
    _add_violations(report, recs, {"cc_below": 8})
    equal = sorted({r[1] for r in recs if r[0] == "equal"})
    fam = sorted({canonical_g6(F.bipartite_family(i, n)) for i in range(1, 8)})
    report.details["equality_class"] = equal
    report.details["equality_class_size"] = len(equal)
    report.details["family"] = fam
    report.details["family_size"] = len(fam)
    report.details["match"] = equal == fam
    for g6 in sorted(set(equal) ^ set(fam)):
        report.counterexamples.append({
            "graph6": g6, "profile": profile(graph6_decode(g6)).to_dict(),
            "violation": "equality_class" if g6 in equal else "family_not_extremal"})
    return _finish(report, start)


def check_L15(n_max: int = 9, a_max: int = 5, m_max: int = 5,
              shards: int | None = None) -> CheckReport:
    """A 2-connected graph has girth = circumference iff it is a cycle or a
    uniform theta graph."""
    if n_max > 10:
        raise UniverseTooLarge("check_L15 supports n_max <= 10")
    start = time.perf_counter()
    report = CheckReport("L15", {"n_max": n_max, "a_max": a_max, "m_max": m_max})
    equal = []
    for n in range(3, n_max + 1):
        spec = _two_connected(n)
        size, recs = sweep(spec, "l15", None, shards)
        report.universe.append(spec.describe())
        report.universe_size += size
        _add_violations(report, recs, {})
        equal.append([n, sum(1 for r in recs if r[0] == "equal")])
    report.details["girth_equals_circumference"] = equal
    thetas = []
    for a in range(2, a_max + 1):
        for m in range(2, m_max + 1):
            g = F.uniform_theta(a, m)
            claims = {"girth": 2 * a, "circumference": 2 * a}
            if _family_claim_broken(g, claims):
                report.counterexamples.append(_payload(g, "family_claim", claims))
            thetas.append([a, m])
    report.details["uniform_thetas"] = thetas
    return _finish(report, start)


T16_PARTS = {
    # part: (girth bound, claimed minimum, gating orders, informational orders, family)
    "g4": (4, 6, (8, 9), (6, 7), "thm16_g4"),
    "g5": (5, 8, (10, 11), (), ("thm16_g5_even", "thm16_g5_odd")),
    "g6even": (6, 8, (12,), (), "thm16_g6_even"),
    "g6odd": (6, 9, (13,), (), "thm16_g6_odd"),
}


def check_T16(part: str, n_range: Sequence[int] | None = None, family_n_max: int = 20,
              shards: int | None = None) -> CheckReport:
    """Minimum cc of 2-connected graphs under a girth bound.

    For ``g4`` the orders 6 and 7 are swept as well but only reported under
    ``details["informational"]``; they never decide the outcome.
    """
    if part not in T16_PARTS:
        raise InvalidParameter(f"part must be one of {sorted(T16_PARTS)}")
    g, bound, gating, info, fams = T16_PARTS[part]
    n_range = tuple(gating if n_range is None else n_range)
    start = time.perf_counter()
    report = CheckReport("T16", {"part": part, "n_range": list(n_range)})
    report.details["minima"] = [
        _exhaustive_min(report, _two_connected(n, min_girth=g), "min_cc", bound, "cc_below",
                        shards)
        for n in n_range]
    informational = []
    for n in info:
        side = CheckReport("T16-info", {})
        row = _exhaustive_min(side, _two_connected(n, min_girth=g), "min_cc", bound, "cc_below",
                              shards)
        informational.append(row)
    if informational:
        report.details["informational"] = informational
    fams = (fams,) if isinstance(fams, str) else fams
    _certify(report, (s for s in F.catalog(family_n_max) if s.family in fams
                      and s.params[0] <= family_n_max))
    return _finish(report, start)


def _random_graph(rng: random.Random, n: int, p: float) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return from_adjacency(rows)


def random_graphs(seed: int, count: int, n_min: int, n_max: int) -> list[Graph]:
    """Seeded G(n, p) sample with n and p drawn uniformly (a test utility)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(_random_graph(rng, n, rng.uniform(0.15, 0.85)))
    return out


def check_L4(n_max: int = 7, random_count: int = 300, random_n_max: int = 12, seed: int = 4,
             shards: int | None = None) -> CheckReport:
    """dc(G) = cc(G v K_1) - 1 and the connectivity shift, exhaustively and at random."""
    start = time.perf_counter()
    report = CheckReport("L4", {"n_max": n_max, "random_count": random_count,
                                "random_n_max": random_n_max}, seed=seed)
    for n in range(1, n_max + 1):
        spec = UniverseSpec(n)
        size, recs = sweep(spec, "violation", ("join_duality_numbers", None), shards)
        report.universe.append(spec.describe())
        report.universe_size += size
        _add_violations(report, recs, {})
    for g in random_graphs(seed, random_count, 1, random_n_max):
        if _lemma4_broken(g, None):
            report.counterexamples.append(_payload(g, "join_duality_numbers"))
    report.details["random_graphs"] = random_count
    return _finish(report, start)


def check_lemma_suite(n_max: int = 8, shards: int | None = None) -> CheckReport:
    """The four domination lemmas plus the join duality, quantified over all
    longest cycles and paths.

    Every longest cycle (path) is enumerated; the conclusions depend only on
    its vertex set, and a hamiltonian (traceable) graph is settled at once
    because all of its longest cycles (paths) span the vertex set.
    """
    if n_max > 9:
        raise UniverseTooLarge("check_lemma_suite supports n_max <= 9")
    start = time.perf_counter()
    report = CheckReport("LEMMAS", {"n_max": n_max})
    sizes = {}

    def run(label, spec, visitor, arg):
        size, recs = sweep(spec, visitor, arg, shards)
        report.universe.append(dict(spec.describe(), lemma=label))
        report.universe_size += size
        sizes[label] = sizes.get(label, 0) + size
        _add_violations(report, recs, {})

    for n in range(3, n_max + 1):
        run("L2", _two_connected(n, min_degree=max(2, _ceil_div(n, 3))), "violation",
            ("cummerbund_leaves_mixed", None))
        run("L6", _two_connected(n), "lemma6", None)
        run("L11", _two_connected(n, induced_free=("2K2",)), "violation",
            ("cummerbund_not_dominating", None))
    for n in range(1, n_max + 1):
        run("L9", UniverseSpec(n, connected=True, induced_free=("2K2",)), "violation",
            ("detour_not_dominating", None))
    sub = check_L4(min(n_max, 7), 0, shards=shards)
    report.counterexamples.extend(sub.counterexamples)
    sizes["L4"] = sub.universe_size
    report.universe_size += sub.universe_size
    report.details["graphs_per_lemma"] = sizes
    return _finish(report, start)


# -- witness search ------------------------------------------------------------------

def _exhaustive_spec(wp: WitnessProfile) -> UniverseSpec:
    req = wp.required
    k = req.get("min_kappa", 0)
    return UniverseSpec(wp.order, connected=k >= 1, min_connectivity=k if k >= 2 else 0,
                        induced_free=tuple(req.get("induced_free", ())),
                        bipartite=bool(req.get("bipartite", False)))


def _local_search(wp: WitnessProfile, seed: int) -> tuple[Graph | None, int, float]:
    """Edge-flip descent on the violation score with random restarts and
    sideways moves; returns (witness or None, evaluations, best score)."""
    rng = random.Random(seed)
    n = wp.order
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    evals = 0
    best_score = math.inf

    def score(g):
        nonlocal evals
        evals += 1
        return _violations(g, wp.required)

    while evals < wp.budget:
        g = _random_graph(rng, n, rng.uniform(0.25, 0.6))
        s = score(g)
        stall = 0
        while evals < wp.budget and stall < 200:
            best_score = min(best_score, s)
            if s == 0:
                return g, evals, 0.0
            u, v = rng.choice(pairs)
            rows = list(g.adj)
            rows[u] ^= 1 << v
            rows[v] ^= 1 << u
            h = Graph(n, rows)
            t = score(h)
            if t <= s:
                stall = stall + 1 if t == s else 0
                g, s = h, t
            else:
                stall += 1
    return None, evals, best_score


def witness_search(wp: WitnessProfile, seed: int = 0, shards: int | None = None) -> CheckReport:
    """All witnesses of an exhaustive profile, or one from a seeded local search."""
    start = time.perf_counter()
    report = CheckReport(f"witness-{wp.name}", wp.describe())
    if wp.mode == "exhaustive":
        if wp.order > 9:
            raise UniverseTooLarge("exhaustive witness search supports order <= 9")
        spec = _exhaustive_spec(wp)
        size, recs = sweep(spec, "witness", wp.required, shards)
        report.universe.append(spec.describe())
        report.universe_size = size
        found = sorted({r[1] for r in recs})
        report.details["witnesses"] = [_witness_entry(graph6_decode(g6)) for g6 in found]
        report.outcome = PASS if found else ABSENT
    elif wp.mode == "randomized":
        report.seed = seed
        g, evals, best = _local_search(wp, seed)
        report.universe_size = evals
        report.details["evaluations"] = evals
        report.details["best_score"] = best
        if g is None:
            report.outcome = PARTIAL
            report.details["witnesses"] = []
        else:
            report.details["witnesses"] = [_witness_entry(g)]
    else:
        raise InvalidParameter(f"unknown search mode {wp.mode!r}")
    return _finish(report, start)


def _chain(g: Graph, u: int, v: int, upto: int) -> list[Graph]:
    """Graphs of orders |g| + 1 .. upto from replacing uv by longer and longer paths."""
    out = []
    while g.n < upto:
        g = subdivide_edge(g, u, v)
        out.append(g)
        v = g.n - 1      # keep subdividing the edge next to u
    return out


def check_T1a(order: int = 7, upto: int = 12, shards: int | None = None) -> CheckReport:
    """Exhaustive (a)-profile witnesses, then the subdivision argument.

    For every witness and edge ``uv`` the edge is replaced by paths of length
    2, 3, ... up to order ``upto``.  An edge is *eligible* when every graph
    of this chain is 2-connected, detour covered and not cummerbund covered.
    The check passes iff the order-``order`` witness set is nonempty and some
    witness has an eligible edge; chains that keep the profile at the first
    step only are listed under ``details["broken_chains"]``.
    """
    start = time.perf_counter()
    wp = WitnessProfile("a", order, PROFILE_A.required)
    found = witness_search(wp, shards=shards)
    report = CheckReport("T1a", {"order": order, "upto": upto})
    report.universe = found.universe
    report.universe_size = found.universe_size
    witnesses = found.details["witnesses"]
    report.details["witnesses"] = witnesses
    eligible, broken = [], []
    for w in witnesses:
        g = graph6_decode(w["graph6"])
        for u, v in g.edges():
            chain = _chain(g, u, v, upto)
            if not chain or _subdivision_broken(chain[0], None):
                continue
            bad = next((h.n for h in chain if _subdivision_broken(h, None)), None)
            if bad is None:
                traceable = all(detour_order(h) == h.n for h in chain)
                long_cycle = all(circumference(h) == h.n - 1 for h in chain)
                eligible.append({"graph6": w["graph6"], "edge": [u, v],
                                 "traceable": traceable, "circumference_n_minus_1": long_cycle})
            else:
                broken.append({"graph6": w["graph6"], "edge": [u, v], "fails_at": bad})
    report.details["eligible_edges"] = eligible
    report.details["broken_chains"] = broken
    if not witnesses or not eligible:
        report.outcome = ABSENT
    return _finish(report, start)


# -- registry --------------------------------------------------------------------------

GATING: dict[str, Callable[..., list[CheckReport]]] = {
    "T1a": lambda shards=None: [check_T1a(shards=shards)],
    "T3": lambda shards=None: [check_T3(9, shards=shards)],
    "T5": lambda shards=None: [check_T5(9, shards=shards)],
    "L4": lambda shards=None: [check_L4(shards=shards)],
    "T7": lambda shards=None: [check_T7(2, (7, 8, 9), shards=shards)],
    "T8": lambda shards=None: [check_T8(1, (6, 7, 8, 9), shards=shards)],
    "T10_T12_C13": lambda shards=None: [check_T10_T12_C13(8, shards=shards)],
    "T14": lambda shards=None: [check_T14(9, shards=shards)],
    "L15": lambda shards=None: [check_L15(9, shards=shards)],
    "T16": lambda shards=None: [check_T16(p, shards=shards) for p in T16_PARTS],
    "LEMMAS": lambda shards=None: [check_lemma_suite(8, shards=shards)],
}

EXTENDED: dict[str, Callable[..., list[CheckReport]]] = {
    "T3": lambda shards=None: [check_T3(10, shards=shards)],
    "T5": lambda shards=None: [check_T5(10, shards=shards)],
    "T7": lambda shards=None: [check_T7(3, (10,), shards=shards)],
    "T8": lambda shards=None: [check_T8(2, (9, 10), shards=shards)],
    "T10_T12_C13": lambda shards=None: [check_T10_T12_C13(9, shards=shards)],
    "T14": lambda shards=None: [check_T14(10, shards=shards)],
    "L15": lambda shards=None: [check_L15(10, shards=shards)],
    "T16": lambda shards=None: [check_T16("g4", (8, 9, 10), shards=shards),
                                check_T16("g5", (10, 11), shards=shards),
                                check_T16("g6even", (12,), shards=shards),
                                check_T16("g6odd", (13,), shards=shards)],
    "LEMMAS": lambda shards=None: [check_lemma_suite(9, shards=shards)],
    "T1b": lambda shards=None: [witness_search(PROFILE_B, seed=1)],
    "T1c": lambda shards=None: [witness_search(PROFILE_C, seed=1)],
}


def run_check(check_id: str, tier: str = "gating", shards: int | None = None) -> list[CheckReport]:
    table = GATING if tier == "gating" else EXTENDED
    if tier not in ("gating", "extended"):
        raise InvalidParameter(f"unknown tier {tier!r}")
    if check_id == "all-gating":
        return [r for key in GATING for r in GATING[key](shards=shards)]
    if check_id not in table:
        raise InvalidParameter(f"unknown check {check_id!r} for tier {tier}; "
                               f"known: {sorted(table)}")
    return table[check_id](shards=shards)
