"""Acceptance criteria 1-12, each at its stated scale and tolerance.

Every criterion records one PASS/FAIL line, repeated in the terminal summary.
The runners below return (ok, note, fingerprint); the fingerprint is the
timing-free JSON that criterion 12 compares across thread and shard counts.
"""

from __future__ import annotations

import json
import os
import time

import pytest

from longcycle import verifier as V
from longcycle.enumeration import UniverseSpec
from longcycle.formats import graph6_decode
from oracles import GRAPH_COUNTS, dp_values, labeled_class_count

pytestmark = pytest.mark.slow

BUDGET_S = {1: 600, 2: 900, 3: 1800, 4: 600, 5: 3600, 6: 1800, 7: 1200, 8: 3600, 9: 1800,
            10: 900, 11: 1200}


def _fingerprint(reports) -> str:
    return json.dumps([r.to_dict(timing=False) for r in reports], sort_keys=True)


def run_1(shards=None):
    records = []
    for n in range(1, 9):
        _, recs = V.sweep(UniverseSpec(n, connected=True), "values", None, shards)
        records += recs
    sample = V.random_graphs(seed=1, count=500, n_min=9, n_max=10)
    for g in sample:
        records += V.VISITORS["values"](g, None)
    wrong = []
    for _, g6, vals in records:
        g = graph6_decode(g6)
        if tuple(vals) != dp_values(g.adj, g.n):
            wrong.append(g6)
    ok = len(records) == 12113 + 500 and not wrong
    return ok, f"{len(records)} graphs compared, {len(wrong)} mismatches", json.dumps(records)


def run_2(shards=None):
    counts = {n: V.sweep(UniverseSpec(n), "count", None, shards)[0] for n in range(1, 10)}
    small = {n: labeled_class_count(n) for n in range(1, 8)} if shards is None else {}
    ok = all(counts[n] == GRAPH_COUNTS[n] for n in range(1, 10))
    ok = ok and all(counts[n] == c for n, c in small.items())
    return ok, f"counts {[counts[n] for n in range(1, 10)]}", json.dumps(counts, sort_keys=True)


def run_3(shards=None):
    reports = [V.check_T3(9, 15, shards=shards), V.check_T5(9, 15, shards=shards)]
    ok = (all(r.passed for r in reports)
          and reports[0].details["sharpness_orders"] == list(range(9, 16))
          and reports[1].details["sharpness_orders"] == list(range(6, 16)))
    note = ", ".join(f"{r.check_id} {r.outcome} over {r.universe_size}" for r in reports)
    return ok, note, _fingerprint(reports)


def run_4(shards=None):
    r = V.check_L4(7, 300, 12, shards=shards)
    return r.passed, f"L4 {r.outcome} over {r.universe_size} + 300 random", _fingerprint([r])


def _minima_ok(report) -> bool:
    return all(m["observed_min"] == m["claimed_min"] for m in report.details["minima"])


def run_5(shards=None):
    t7 = V.check_T7(2, (7, 8, 9), 16, 4, shards=shards)
    t8 = V.check_T8(1, (6, 7, 8, 9), 16, 4, shards=shards)
    ok = (t7.passed and t8.passed and _minima_ok(t7) and _minima_ok(t8)
          and len(t7.details["certified"]) > 0 and len(t8.details["certified"]) > 0)
    note = (f"T7 minima {[m['observed_min'] for m in t7.details['minima']]}, "
            f"T8 minima {[m['observed_min'] for m in t8.details['minima']]}, "
            f"{len(t7.details['certified']) + len(t8.details['certified'])} constructors certified")
    return ok, note, _fingerprint([t7, t8])


def run_6(shards=None):
    r = V.check_T14(9, shards=shards)
    ok = r.passed and r.details["match"] and r.details["equality_class_size"] == 7
    return ok, (f"{r.universe_size} graphs, equality class {r.details['equality_class_size']}, "
                f"match {r.details['match']}"), _fingerprint([r])


def run_7(shards=None):
    r = V.check_L15(9, shards=shards)
    return r.passed, f"L15 {r.outcome} over {r.universe_size}", _fingerprint([r])


def run_8(shards=None):
    reports = [V.check_T16(p, shards=shards) for p in V.T16_PARTS]
    wanted = {("g4", 8): 6, ("g5", 10): 8, ("g6even", 12): 8, ("g6odd", 13): 9}
    seen = {(r.params["part"], m["n"]): m["observed_min"]
            for r in reports for m in r.details["minima"]}
    families = {f for r in reports for f, _ in r.details["certified"]}
    ok = (all(r.passed for r in reports) and all(seen.get(k) == v for k, v in wanted.items())
          and len(families) == 5)
    note = ", ".join(f"{p} n={n}: {seen.get((p, n))}" for p, n in wanted)
    return ok, note, _fingerprint(reports)


def run_9(shards=None):
    r = V.check_lemma_suite(8, shards=shards)
    return r.passed, f"{r.details['graphs_per_lemma']}", _fingerprint([r])


def run_10(shards=None):
    r = V.check_T10_T12_C13(8, 2, 5, shards=shards)
    return r.passed, (f"{r.universe_size} graphs, threshold {r.details['threshold']}, "
                      f"remark family {len(r.details['remark_family'])} members"), _fingerprint([r])


def run_11(shards=None):
    r = V.check_T1a(7, 12, shards=shards)
    ok = r.passed and bool(r.details["witnesses"]) and bool(r.details["eligible_edges"])
    return ok, (f"{len(r.details['witnesses'])} witnesses, "
                f"{len(r.details['eligible_edges'])} eligible edges"), _fingerprint([r])


RUNNERS = {k: globals()[f"run_{k}"] for k in range(1, 12)}
FINGERPRINTS: dict[int, str] = {}


@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number, criterion):
    start = time.perf_counter()
    ok, note, fp = RUNNERS[number]()
    elapsed = time.perf_counter() - start
    FINGERPRINTS[number] = fp
    within = elapsed <= BUDGET_S[number]
    assert criterion(number, ok and within, f"{note} [{elapsed:.0f}s / {BUDGET_S[number]}s]")


def test_criterion_12_determinism(criterion, monkeypatch):
    missing = [k for k in RUNNERS if k not in FINGERPRINTS]
    for k in missing:
        FINGERPRINTS[k] = RUNNERS[k]()[2]
    differ = []
    for threads, shards in ((1, 4), (8, 8)):
        monkeypatch.setenv("LONGCYCLE_THREADS", str(threads))
        for k, run in RUNNERS.items():
            if run(shards)[2] != FINGERPRINTS[k]:
                differ.append(f"{k}@{threads}t/{shards}s")
    assert criterion(12, not differ,
                     "identical JSON across 1/8 threads and 1/4/8 shards" if not differ
                     else f"differences: {differ}")
