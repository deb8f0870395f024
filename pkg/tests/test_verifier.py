from __future__ import annotations

import json

import pytest

from longcycle import verifier as V
from longcycle.enumeration import UniverseSpec
from longcycle.errors import InvalidParameter, UniverseTooLarge
from longcycle.families import cycle, mixed_join, path
from longcycle.formats import graph6_decode
from longcycle.invariants import is_cummerbund_covered


def test_report_json_roundtrip_and_timing_flag():
    r = V.CheckReport("X", {"n": 3}, universe_size=4, seed=2, elapsed_ms=17)
    d = json.loads(r.to_json())
    assert d["elapsed_ms"] == 17 and d["seed"] == 2
    assert "elapsed_ms" not in json.loads(r.to_json(timing=False))
    assert V.CheckReport.from_dict(d) == r


def test_false_claim_is_caught_and_self_audited():
    report = V.CheckReport("probe", {})
    _, recs = V.sweep(UniverseSpec(5, connected=True), "violation",
                      ("not_cummerbund_covered", None))
    V._add_violations(report, recs, {})
    V._finish(report, 0.0)
    assert report.outcome == V.COUNTEREXAMPLE
    for c in report.counterexamples:
        g = graph6_decode(c["graph6"])
        assert not is_cummerbund_covered(g) and c["profile"]["order"] == 5


def test_payload_rejects_non_reproducing_graph():
    with pytest.raises(AssertionError):
        V._payload(cycle(5), "not_cummerbund_covered")


def test_sweep_is_shard_independent():
    spec = UniverseSpec(6, connected=True)
    base = V.sweep(spec, "values", None, shards=1)
    assert V.sweep(spec, "values", None, shards=3) == base
    assert base[0] == 112


def test_min_degree_coverage_small():
    r3 = V.check_T3(7, sharp_max=11)
    r5 = V.check_T5(7, sharp_max=11)
    assert r3.passed and r5.passed
    assert r3.details["sharpness_orders"] == [9, 10, 11]


def test_minimum_checks_small():
    r7 = V.check_T7(2, (7, 8), family_n_max=12, family_k_max=3)
    r8 = V.check_T8(1, (6, 7), family_n_max=12, family_k_max=3)
    assert r7.passed and r8.passed
    assert [m["observed_min"] for m in r7.details["minima"]] == [6, 6]
    assert [m["observed_min"] for m in r8.details["minima"]] == [5, 5]


def test_wrong_minimum_is_reported():
    report = V.CheckReport("probe", {})
    row = V._exhaustive_min(report, UniverseSpec(6, min_connectivity=2), "min_cc", 7,
                            "cc_below", None)
    assert row["observed_min"] < 7
    assert report.counterexamples and report.counterexamples[0]["violation"] == "cc_below"


def test_forbidden_and_threshold_small():
    r = V.check_T10_T12_C13(6, remark_a=1, remark_b=3)
    assert r.passed and r.details["remark_family"] == [[1, 3]]
    assert r.details["single_pattern_uncovered"]["P4"]["detour"]["count"] > 0


def test_bipartite_characterization():
    r = V.check_T14(9)
    assert r.passed and r.details["match"] and r.details["equality_class_size"] == 7
    with pytest.raises(InvalidParameter):
        V.check_T14(8)


def test_girth_equals_circumference_small():
    r = V.check_L15(7, a_max=3, m_max=3)
    assert r.passed
    # C_n plus every theta(a^m), m >= 3, with n = 2 + m(a - 1)
    expected = {n: 1 + sum(1 for a in range(2, n) for m in range(3, n)
                           if 2 + m * (a - 1) == n) for n in range(3, 8)}
    assert dict(map(tuple, r.details["girth_equals_circumference"])) == expected


def test_girth_bound_minimum_small():
    r = V.check_T16("g4", (8,), family_n_max=12)
    assert r.passed and r.details["minima"][0]["observed_min"] == 6
    assert {row["n"] for row in r.details["informational"]} == {6, 7}
    with pytest.raises(InvalidParameter):
        V.check_T16("g7")


def test_join_duality_and_lemmas_small():
    assert V.check_L4(5, random_count=40, random_n_max=9).passed
    r = V.check_lemma_suite(6)
    assert r.passed and set(r.details["graphs_per_lemma"]) == {"L2", "L6", "L11", "L9", "L4"}


def test_witness_search_modes():
    r = V.witness_search(V.PROFILE_A)
    assert r.passed and r.details["witnesses"]
    for w in r.details["witnesses"]:
        p = w["profile"]
        assert p["detour_covered"] and not p["cummerbund_covered"] and p["kappa"] >= 2
    small = V.WitnessProfile("a", 5, V.PROFILE_A.required)
    assert V.witness_search(small).outcome == V.ABSENT
    tight = V.WitnessProfile("b", 12, V.PROFILE_B.required, "randomized", 30)
    out = V.witness_search(tight, seed=3)
    assert out.outcome == V.PARTIAL and out.seed == 3 and out.universe_size >= 30
    with pytest.raises(UniverseTooLarge):
        V.witness_search(V.WitnessProfile("a", 10, {}))


def test_subdivision_argument():
    r = V.check_T1a(7, upto=10)
    assert r.passed and r.details["eligible_edges"]


def test_run_check_registry():
    assert set(V.GATING) == {"T1a", "T3", "T5", "L4", "T7", "T8", "T10_T12_C13", "T14", "L15",
                             "T16", "LEMMAS"}
    with pytest.raises(InvalidParameter):
        V.run_check("nope")
    with pytest.raises(InvalidParameter):
        V.run_check("T3", tier="huge")


def test_family_claim_detection():
    claims = {"cc": 5, "two_connected": True}
    assert V._claim_mismatches(mixed_join(2, 2, 4), {"cc": 6}) == {}
    assert set(V._claim_mismatches(path(4), claims)) == {"cc", "two_connected"}
