from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from longcycle.cli import EXIT_FAIL, EXIT_FORMAT, EXIT_OK, EXIT_PARTIAL, EXIT_USAGE, run
from longcycle.formats import graph6_decode


def call(*argv: str, stdin: str | None = None) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = run(list(argv), out, err)
        finally:
            sys.stdin = old
    else:
        code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_invariant_on_c5():
    code, out, _ = call("invariant", "--json", stdin="Dhc\n")
    rec = json.loads(out)
    assert code == EXIT_OK
    assert rec["profile"]["circumference"] == rec["profile"]["dc"] == rec["profile"]["cc"] == 5


def test_invariant_table_sets_and_flags(tmp_path):
    f = tmp_path / "graphs.g6"
    f.write_text("C~\nDhc\n")
    code, out, _ = call("invariant", str(f), "--sets", "--flags")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 2
    assert "cc_set={0,1,2,3}" in lines[0] and "threshold=True" in lines[0]
    assert "girth=5" in lines[1] and "threshold=False" in lines[1]


def test_invariant_forest_girth():
    _, out, _ = call("invariant", stdin="Bg\n")
    assert "girth=inf" in out and "cc=0" in out


def test_malformed_input_exit_65():
    code, _, err = call("invariant", stdin="C~\nD!c\n")
    assert code == EXIT_FORMAT and "offset" in err


def test_budget_exit_2():
    petersen = "IheA@GUAo"
    code, _, err = call("invariant", "--budget", "2", stdin=petersen + "\n")
    assert code == EXIT_PARTIAL and "budget" in err


def test_usage_errors_exit_64():
    assert call("nonsense")[0] == EXIT_USAGE
    assert call("generate", "theta", "x,y")[0] == EXIT_USAGE
    assert call("generate", "C", "2")[0] == EXIT_USAGE
    assert call("generate", "theta", "1,1,3")[0] == EXIT_USAGE
    assert call("check", "T99")[0] == EXIT_USAGE
    assert call("enumerate", "--n", "12")[0] == EXIT_USAGE


def test_generate_pipes_into_invariant():
    code, out, _ = call("generate", "theta", "4,4,3,3")
    g = graph6_decode(out.strip())
    assert code == EXIT_OK and g.n == 12
    _, prof, _ = call("invariant", "--json", stdin=out)
    d = json.loads(prof)["profile"]
    assert d["girth"] == 6 and d["cc"] == 8


def test_generate_edge_list():
    code, out, _ = call("generate", "bipartite", "1,9", "--format", "edge-list")
    lines = out.splitlines()
    assert code == EXIT_OK and lines[0] == "9 10" and len(lines) == 11


def test_enumerate_stream_and_count():
    code, out, _ = call("enumerate", "--n", "5", "--connected")
    assert code == EXIT_OK and len(out.split()) == 21
    assert call("enumerate", "--n", "6", "--count-only")[1].strip() == "156"
    parts = [call("enumerate", "--n", "6", "--shard", f"{i}/3")[1].split() for i in range(3)]
    assert sum(map(len, parts)) == 156
    assert call("enumerate", "--n", "6", "--induced-free", "P4", "--count-only")[1].strip() == "66"


def test_check_json_report():
    code, out, _ = call("check", "T14", "--n", "9", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["outcome"] == "pass" and rep["universe_size"] > 0
    assert set(rep) >= {"check_id", "params", "universe_size", "outcome", "counterexamples",
                        "elapsed_ms"}


def test_check_summary_line():
    code, out, _ = call("check", "T10_T12_C13", "--n", "6")
    assert code == EXIT_OK and out.startswith("T10_T12_C13") and "outcome=pass" in out


def test_search_profile_a_small_order_absent():
    code, out, _ = call("search", "a", "--n", "5", "--json")
    assert code == EXIT_FAIL and json.loads(out)["outcome"] == "absent"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "longcycle", "generate", "K", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "Bw"
    proc = subprocess.run([sys.executable, "-m", "longcycle", "invariant"], input="Dhc\n",
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "cc=5" in proc.stdout
