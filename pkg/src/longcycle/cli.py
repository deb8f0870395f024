"""Command-line front end.

Subcommands: ``invariant``, ``generate``, ``enumerate``, ``check`` and
``search``.  Exit codes: 0 pass, 1 counterexample (or no witness exists),
2 partial result or exhausted budget, 64 usage error, 65 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import families as F
from . import verifier as V
from .enumeration import UniverseSpec, count, shard
from .errors import FormatError, GraphError, InvalidParameter, SearchTimeout
from .formats import edge_list_encode, graph6_encode, read_graph6_lines
from .graph import Graph, is_bipartite
from .invariants import (InvariantProfile, connectivity, cummerbund_cover_set,
                         detour_cover_set, detour_order, girth, longest_cycle,
                         is_cummerbund_covered, is_detour_covered)
from .recognition import contains_induced, is_claw_free, is_threshold, is_uniform_theta

EXIT_OK, EXIT_FAIL, EXIT_PARTIAL, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _shard(text: str) -> tuple[int, int]:
    try:
        i, m = (int(x) for x in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i/m, got {text!r}")
    return i, m


# -- families reachable from `generate` ------------------------------------------

def _one(f):
    def build(p):
        if len(p) != 1:
            raise InvalidParameter("expected one parameter")
        return f(p[0])
    return build


def _two(f):
    def build(p):
        if len(p) != 2:
            raise InvalidParameter("expected two parameters")
        return f(*p)
    return build


def _mixed(p):
    if len(p) != 3:
        raise InvalidParameter("mixed_join takes k,q,m")
    return F.mixed_join(*p)


GENERATORS = {
    "K": _one(F.complete_graph),
    "C": _one(F.cycle),
    "P": _one(F.path),
    "qK2": _one(F.matching),
    "empty": _one(F.empty_graph),
    "mixed_join": _mixed,
    "remark1": _one(F.remark1_family),
    "remark3": _one(F.remark3_family),
    "remark4": _two(F.remark4_family),
    "theta": F.theta,
    "uniform_theta": _two(F.uniform_theta),
    "thm16_g4": _one(F.thm16_girth4),
    "thm16_g5_even": _one(F.thm16_girth5_even),
    "thm16_g5_odd": _one(F.thm16_girth5_odd),
    "thm16_g6_even": _one(F.thm16_girth6_even),
    "thm16_g6_odd": _one(F.thm16_girth6_odd),
    "bipartite": _two(F.bipartite_family),
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="longcycle", description="Detour and cummerbund covering numbers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    inv = sub.add_parser("invariant", help="profile every graph6 line of the input")
    inv.add_argument("input", nargs="?", default="-", help="graph6 file (default: stdin)")
    inv.add_argument("--json", action="store_true")
    inv.add_argument("--sets", action="store_true", help="also print the cover sets")
    inv.add_argument("--flags", action="store_true", help="also print recognition flags")
    inv.add_argument("--budget", type=int, default=None, help="node-expansion cap per search")

    gen = sub.add_parser("generate", help="print a family member")
    gen.add_argument("family", choices=sorted(GENERATORS))
    gen.add_argument("params", type=_ints, help="comma-separated parameters")
    gen.add_argument("--format", choices=("graph6", "edge-list"), default="graph6")

    en = sub.add_parser("enumerate", help="stream one graph per isomorphism class")
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--connected", action="store_true")
    en.add_argument("--k", type=int, default=0, help="minimum connectivity")
    en.add_argument("--bipartite", action="store_true")
    en.add_argument("--girth", type=int, default=0, help="lower bound on the girth")
    en.add_argument("--induced-free", default="", help="comma-separated pattern names")
    en.add_argument("--min-degree", type=int, default=0)
    en.add_argument("--max-edges", type=int, default=None)
    en.add_argument("--shard", type=_shard, default=(0, 1))
    en.add_argument("--count-only", action="store_true")

    ch = sub.add_parser("check", help="run a verification check by id (or all-gating)")
    ch.add_argument("check_id")
    ch.add_argument("--n", type=int, default=None)
    ch.add_argument("--k", type=int, default=None)
    ch.add_argument("--part", default=None, help="part of T16 (g4, g5, g6even, g6odd)")
    ch.add_argument("--tier", choices=("gating", "extended"), default="gating")
    ch.add_argument("--shards", type=int, default=None)
    ch.add_argument("--json", action="store_true")

    se = sub.add_parser("search", help="witness search for a named profile")
    se.add_argument("profile", choices=("a", "b", "c"))
    se.add_argument("--n", type=int, default=None, help="target order")
    se.add_argument("--seed", type=int, default=0)
    se.add_argument("--budget", type=int, default=None, help="profile evaluations (b, c)")
    se.add_argument("--json", action="store_true")
    return p


# -- subcommands ------------------------------------------------------------------------

def _read_input(name: str) -> list[str]:
    if name == "-":
        return sys.stdin.read().splitlines(keepends=True)
    with open(name, encoding="ascii") as f:
        return f.read().splitlines(keepends=True)


def _set_text(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def _flags(g: Graph) -> dict:
    return {
        "threshold": is_threshold(g),
        "claw_free": is_claw_free(g),
        "p4_free": not contains_induced(g, "P4"),
        "c4_free": not contains_induced(g, "C4"),
        "2k2_free": not contains_induced(g, "2K2"),
        "uniform_theta": is_uniform_theta(g)[0],
    }


def _profile(g: Graph, budget: int | None) -> InvariantProfile:
    w = longest_cycle(g, budget)
    c = 0 if w is None else w.length
    ccs = cummerbund_cover_set(g, budget)
    dcs = detour_cover_set(g, budget)
    return InvariantProfile(
        order=g.n, size=g.size, kappa=connectivity(g), girth=girth(g), circumference=c,
        detour_order=detour_order(g, budget), dc=len(dcs), cc=len(ccs),
        detour_covered=is_detour_covered(g), cummerbund_covered=is_cummerbund_covered(g),
        bipartite=is_bipartite(g))


def cmd_invariant(args, out: TextIO) -> int:
    for g in read_graph6_lines(_read_input(args.input)):
        d = _profile(g, args.budget).to_dict()
        if args.json:
            rec = {"graph6": graph6_encode(g), "profile": d}
            if args.sets:
                rec["dc_set"] = sorted(detour_cover_set(g))
                rec["cc_set"] = sorted(cummerbund_cover_set(g))
            if args.flags:
                rec["flags"] = _flags(g)
            out.write(json.dumps(rec, sort_keys=True) + "\n")
            continue
        parts = [graph6_encode(g)]
        parts += [f"{k}={'inf' if v is None and k == 'girth' else v}" for k, v in d.items()]
        if args.sets:
            parts.append(f"dc_set={_set_text(detour_cover_set(g))}")
            parts.append(f"cc_set={_set_text(cummerbund_cover_set(g))}")
        if args.flags:
            parts += [f"{k}={v}" for k, v in _flags(g).items()]
        out.write(" ".join(parts) + "\n")
    return EXIT_OK


def cmd_generate(args, out: TextIO) -> int:
    g = GENERATORS[args.family](args.params)
    out.write((graph6_encode(g) + "\n") if args.format == "graph6" else edge_list_encode(g))
    return EXIT_OK


def cmd_enumerate(args, out: TextIO) -> int:
    spec = UniverseSpec(args.n, connected=args.connected, min_connectivity=args.k,
                        bipartite=args.bipartite, min_girth=args.girth,
                        induced_free=tuple(p for p in args.induced_free.split(",") if p),
                        min_degree=args.min_degree, max_edges=args.max_edges)
    i, m = args.shard
    if args.count_only:
        out.write(f"{count(spec, i, m)}\n")
    else:
        for g in shard(spec, i, m):
            out.write(graph6_encode(g) + "\n")
    return EXIT_OK


def _check_reports(args) -> list:
    cid, n, k = args.check_id, args.n, args.k
    if n is None and k is None and args.part is None:
        return V.run_check(cid, args.tier, args.shards)
    sh = args.shards
    if cid in ("T3", "T5", "L15", "T10_T12_C13"):
        fn = {"T3": V.check_T3, "T5": V.check_T5, "L15": V.check_L15,
              "T10_T12_C13": V.check_T10_T12_C13}[cid]
        return [fn(n, shards=sh)]
    if cid == "LEMMAS":
        return [V.check_lemma_suite(n, shards=sh)]
    if cid == "L4":
        return [V.check_L4(n, shards=sh)]
    if cid == "T7":
        k = 2 if k is None else k
        return [V.check_T7(k, [n] if n else (7, 8, 9), shards=sh)]
    if cid == "T8":
        k = 1 if k is None else k
        return [V.check_T8(k, [n] if n else (6, 7, 8, 9), shards=sh)]
    if cid == "T14":
        return [V.check_T14(9 if n is None else n, shards=sh)]
    if cid == "T16":
        parts = [args.part] if args.part else list(V.T16_PARTS)
        return [V.check_T16(p, [n] if n else None, shards=sh) for p in parts]
    if cid == "T1a":
        return [V.check_T1a(7 if n is None else n, shards=sh)]
    raise InvalidParameter(f"check {cid!r} takes no --n/--k/--part parameters")


def _exit_for(outcomes: Sequence[str]) -> int:
    if any(o in (V.COUNTEREXAMPLE, V.ABSENT) for o in outcomes):
        return EXIT_FAIL
    if any(o == V.PARTIAL for o in outcomes):
        return EXIT_PARTIAL
    return EXIT_OK


def _summary(r: V.CheckReport) -> str:
    return (f"{r.check_id} {json.dumps(r.params, sort_keys=True)} outcome={r.outcome} "
            f"universe={r.universe_size} counterexamples={len(r.counterexamples)} "
            f"elapsed_ms={r.elapsed_ms}")


def cmd_check(args, out: TextIO) -> int:
    reports = _check_reports(args)
    for r in reports:
        out.write((r.to_json() if args.json else _summary(r)) + "\n")
        if not args.json:
            for c in r.counterexamples:
                out.write(f"  {c['violation']}: {c['graph6']}\n")
    return _exit_for([r.outcome for r in reports])


def cmd_search(args, out: TextIO) -> int:
    base = {"a": V.PROFILE_A, "b": V.PROFILE_B, "c": V.PROFILE_C}[args.profile]
    wp = V.WitnessProfile(base.name, args.n or base.order, base.required, base.mode,
                          args.budget if args.budget is not None else base.budget)
    r = V.witness_search(wp, seed=args.seed)
    if args.json:
        out.write(r.to_json() + "\n")
    else:
        out.write(_summary(r) + "\n")
        for w in r.details.get("witnesses", []):
            out.write(f"  {w['graph6']}\n")
    return _exit_for([r.outcome])


COMMANDS = {"invariant": cmd_invariant, "generate": cmd_generate, "enumerate": cmd_enumerate,
            "check": cmd_check, "search": cmd_search}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        err.write(f"{e}\n")
        return EXIT_USAGE
    except SystemExit as e:      # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except FormatError as e:
        err.write(f"format error: {e}\n")
        return EXIT_FORMAT
    except SearchTimeout as e:
        err.write(f"budget exceeded: {e}\n")
        return EXIT_PARTIAL
    except (InvalidParameter, GraphError) as e:
        err.write(f"{parser.prog}: error: {e}\n")
        return EXIT_USAGE
    except OSError as e:
        err.write(f"{parser.prog}: error: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
