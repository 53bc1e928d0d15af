"""wpn-lab command line interface.

One subcommand per module; JSON reports are canonical (sorted keys, no
whitespace) and carry the tool version plus a configuration hash, so a
fixed configuration yields byte-identical output at any thread count.

Exit codes: 0 success, 2 precondition violation, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import __version__
from .census import (
    ConfigMismatch,
    canonical_json,
    census,
    config_hash,
    girth5_census,
    render_fraction,
)
from .counting import (
    UniformPartitionSampler,
    bell,
    c2l_lower_bound,
    f_star,
    labeled_cograph_count,
    partition_stats,
    vertices_in_blocks_larger_than,
)
from .families import NoFiniteBasisError
from .graphs import Graph, Graph6Error, emit_graph6, parse_adjacency_text, parse_graph6
from .sequences import classify_sequence, enumerate_really_canonical_sequences, \
    is_isomorphic_cycle
from .witnessing import (
    BudgetExhausted,
    theorem_certifier,
    verify_cycle_partition_claims,
    wpn,
)

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3


def _read_graph(text: str) -> Graph:
    """Graph input: a graph6 string, an adjacency-text string, or a file
    holding either on its first nonblank line."""
    if os.path.exists(text):
        with open(text, "r", encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        if not lines:
            raise ValueError(f"no graph found in {text}")
        text = lines[0]
    if text.startswith("n="):
        return parse_adjacency_text(text)
    return parse_graph6(text)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    out = sys.stdout
    if getattr(args, "output", None):
        out = open(args.output, "w", encoding="utf-8")
    try:
        if args.format == "json":
            out.write(canonical_json(payload) + "\n")
        else:
            for line in text_lines:
                out.write(line + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def _envelope(command: str, config: dict, data: dict) -> dict:
    return {
        "command": command,
        "version": __version__,
        "config": config,
        "config_hash": config_hash(config),
        **data,
    }


# -- subcommand handlers -------------------------------------------------------


def _cmd_wpn(args) -> int:
    g = _read_graph(args.graph)
    value = wpn(g)
    config = {"command": "wpn", "graph": emit_graph6(g)}
    _emit(args, _envelope("wpn", config, {"wpn": value}), [str(value)])
    return EXIT_OK


def _cmd_certify(args) -> int:
    g = _read_graph(args.graph)
    cert = theorem_certifier(g, args.theorem)
    config = {"command": "certify", "graph": emit_graph6(g),
              "theorem": args.theorem}
    if cert is None:
        _emit(args, _envelope("certify", config, {"certificate": None}),
              ["NONE"])
        return EXIT_OK
    data = {
        "certificate": {
            "arity": cert.partition.arity,
            "assignment": list(cert.partition.assignment),
            "families": [f.label() for f in cert.sequence.parts],
        }
    }
    _emit(args, _envelope("certify", config, data),
          [canonical_json(data["certificate"])])
    return EXIT_OK


def _cmd_sequences(args) -> int:
    g = _read_graph(args.graph)
    seqs = enumerate_really_canonical_sequences(g, args.k, budget=args.budget)
    classifiable = is_isomorphic_cycle(g) and g.n >= 6 and g.n % 2 == 0 \
        and wpn(g) == args.k
    items = []
    for seq in seqs:
        item = {"families": [[emit_graph6(p) for p in f.patterns]
                             for f in seq.parts]}
        if classifiable:
            item["classification"] = classify_sequence(g, seq)
        items.append(item)
    config = {"command": "sequences", "graph": emit_graph6(g), "k": args.k,
              "budget": args.budget}
    lines = [f"{len(items)} minimal really canonical witnessing {args.k}-sequences"]
    for item in items:
        label = " | ".join(",".join(fam) for fam in item["families"])
        if "classification" in item:
            label += f"  [{item['classification']}]"
        lines.append(label)
    _emit(args, _envelope("sequences", config,
                          {"count": len(items), "sequences": items}), lines)
    return EXIT_OK


def _cmd_verify_claims(args) -> int:
    if args.cycle % 2 or args.cycle < 6:
        raise ValueError("--cycle must be an even number >= 6")
    results = verify_cycle_partition_claims(args.cycle // 2)
    items = []
    ok = True
    for r in results:
        status = "found" if r.found else "absent"
        if r.expected_found is not None and r.found != r.expected_found:
            ok = False
        items.append({
            "claim": r.item,
            "parameters": r.parameters,
            "status": status,
            "expected": "found" if r.expected_found else "absent",
            **({"witness": r.witness} if r.witness is not None else {}),
        })
    config = {"command": "verify-claims", "cycle": args.cycle}
    lines = [f"{'ok' if ok else 'MISMATCH'}: {len(items)} claim items"]
    lines += [f"{it['claim']} {canonical_json(it['parameters'])}: {it['status']}"
              for it in items]
    _emit(args, _envelope("verify-claims", config,
                          {"ok": ok, "items": items}), lines)
    return EXIT_OK if ok else 1


_COUNT_FNS = {
    "bell": bell,
    "f1": lambda n: f_star(1, n),
    "f2": lambda n: f_star(2, n),
    "f3": lambda n: f_star(3, n),
    "cographs": labeled_cograph_count,
}


def _cmd_count(args) -> int:
    value = _COUNT_FNS[args.fn](args.n)
    config = {"command": "count", "fn": args.fn, "n": args.n}
    _emit(args, _envelope("count", config, {"value": str(value)}),
          [str(value)])
    return EXIT_OK


def _cmd_bound(args) -> int:
    b = c2l_lower_bound(args.n, args.l)
    config = {"command": "bound", "n": args.n, "l": args.l}
    data = {
        "exponent": {"numerator": b.exponent.numerator,
                     "denominator": b.exponent.denominator},
        "bell_factor": str(b.bell_factor),
    }
    if b.is_integral():
        data["value"] = str(b.exact_value())
        text = data["value"]
    else:
        text = (f"2^({b.exponent.numerator}/{b.exponent.denominator})"
                f" * {b.bell_factor}")
    _emit(args, _envelope("bound", config, data), [text])
    return EXIT_OK


def _cmd_sample_partitions(args) -> int:
    sampler = UniformPartitionSampler(args.n, args.seed)
    heavy_threshold = math.log(args.n) ** 3 if args.n > 1 else 0.0
    rows = []
    for _ in range(args.samples):
        p = sampler.sample()
        st = partition_stats(p)
        heavy = vertices_in_blocks_larger_than(p, heavy_threshold)
        rows.append((st.blocks, st.nonsingleton_blocks, heavy))
    config = {"command": "sample-partitions", "n": args.n,
              "samples": args.samples, "seed": args.seed}
    if args.format == "csv" or (args.stats and args.format == "text"):
        lines = ["blocks,nonsingletons,heavy_vertices"]
        lines += [f"{b},{ns},{h}" for b, ns, h in rows]
        out = sys.stdout
        if args.output:
            out = open(args.output, "w", encoding="utf-8")
        try:
            out.write("\n".join(lines) + "\n")
        finally:
            if out is not sys.stdout:
                out.close()
        return EXIT_OK
    data = {"samples": [{"blocks": b, "nonsingletons": ns, "heavy_vertices": h}
                        for b, ns, h in rows]}
    _emit(args, _envelope("sample-partitions", config, data),
          [f"{b},{ns},{h}" for b, ns, h in rows])
    return EXIT_OK


def _cmd_census(args) -> int:
    forb = _read_graph(args.forbid)
    shard_bits = None
    if args.shards is not None:
        if args.shards < 1 or args.shards & (args.shards - 1):
            raise ValueError("--shards must be a power of two")
        shard_bits = args.shards.bit_length() - 1
    report = census(args.n, forb, args.theorem, mode=args.mode,
                    threads=args.threads, shard_prefix_bits=shard_bits,
                    manifest_path=args.resume)
    d = report.to_dict()
    payload = {"command": "census", "version": __version__, **d}
    frac = d["certifiable_fraction"]
    lines = [
        f"n={args.n} forbidden={d['config']['forbidden']} theorem={args.theorem}",
        f"total={d['total']} hfree={d['hfree']} certifiable={d['certifiable']}",
        f"certifiable_fraction={frac['exact']} ({frac['decimal']})",
    ]
    if args.format == "csv":
        out_lines = ["prefix,total,hfree,certifiable"]
        out_lines += [f"{s['prefix']},{s['total']},{s['hfree']},{s['certifiable']}"
                      for s in d["shards"]]
        out = sys.stdout
        if args.output:
            out = open(args.output, "w", encoding="utf-8")
        try:
            out.write("\n".join(out_lines) + "\n")
        finally:
            if out is not sys.stdout:
                out.close()
        return EXIT_OK
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_girth5(args) -> int:
    report = girth5_census(args.n, mode=args.mode)
    d = report.to_dict()
    config = {"command": "girth5-census", "n": args.n, "mode": args.mode}
    lines = [f"girth>=5 graphs: {d['graphs']}, heavy check passed: "
             f"{d['heavy_check_passed']}"]
    _emit(args, _envelope("girth5-census", config, d), lines)
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def _default_threads() -> int:
    env = os.environ.get("WPNLAB_THREADS")
    if env:
        return max(1, int(env))
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wpn-lab",
        description="witnessing partitions, certificates and censuses of "
                    "H-free graphs")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
        p.add_argument("--output", default=None, help="write report to a file")
        p.add_argument("--threads", type=int, default=_default_threads())

    p = sub.add_parser("wpn", help="witnessing partition number of a graph")
    p.add_argument("graph", help="graph6 string, adjacency text, or file")
    common(p)
    p.set_defaults(handler=_cmd_wpn)

    p = sub.add_parser("certify", help="search a theorem certificate")
    p.add_argument("graph")
    p.add_argument("--theorem", required=True,
                   help="c6 | c8 | c10 | c2l:<l>")
    common(p)
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("sequences",
                       help="enumerate minimal really canonical witnessing sequences")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=10_000_000)
    common(p)
    p.set_defaults(handler=_cmd_sequences)

    p = sub.add_parser("verify-claims",
                       help="exhaustively check the even-cycle partition claims")
    p.add_argument("--cycle", type=int, required=True, help="cycle length 2l")
    common(p)
    p.set_defaults(handler=_cmd_verify_claims)

    p = sub.add_parser("count", help="exact counting functions")
    p.add_argument("--fn", choices=sorted(_COUNT_FNS), required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("bound", help="C_{2l}-free lower bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    common(p)
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("sample-partitions",
                       help="uniform random set partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--stats", action="store_true")
    common(p)
    p.set_defaults(handler=_cmd_sample_partitions)

    p = sub.add_parser("census", help="exhaustive small-n census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", required=True, help="forbidden cycle (graph6)")
    p.add_argument("--theorem", required=True)
    p.add_argument("--mode", choices=("labeled", "unlabeled"),
                   default="labeled")
    p.add_argument("--shards", type=int, default=None,
                   help="shard count, a power of two")
    p.add_argument("--resume", default=None, help="manifest path")
    common(p)
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("girth5-census", help="girth>=5 degree statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("labeled", "unlabeled"),
                   default="labeled")
    common(p)
    p.set_defaults(handler=_cmd_girth5)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExhausted as exc:
        print(f"wpn-lab: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, Graph6Error, NoFiniteBasisError, ConfigMismatch) as exc:
        print(f"wpn-lab: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
