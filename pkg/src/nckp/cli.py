"""Command-line front end.

    nckp count  --k K --n N [--regular]
    nckp sample --k K --n N --count M [--seed S] [--regular]
                [--format blocks|arcs|json] [--cache PATH] [--jobs J]
    nckp cache build --k K --n N [--regular] --out PATH
    nckp verify [--k-max 4] [--n-max 8]
    nckp stats  --k K --n N --samples M [--seed S] --metric blocks|arcs
    nckp render --format svg [--out PATH]

Exit codes: 0 ok, 2 usage, 3 cache mismatch, 4 verification failure.
Sampling streams one partition per line; with --jobs J the output
interleaves J independent per-worker streams (worker w is seeded with
seed XOR w) round-robin, so output is deterministic for fixed flags.
Relative --cache paths resolve under $NCKP_CACHE_DIR when it is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter

from .counting import ChamberTable, LoopFreeTable, total_partitions, total_regular
from .diagrams import parse_blocks_text
from .oracle import run_verification
from .render import render_svg
from .sampler import SamplerSession
from .store import CacheError, load_tables, save_tables

USAGE_ERROR = 2
CACHE_MISMATCH = 3
VERIFY_FAILURE = 4


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nckp",
        description="Count and uniformly sample k-noncrossing set partitions.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, with_n=True):
        p.add_argument("--k", type=int, required=True, help="crossing bound (>= 2)")
        if with_n:
            p.add_argument("--n", type=int, required=True, help="number of vertices")

    p = sub.add_parser("count", help="print the exact count")
    common(p)
    p.add_argument("--regular", action="store_true", help="2-regular partitions only")

    p = sub.add_parser("sample", help="stream uniform samples, one per line")
    common(p)
    p.add_argument("--count", type=int, required=True, help="number of samples")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--regular", action="store_true")
    p.add_argument("--format", choices=["blocks", "arcs", "json"], default="blocks")
    p.add_argument("--cache", help="load preprocessed tables from this file")
    p.add_argument("--jobs", type=int, default=1, help="independent worker streams")

    p = sub.add_parser("cache", help="table cache management")
    cache_sub = p.add_subparsers(dest="cache_command", required=True)
    pb = cache_sub.add_parser("build", help="run preprocessing and save tables")
    common(pb)
    pb.add_argument("--regular", action="store_true")
    pb.add_argument("--out", required=True, help="output path")

    p = sub.add_parser("verify", help="run the oracle suite, print a JSON report")
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--n-max", type=int, default=8)

    p = sub.add_parser("stats", help="histogram of a sample statistic")
    common(p)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--regular", action="store_true")
    p.add_argument("--metric", choices=["blocks", "arcs"], required=True)

    p = sub.add_parser("render", help="read partitions on stdin, write SVG")
    p.add_argument("--format", choices=["svg"], default="svg")
    p.add_argument("--out", help="output path (default stdout)")
    return top


def _fail(message: str, code: int) -> int:
    print(f"nckp: error: {message}", file=sys.stderr)
    return code


def _check_params(args) -> str | None:
    regular = getattr(args, "regular", False)
    if getattr(args, "n", 0) < 0:
        return "--n must be >= 0"
    if regular and args.k < 3:
        return "--k must be >= 3 with --regular"
    if not regular and getattr(args, "k", 2) < 2:
        return "--k must be >= 2"
    return None


def _resolve_cache(path: str) -> str:
    base = os.environ.get("NCKP_CACHE_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _load_session_table(args):
    """Load and vet a cached table for the sample command."""
    table = load_tables(_resolve_cache(args.cache))
    mode = "regular" if args.regular else "plain"
    need_len = 2 * args.n if mode == "plain" else max(2 * (args.n - 1), 0)
    if mode == "plain" and not isinstance(table, ChamberTable):
        raise CacheError("cache holds a sigma_star table but --regular is off")
    if mode == "regular" and not isinstance(table, LoopFreeTable):
        raise CacheError("cache holds an omega table but --regular is set")
    if table.k != args.k:
        raise CacheError(f"cache built for --k {table.k}, requested --k {args.k}")
    if table.max_len < need_len:
        raise CacheError(
            f"cache covers lengths <= {table.max_len}, --n {args.n} needs {need_len}"
        )
    if isinstance(table, ChamberTable) and table.horizon is not None \
            and table.horizon != need_len:
        raise CacheError(
            f"cache horizon {table.horizon} does not match --n {args.n}"
        )
    return table


def _format_sample(p, fmt: str) -> str:
    if fmt == "blocks":
        return p.to_text()
    if fmt == "arcs":
        return p.arcs_text()
    return json.dumps(
        {"n": p.n, "blocks": [list(b) for b in p.blocks]}, separators=(",", ":")
    )


def _cmd_count(args) -> int:
    if args.regular:
        print(total_regular(args.k, args.n))
    else:
        print(total_partitions(args.k, args.n))
    return 0


def _cmd_sample(args) -> int:
    if args.count < 0:
        return _fail("--count must be >= 0", USAGE_ERROR)
    if args.jobs < 1:
        return _fail("--jobs must be >= 1", USAGE_ERROR)
    mode = "regular" if args.regular else "plain"
    table = None
    if args.cache:
        table = _load_session_table(args)
    elif args.n > 0:
        if mode == "plain":
            table = ChamberTable.build(args.k, 2 * args.n, horizon=2 * args.n)
        else:
            table = LoopFreeTable.build(args.k, 2 * (args.n - 1))
    jobs = min(args.jobs, max(args.count, 1))
    sessions = [
        SamplerSession(args.k, args.n, mode, seed=args.seed ^ w, table=table)
        for w in range(jobs)
    ]
    out = sys.stdout
    for m in range(args.count):
        _, p = sessions[m % jobs].draw()
        out.write(_format_sample(p, args.format) + "\n")
    return 0


def _cmd_cache_build(args) -> int:
    if args.regular:
        table = LoopFreeTable.build(args.k, max(2 * (args.n - 1), 0))
    else:
        table = ChamberTable.build(args.k, 2 * args.n, horizon=2 * args.n)
    save_tables(table, _resolve_cache(args.out))
    return 0


def _cmd_verify(args) -> int:
    report = run_verification(args.k_max, args.n_max)
    print(json.dumps(report, indent=2))
    return 0 if report["passed"] else VERIFY_FAILURE


def _cmd_stats(args) -> int:
    if args.samples < 1:
        return _fail("--samples must be >= 1", USAGE_ERROR)
    mode = "regular" if args.regular else "plain"
    session = SamplerSession(args.k, args.n, mode, seed=args.seed)
    hist: Counter = Counter()
    for _ in range(args.samples):
        _, p = session.draw()
        hist[len(p.blocks) if args.metric == "blocks" else len(p.arcs)] += 1
    for value in sorted(hist):
        print(f"{value}\t{hist[value]}")
    return 0


def _cmd_render(args) -> int:
    partitions = []
    for lineno, line in enumerate(sys.stdin, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            partitions.append(parse_blocks_text(line))
        except ValueError as exc:
            return _fail(f"stdin line {lineno}: {exc}", USAGE_ERROR)
    svg = render_svg(partitions)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg + "\n")
    else:
        print(svg)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    problem = _check_params(args)
    if problem:
        return _fail(problem, USAGE_ERROR)
    try:
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "sample":
            return _cmd_sample(args)
        if args.command == "cache":
            return _cmd_cache_build(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "render":
            return _cmd_render(args)
    except CacheError as exc:
        return _fail(str(exc), CACHE_MISMATCH)
    except (ValueError, OSError) as exc:
        return _fail(str(exc), USAGE_ERROR)
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
