"""Command line front end.

Exit codes: 0 ok, 1 a check failed, 2 usage or parse error.
Every command takes --json for machine-readable output.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import engine, gridalg, strategy
from .game import HiddenMode, new_session
from .numerics import tau
from .poset import FinitePoset, StaircaseShape, make_grid
from .render import ascii_strategy, svg_strategy


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        a, b = text.lower().split("x")
        m, n = int(a), int(b)
    except ValueError:
        raise SystemExit2(f"bad grid spec {text!r}; expected like 5x7")
    if m < 1 or n < 1:
        raise SystemExit2("grid sides must be >= 1")
    return m, n


class SystemExit2(Exception):
    """Usage-level failure (exit code 2)."""


def _poset_from_args(args) -> StaircaseShape | FinitePoset:
    picked = [x for x in (args.grid, args.chain, args.trivial, args.poset) if x]
    if len(picked) != 1:
        raise SystemExit2("exactly one of --grid/--chain/--trivial/--poset required")
    if args.grid:
        m, n = _parse_grid(args.grid)
        return make_grid(m, n)
    if args.chain:
        return FinitePoset.chain(int(args.chain))
    if args.trivial:
        return FinitePoset.trivial(int(args.trivial))
    path = Path(args.poset)
    if not path.is_file():
        raise SystemExit2(f"no such poset file: {path}")
    try:
        return FinitePoset.from_json(json.loads(path.read_text()))
    except (ValueError, KeyError) as exc:
        raise SystemExit2(f"bad poset file: {exc}")


def cmd_qk(args) -> int:
    lam = _poset_from_args(args)
    value = engine.qk_value(lam, args.k)
    bound = tau(args.k, lam.size)
    if args.json:
        print(json.dumps({"k": args.k, "size": lam.size,
                          "value": value, "lower_bound": bound}))
    else:
        print(f"q_{args.k} = {value} (lower bound {bound})")
    return 0


def cmd_strategy(args) -> int:
    m, n = args.rows, args.cols
    seq = gridalg.solve_grid(m, n)
    shape = make_grid(m, n)
    regs = strategy.regions(shape, seq)
    cost = strategy.q2_cost(shape, seq)
    if args.svg:
        print(svg_strategy(m, n, seq, regs))
    elif args.json:
        print(json.dumps({
            "grid": [m, n],
            "queries": [[r, c] for r, c in seq],
            "regions": [sorted([r, c] for r, c in reg) for reg in regs],
            "q2": cost,
        }))
    else:
        print(ascii_strategy(m, n, seq, regs))
        print(f"queries: {len(seq)}, worst case: {cost}")
    return 0


def run_verify_sweep(max_rows: int, max_cols: int, oracle_cap: int | None = None):
    """Template-loop sweep; returns (failures, case usage counts, grids checked)."""
    failures: list[dict] = []
    usage: dict[str, int] = {}
    grids = 0
    for m in range(1, max_rows + 1):
        for n in range(m, max_cols + 1):
            grids += 1
            target = gridalg.grid_q2(m, n)
            try:
                steps = gridalg.solve_grid_steps(m, n)
            except gridalg.GridAlgorithmError as exc:
                failures.append({"grid": [m, n], "case": None, "why": str(exc)})
                continue
            seq = []
            for st in steps:
                usage[st.template.case_id] = usage.get(st.template.case_id, 0) + 1
                seq.extend(st.queries_abs)
                if st.template.skip_conditions:
                    continue
                rep = gridalg.verify_conditions(st.shape, st.queries, st.t)
                if not rep:
                    failures.append({
                        "grid": [m, n], "case": st.template.case_id,
                        "why": f"condition {rep.violation} failed",
                    })
            shape = make_grid(m, n)
            if not strategy.is_strategy(shape, seq):
                failures.append({"grid": [m, n], "case": None,
                                 "why": "emitted sequence is not a strategy"})
                continue
            cost = strategy.q2_cost(shape, seq)
            if cost != target:
                failures.append({"grid": [m, n], "case": None,
                                 "why": f"cost {cost} != target {target}"})
            if oracle_cap is not None and m * n <= oracle_cap:
                if engine.qk_value(shape, 2) != target:
                    failures.append({"grid": [m, n], "case": None,
                                     "why": "engine disagrees with closed form"})
    return failures, usage, grids


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    failures, usage, grids = run_verify_sweep(
        args.max_rows, args.max_cols, oracle_cap=args.oracle_cap if args.oracle else None
    )
    elapsed = time.perf_counter() - t0
    report = {
        "grids": grids,
        "failures": failures,
        "cases": dict(sorted(usage.items())),
        "seconds": round(elapsed, 3),
    }
    if args.json:
        print(json.dumps(report))
    else:
        print(f"{len(failures)} failures, {grids} cases covered "
              f"({len(usage)} templates, {elapsed:.1f}s)")
        for f in failures:
            print(f"  FAIL {f['grid'][0]}x{f['grid'][1]} [{f['case']}]: {f['why']}")
    return 1 if failures else 0


def cmd_count(args) -> int:
    m, n = _parse_grid(args.grid)
    if m * n > args.cap:
        raise SystemExit2(
            f"OUT_OF_RANGE: {m}x{n} has {m * n} cells, over the cap {args.cap}"
        )
    t0 = time.perf_counter()
    count = strategy.count_strategies(make_grid(m, n), args.q2, args.mode)
    elapsed = time.perf_counter() - t0
    if args.json:
        print(json.dumps({"grid": [m, n], "q2": args.q2, "mode": args.mode,
                          "count": count, "seconds": round(elapsed, 3)}))
    else:
        print(f"{count} strategies with Q2 {'=' if args.mode == 'exact' else '<='} "
              f"{args.q2} on {m}x{n} ({elapsed:.2f}s)")
    return 0


def cmd_play(args) -> int:
    if args.pit == "empty":
        mode = HiddenMode.fixed(None)
    elif args.pit:
        r, c = (int(x) for x in args.pit.split(","))
        mode = HiddenMode.fixed((r, c))
    elif args.mode == "adversarial":
        mode = HiddenMode.adversarial()
    elif args.mode == "external":
        mode = HiddenMode.external()
    else:
        mode = HiddenMode.random(args.seed)
    session = new_session(args.rows, args.cols, args.k, mode, args.policy)
    if not args.json:
        print(f"field {args.rows}x{args.cols}, {args.k} stones, "
              f"policy {args.policy}, mode {mode.kind}")
    while session.status == "active":
        cell = session.suggestion()
        if cell is None:
            print("no suggestion (manual policy); enter cells as row,col")
            raw = input("toss at> ").strip()
            r, c = (int(x) for x in raw.split(","))
            cell = (r, c)
        if mode.kind == "external":
            raw = input(f"toss at {cell}; did it sink? [y/n]> ").strip().lower()
            sank = session.submit(cell, raw.startswith("y"))
        else:
            sank = session.submit(cell)
        if not args.json:
            print(f"  toss {len(session.log):2d} at {cell}: "
                  f"{'SANK' if sank else 'stable'}  "
                  f"(candidates left: {len(session.consistent)})")
    if args.json:
        print(json.dumps(session.to_json()))
        return 0 if session.status == "identified" else 1
    if session.status == "identified":
        pit = session.identified
        print(f"identified: {'no quicksand' if pit is None else f'pit corner {pit}'} "
              f"in {len(session.log)} tosses")
        return 0
    print("stranded: out of stones with candidates remaining")
    return 1


def cmd_probe(args) -> int:
    """Bracket q_2 of any grid between tau and tau + 1 by feasibility search."""
    m, n = _parse_grid(args.grid)
    bound = tau(2, m * n)
    deadline = time.monotonic() + args.timeout
    over = lambda: time.monotonic() > deadline
    t0 = time.perf_counter()
    result: dict = {"grid": [m, n], "cells": m * n, "lower_bound": bound}
    try:
        if engine.feasible(make_grid(m, n), 2, bound, deadline=over):
            result["q2"] = bound
            result["exceptional"] = False
        elif engine.feasible(make_grid(m, n), 2, bound + 1, deadline=over):
            result["q2"] = bound + 1
            result["exceptional"] = True
        else:
            result["q2"] = None
            result["note"] = "no schedule within lower_bound + 1"
    except TimeoutError:
        result["q2"] = None
        result["note"] = f"timed out after {args.timeout:.0f}s"
    result["seconds"] = round(time.perf_counter() - t0, 3)
    if args.json:
        print(json.dumps(result))
    else:
        if result["q2"] is None:
            print(f"{m}x{n}: unresolved ({result['note']})")
        else:
            tag = " (exceptional: exceeds the counting bound)" if result["exceptional"] else ""
            print(f"{m}x{n}: q_2 = {result['q2']}{tag} "
                  f"[lower bound {bound}, {result['seconds']}s]")
    return 0 if result["q2"] is not None else 1


def cmd_serve(args) -> int:
    import os

    import uvicorn

    from .service import create_app

    bind = args.bind or os.environ.get("QS_BIND", "127.0.0.1:8000")
    host, _, port = bind.rpartition(":")
    app = create_app(assets_dir=args.assets)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quicksand",
                                description="exact search for hidden grid ideals")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("qk", help="exact worst-case query count")
    q.add_argument("--grid")
    q.add_argument("--chain", type=int)
    q.add_argument("--trivial", type=int)
    q.add_argument("--poset", help="JSON poset file")
    q.add_argument("--k", type=int, default=2)
    q.add_argument("--json", action="store_true")
    q.set_defaults(fn=cmd_qk)

    s = sub.add_parser("strategy", help="explicit schedule for a grid")
    s.add_argument("--rows", type=int, required=True)
    s.add_argument("--cols", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.add_argument("--ascii", action="store_true")
    s.add_argument("--svg", action="store_true")
    s.set_defaults(fn=cmd_strategy)

    v = sub.add_parser("verify", help="sweep the schedule generator")
    v.add_argument("--max-rows", type=int, default=6)
    v.add_argument("--max-cols", type=int, default=100)
    v.add_argument("--oracle", action="store_true",
                   help="cross-check small grids against the engine")
    v.add_argument("--oracle-cap", type=int, default=42)
    v.add_argument("--json", action="store_true")
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("count", help="count strategies hitting a target cost")
    c.add_argument("--grid", required=True)
    c.add_argument("--q2", type=int, required=True)
    c.add_argument("--mode", choices=["exact", "atmost"], default="exact")
    c.add_argument("--cap", type=int, default=36, help="cell-count cap")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=cmd_count)

    g = sub.add_parser("play", help="interactive session in the terminal")
    g.add_argument("--rows", type=int, default=5)
    g.add_argument("--cols", type=int, default=7)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--policy", choices=["engine", "algorithm1", "manual"],
                   default="algorithm1")
    g.add_argument("--mode", choices=["random", "adversarial", "external"],
                   default="random")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--pit", help='fixed pit "r,c" or "empty"')
    g.add_argument("--json", action="store_true",
                   help="emit the final session transcript as JSON")
    g.set_defaults(fn=cmd_play)

    pr = sub.add_parser("probe", help="bracket q_2 of any grid by feasibility search")
    pr.add_argument("--grid", required=True)
    pr.add_argument("--timeout", type=float, default=120.0)
    pr.add_argument("--json", action="store_true")
    pr.set_defaults(fn=cmd_probe)

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--bind", help="host:port (env QS_BIND)")
    srv.add_argument("--assets", help="static asset dir for the UI (env QS_ASSETS)")
    srv.set_defaults(fn=cmd_serve)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except gridalg.GridRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
