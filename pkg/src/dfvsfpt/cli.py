"""Command line entry point: ``dfvsfpt solve|generate|verify``.

``solve`` and ``verify`` print one JSON document on stdout.  Exit status is 0
for a solution (or a valid certificate), 1 for NO (or an invalid one), and 2
for any error, with the diagnostic on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .dfvs import is_dfvs, solve_dfvs
from .graph import GraphError
from .instance import Instance, InstanceFormatError, generate_instance, parse_instance, render_instance
from .ordmc import check_ordered_separation, leaf_bound, solve_ordmc

EXIT_SOLUTION = 0
EXIT_NO = 1
EXIT_ERROR = 2


def verify_solution(inst: Instance, solution) -> tuple[bool, str]:
    """Independent check of a proposed solution; returns ``(valid, reason)``."""
    sol = set(solution)
    if len(sol) != len(list(solution)):
        return False, "solution lists a vertex twice"
    bad = sorted(v for v in sol if not 0 <= v < inst.n)
    if bad:
        return False, f"unknown vertices {bad}"
    if len(sol) > inst.k:
        return False, f"size {len(sol)} exceeds k={inst.k}"
    g = inst.graph()
    if inst.kind == "dfvs":
        if not is_dfvs(g, sol):
            return False, "graph minus solution still has a cycle"
        return True, "ok"
    t = inst.terminals()
    if not sol.isdisjoint(t.vertices):
        return False, f"solution contains terminals {sorted(sol & t.vertices)}"
    if not check_ordered_separation(g, t, sol):
        return False, "some x_i still reaches some y_j with i >= j"
    return True, "ok"


def run_solve(inst: Instance) -> dict:
    """Solve, re-verify, and build the result report."""
    start = time.perf_counter()
    if inst.kind == "dfvs":
        result, stats = solve_dfvs(inst.graph(), inst.k)
    else:
        result, stats = solve_ordmc(inst.graph(), inst.terminals(), inst.k)
    elapsed = (time.perf_counter() - start) * 1000.0
    report = {
        "kind": inst.kind,
        "k": inst.k,
        "status": "no" if result is None else "solution",
        "solution": None if result is None else sorted(result),
        "stats": stats.as_dict(),
        "leaf_bound": leaf_bound(inst.k),
        "leaf_bound_ok": stats.leaf_bound_violations == 0,
        "wall_time_ms": round(elapsed, 3),
    }
    if result is not None:
        ok, reason = verify_solution(inst, result)
        if not ok:
            report.update(status="error", error=f"solver output failed verification: {reason}")
    return report


def _load(path: str) -> Instance:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_instance(text)


def _cmd_solve(args) -> int:
    inst = _load(args.instance)
    if args.k is not None:
        inst.k = args.k
    report = run_solve(inst)
    print(json.dumps(report))
    if args.stats:
        s = report["stats"]
        print(f"nodes={s['nodes']} leaves={s['leaves']} flow_calls={s['flow_calls']} "
              f"shrink={s['shrink_steps']} branch={s['branch_steps']} orderings={s['orderings']} "
              f"max_leaves={s['max_leaves']}/{report['leaf_bound']} "
              f"time={report['wall_time_ms']:.1f}ms", file=sys.stderr)
    if report["status"] == "error":
        print(report["error"], file=sys.stderr)
        return EXIT_ERROR
    return EXIT_SOLUTION if report["status"] == "solution" else EXIT_NO


def _cmd_generate(args) -> int:
    inst = generate_instance(args.kind, args.n, args.density, args.k, args.seed,
                             planted=args.planted, pairs=args.pairs)
    text = render_instance(inst)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    inst = _load(args.instance)
    if args.k is not None:
        inst.k = args.k
    ok, reason = verify_solution(inst, args.solution)
    print(json.dumps({"valid": ok, "reason": reason, "solution": sorted(args.solution)}))
    return EXIT_SOLUTION if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dfvsfpt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a dfvs or ordmc instance file")
    p.add_argument("instance", help="instance file, or - for stdin")
    p.add_argument("--k", type=int, help="override the parameter from the file")
    p.add_argument("--stats", action="store_true", help="print a statistics line on stderr")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("generate", help="write a random instance")
    p.add_argument("--kind", choices=("dfvs", "ordmc"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--density", type=float, default=0.1, help="edge probability (default 0.1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--planted", action="store_true", help="hide a solution of size k")
    p.add_argument("--pairs", type=int, default=2, help="ordmc terminal pairs (default 2)")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="check a proposed solution against an instance")
    p.add_argument("instance")
    p.add_argument("solution", type=int, nargs="*", help="vertex labels")
    p.add_argument("--k", type=int, help="override the parameter from the file")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return args.func(args)
    except (InstanceFormatError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
