"""``udisk-mis`` command line.

Exit codes: 0 success, 1 usage or input error (and a failed ``verify``),
2 differential-suite hard failure, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kernels
from .approximation import approx2_solve
from .generate import MODES, GenParams, generate
from .geometry import Instance, InputError, InvariantViolation, stabs_line, verify_independent
from .harness import bench_scaling, differential_test, reports_to_csv, summarize
from .io import read_instance, read_result, result_to_dict, write_instance, write_result
from .line_solvers import brute_force_solve, pair_state_dp_solve, paper_dp_solve, split_stabbed
from .render import render_svg
from .strips import decompose

ALGOS = ("approx2-pairdp", "approx2-paperdp", "pair-dp", "paper-dp", "brute")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load(args) -> Instance:
    return read_instance(args.input, args.format, args.radius)


def _line_for(inst: Instance, requested: float | None) -> float:
    if requested is not None:
        return requested
    if all(stabs_line(d, 0.0, inst.radius) for d in inst.disks):
        return 0.0
    lo, hi = float(inst.ys.min()), float(inst.ys.max())
    if hi - lo > 2 * inst.radius:
        raise InputError("disks do not share a stabbing line; use approx2-pairdp or brute")
    return (lo + hi) / 2


def cmd_generate(args) -> int:
    p = GenParams(args.mode, args.n, args.radius, args.seed, args.width, args.height, args.min_sep)
    write_instance(generate(p), args.output, args.format)
    return 0


def cmd_solve(args) -> int:
    inst = _load(args)
    closed = args.closed
    if args.algo == "brute":
        res = brute_force_solve(inst, closed=closed)
    elif args.algo in ("pair-dp", "paper-dp"):
        si = split_stabbed(inst, [d.id for d in inst.disks], _line_for(inst, args.line_y))
        fn = pair_state_dp_solve if args.algo == "pair-dp" else paper_dp_solve
        res = fn(si, closed=closed, backend=args.backend)
    else:
        line = "pair-dp" if args.algo == "approx2-pairdp" else "paper-dp"
        res = approx2_solve(inst, line, closed=closed, backend=args.backend, workers=args.workers)
    extra = {}
    if args.dump_strips:
        extra["strips"] = decompose(inst).to_json()
    payload = result_to_dict(res, args.algo) | extra
    if args.output:
        write_result(res, args.output, args.algo, extra)
    print(json.dumps(payload))
    return 0


def cmd_verify(args) -> int:
    inst = _load(args)
    ok = verify_independent(inst, args.ids, args.closed)
    print("independent" if ok else "NOT independent")
    return 0 if ok else 1


def cmd_diff(args) -> int:
    p = GenParams(args.mode if args.mode == "stabbed" else "uniform", args.n, args.radius, args.seed,
                  args.width, args.height)
    reports = differential_test(p, args.trials, vary_n=not args.fixed_n, workers=args.workers,
                                backend=args.backend)
    text = reports_to_csv(reports)
    if args.output:
        Path(args.output).write_text(text)
    summary = summarize(reports)
    for key, val in summary.items():
        print(f"{key}: {val}")
    return 2 if summary.get("pair_dp_mismatches", 0) or summary.get("factor2_failures", 0) else 0


def cmd_bench(args) -> int:
    rep = bench_scaling(args.algo, args.sizes, args.reps, args.seed, backend=args.backend)
    if args.output:
        Path(args.output).write_text(rep.to_csv())
    print(rep.table())
    return 0


def cmd_render(args) -> int:
    inst = _load(args)
    result = read_result(args.result) if args.result else None
    sa = decompose(inst) if args.strips else None
    Path(args.output).write_text(render_svg(inst, result, sa))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="udisk-mis", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def instance_args(p):
        p.add_argument("-i", "--input", required=True)
        p.add_argument("--format", choices=("json", "csv"))
        p.add_argument("--radius", type=float, help="required for CSV input")
        p.add_argument("--closed", action="store_true", help="count exact tangency as adjacent")

    def backend_arg(p):
        p.add_argument("--backend", choices=sorted(kernels.BACKENDS), default=None)

    g = sub.add_parser("generate", help="write a random instance")
    g.add_argument("--mode", choices=MODES, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--radius", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--width", type=float)
    g.add_argument("--height", type=float)
    g.add_argument("--min-sep", type=float)
    g.add_argument("--format", choices=("json", "csv"))
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="solve an instance")
    instance_args(s)
    backend_arg(s)
    s.add_argument("--algo", choices=ALGOS, default="approx2-pairdp")
    s.add_argument("--line-y", type=float, help="stabbing line for pair-dp/paper-dp")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--dump-strips", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check that a set of ids is independent")
    instance_args(v)
    v.add_argument("--ids", type=_int_list, required=True)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("diff", help="differential test against brute force")
    d.add_argument("--mode", choices=("stabbed", "general"), default="stabbed")
    d.add_argument("--n", type=int, required=True, help="largest instance size")
    d.add_argument("--fixed-n", action="store_true", help="use exactly n disks in every trial")
    d.add_argument("--trials", type=int, required=True)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--radius", type=float, default=0.5)
    d.add_argument("--width", type=float)
    d.add_argument("--height", type=float)
    d.add_argument("--workers", type=int, default=1)
    backend_arg(d)
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_diff)

    b = sub.add_parser("bench", help="time a solver on growing stabbed-line instances")
    b.add_argument("--algo", choices=("paper-dp", "pair-dp", "brute", "approx2"), required=True)
    b.add_argument("--sizes", type=_int_list, default=[2000, 4000, 8000])
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--seed", type=int, default=0)
    backend_arg(b)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("render", help="draw an instance as SVG")
    instance_args(r)
    r.add_argument("--result")
    r.add_argument("--strips", action="store_true", help="draw the stabbing lines")
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 1 if e.code else 0
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except InvariantViolation as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
