"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_backends.py --sizes 250,500,1000,2000 --reps 3
"""
import argparse
import statistics
import sys
import time

from udisk_mis import GenParams, generate, kernels, split_stabbed
from udisk_mis.line_solvers import build_ri_tables, pair_state_dp_solve, paper_dp_solve

STAGES = {
    "ri-tables": lambda si, be: build_ri_tables(si, backend=be),
    "paper-dp": lambda si, be: paper_dp_solve(si, backend=be),
    "pair-dp": lambda si, be: pair_state_dp_solve(si, backend=be),
}


def median_time(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="250,500,1000,2000")
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--stages", default=",".join(STAGES))
    args = ap.parse_args(argv)

    if "compiled" not in kernels.BACKENDS:
        print("compiled extension not built; only the fallback can be timed", file=sys.stderr)
    backends = sorted(kernels.BACKENDS)
    sizes = [int(s) for s in args.sizes.split(",")]
    stages = args.stages.split(",")

    print(f"{'stage':<10} {'n':>6} " + " ".join(f"{b + ' s':>12}" for b in backends) + f" {'speedup':>9}")
    for n in sizes:
        inst = generate(GenParams("stabbed", n, 0.5, args.seed))
        si = split_stabbed(inst, [d.id for d in inst.disks], 0.0)
        for stage in stages:
            fn = STAGES[stage]
            t = {be: median_time(lambda: fn(si, be), args.reps) for be in backends}
            speedup = f"{t['python'] / t['compiled']:9.1f}" if len(t) == 2 else "        -"
            print(f"{stage:<10} {n:>6} " + " ".join(f"{t[b]:12.4f}" for b in backends) + f" {speedup}")


if __name__ == "__main__":
    main()
