"""Differential testing against the brute-force oracle, and scaling benchmarks."""
from __future__ import annotations

import csv
import dataclasses
import io
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .approximation import approx2_solve
from .geometry import Instance, InputError
from .generate import GenParams, generate
from .line_solvers import (
    BruteForceCapExceeded,
    brute_cap,
    brute_force_solve,
    pair_state_dp_solve,
    paper_dp_solve,
    split_stabbed,
)
from .strips import decompose

BENCH_SOLVERS = ("paper-dp", "pair-dp", "brute", "approx2")


@dataclass
class DiffReport:
    seed: int
    n: int
    mode: str
    brute: int
    approx2: int
    pair_dp: int | None = None
    paper_dp: int | None = None
    pair_dp_match: bool = True
    paper_dp_overcount: bool = False
    paper_dp_infeasible_reconstruction: bool = False
    factor2_holds: bool = True

    FIELDS = ("seed", "n", "mode", "brute", "pair_dp", "paper_dp", "approx2",
              "pair_dp_match", "paper_dp_overcount", "paper_dp_infeasible_reconstruction",
              "factor2_holds")


def compare(inst: Instance, seed: int = 0, mode: str = "stabbed", y_line: float = 0.0,
            backend: str | None = None) -> DiffReport:
    """Run every solver on one instance and record how they relate.

    Stabbed mode treats the whole instance as one strip on ``y_line``. General
    mode compares strip by strip: pair-dp and paper-dp against brute force on
    each strip of the decomposition.
    """
    brute = brute_force_solve(inst).size
    approx = approx2_solve(inst, backend=backend)
    rep = DiffReport(seed, len(inst), mode, brute, approx.size,
                     factor2_holds=2 * approx.size >= brute and bool(approx.verified))
    if mode == "stabbed":
        si = split_stabbed(inst, [d.id for d in inst.disks], y_line)
        pair = pair_state_dp_solve(si, backend=backend)
        paper = paper_dp_solve(si, backend=backend)
        rep.pair_dp, rep.paper_dp = pair.size, paper.size
        rep.pair_dp_match = pair.size == brute and bool(pair.verified)
        rep.paper_dp_overcount = paper.size > brute
        rep.paper_dp_infeasible_reconstruction = not paper.verified
        return rep
    sa = decompose(inst)
    for ids, y in zip(sa.strips, sa.line_ys):
        if not ids:
            continue
        si = split_stabbed(inst, ids, y)
        opt = brute_force_solve(inst, ids).size
        pair = pair_state_dp_solve(si, backend=backend)
        paper = paper_dp_solve(si, backend=backend)
        rep.pair_dp_match &= pair.size == opt and bool(pair.verified)
        rep.paper_dp_overcount |= paper.size > opt
        rep.paper_dp_infeasible_reconstruction |= not paper.verified
    return rep


def _trial(p: GenParams, t: int, vary_n: bool, backend: str | None) -> DiffReport:
    seed = (p.seed + t) % 2**64
    n = int(np.random.default_rng([seed, 1]).integers(1, p.n + 1)) if vary_n else p.n
    q = dataclasses.replace(p, n=n, seed=seed)
    mode = "stabbed" if p.mode == "stabbed" else "general"
    return compare(generate(q), seed, mode, backend=backend)


def differential_test(p: GenParams, trials: int, vary_n: bool = True, workers: int = 1,
                      backend: str | None = None) -> list[DiffReport]:
    """``trials`` seeded instances with seeds p.seed, p.seed + 1, ...

    With ``vary_n`` each trial draws its size uniformly from 1..p.n. Mismatches
    are recorded in the reports, never raised.
    """
    cap = brute_cap()
    if p.n > cap:
        raise BruteForceCapExceeded(f"differential test needs brute force; n={p.n} exceeds cap {cap}")
    if trials <= 0:
        return []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_trial, [p] * trials, range(trials), [vary_n] * trials,
                                    [backend] * trials, chunksize=max(1, trials // (4 * workers))))
    else:
        reports = [_trial(p, t, vary_n, backend) for t in range(trials)]
    return sorted(reports, key=lambda r: r.seed)


def summarize(reports: list[DiffReport]) -> dict:
    n = len(reports)
    if n == 0:
        return {"trials": 0}
    ratios = [r.approx2 / r.brute for r in reports if r.brute]
    return {
        "trials": n,
        "pair_dp_mismatches": sum(not r.pair_dp_match for r in reports),
        "factor2_failures": sum(not r.factor2_holds for r in reports),
        "paper_dp_overcount_rate": sum(r.paper_dp_overcount for r in reports) / n,
        "paper_dp_infeasible_rate": sum(r.paper_dp_infeasible_reconstruction for r in reports) / n,
        "mean_approx_ratio": statistics.fmean(ratios) if ratios else float("nan"),
    }


def reports_to_csv(reports: list[DiffReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(DiffReport.FIELDS)
    for r in reports:
        w.writerow(["" if getattr(r, f) is None else getattr(r, f) for f in DiffReport.FIELDS])
    return buf.getvalue()


@dataclass
class BenchReport:
    solver: str
    backend: str
    rows: list[tuple[int, float, int]] = field(default_factory=list)

    @property
    def exponent(self) -> float | None:
        """Least-squares slope of log(time) against log(n); None below two sizes."""
        pts = [(n, t) for n, t, _ in self.rows if n > 0 and t > 0]
        if len(pts) < 2:
            return None
        x = np.log([n for n, _ in pts])
        y = np.log([t for _, t in pts])
        return float(np.polyfit(x, y, 1)[0])

    @property
    def ratios(self) -> list[float]:
        return [b[1] / a[1] for a, b in zip(self.rows, self.rows[1:])]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["solver", "backend", "n", "median_s", "reps"])
        for n, t, reps in self.rows:
            w.writerow([self.solver, self.backend, n, f"{t:.6g}", reps])
        return buf.getvalue()

    def table(self) -> str:
        lines = [f"{self.solver} [{self.backend}]", f"{'n':>8}  {'median s':>12}  {'ratio':>7}"]
        prev = None
        for n, t, _ in self.rows:
            ratio = f"{t / prev:7.2f}" if prev else "      -"
            lines.append(f"{n:>8}  {t:>12.6f}  {ratio}")
            prev = t
        exp = self.exponent
        lines.append("fitted exponent: " + ("undefined (need two sizes)" if exp is None else f"{exp:.2f}"))
        return "\n".join(lines)


def _solver_fn(solver: str, backend: str | None):
    if solver == "paper-dp":
        return lambda inst: paper_dp_solve(split_stabbed(inst, [d.id for d in inst.disks], 0.0), backend=backend)
    if solver == "pair-dp":
        return lambda inst: pair_state_dp_solve(split_stabbed(inst, [d.id for d in inst.disks], 0.0), backend=backend)
    if solver == "brute":
        return lambda inst: brute_force_solve(inst)
    if solver == "approx2":
        return lambda inst: approx2_solve(inst, backend=backend)
    raise InputError(f"unknown solver {solver!r}; choose from {BENCH_SOLVERS}")


def bench_scaling(solver: str, sizes: list[int], reps: int = 5, seed: int = 0,
                  radius: float = 0.5, backend: str | None = None) -> BenchReport:
    """Median wall time of ``solver`` on stabbed-line instances of each size."""
    from . import kernels

    if reps < 3:
        raise InputError(f"need at least 3 repetitions, got {reps}")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InputError(f"sizes must be strictly increasing, got {sizes}")
    if solver == "brute" and sizes and sizes[-1] > brute_cap():
        raise BruteForceCapExceeded(f"brute force refuses n={sizes[-1]} (cap {brute_cap()})")
    fn = _solver_fn(solver, backend)
    report = BenchReport(solver, backend or kernels.DEFAULT_BACKEND)
    for n in sizes:
        inst = generate(GenParams("stabbed", n, radius, seed))
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            fn(inst)
            times.append(time.perf_counter() - t0)
        report.rows.append((n, statistics.median(times), reps))
    return report
