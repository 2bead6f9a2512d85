"""Exit criteria. Each test prints one PASS/FAIL line, repeated in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py -s``.
"""
import time

import numpy as np
import pytest

from udisk_mis import (
    C_STAR,
    GenParams,
    approx2_solve,
    brute_force_solve,
    check_observation1,
    decompose,
    generate,
    pair_state_dp_solve,
    paper_dp_solve,
    scale,
    split_stabbed,
)
from udisk_mis.geometry import adjacency_matrix
from udisk_mis.harness import bench_scaling, compare, differential_test, summarize
from udisk_mis.io import instance_from_json, instance_to_json

from conftest import CRITERIA


def report(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    CRITERIA.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def stabbed_reports():
    t0 = time.perf_counter()
    reports = differential_test(GenParams("stabbed", 18, 0.5, seed=20_000), 1000)
    return reports, time.perf_counter() - t0


def test_1_oracle_equivalence(stabbed_reports):
    reports, elapsed = stabbed_reports
    s = summarize(reports)
    ns = [r.n for r in reports]
    ok = (len(reports) >= 1000 and min(ns) >= 1 and max(ns) <= 18
          and s["pair_dp_mismatches"] == 0 and elapsed < 120)
    report(1, ok, f"pair-dp == brute on {len(reports)} stabbed trials (n 1..18), "
                  f"mismatches={s['pair_dp_mismatches']}, {elapsed:.1f}s")
    assert ok


def _lemma_violations(side1, side2, side3, samples, rng, r=0.5):
    """Count premise hits and violations for x-sorted triples with the given sides.

    ``side`` is +1 for centers on or above the line (0 <= y <= r), -1 for
    strictly below (-r <= y < 0).
    """
    gaps = rng.uniform(0.0, 2.4 * r, (samples, 2))
    x = np.column_stack([np.zeros(samples), gaps[:, 0], gaps[:, 0] + gaps[:, 1]])

    def ys(side):
        u = rng.uniform(0.0, r, samples)
        return u if side > 0 else -np.where(u == 0.0, r, u)

    y = np.column_stack([ys(side1), ys(side2), ys(side3)])

    def indep(i, j):
        return (x[:, i] - x[:, j]) ** 2 + (y[:, i] - y[:, j]) ** 2 >= 4 * r * r

    strict = (x[:, 0] < x[:, 1]) & (x[:, 1] < x[:, 2])
    premise = strict & indep(0, 1) & indep(1, 2)
    return int(premise.sum()), int((premise & ~indep(0, 2)).sum())


@pytest.mark.parametrize(
    "name, sides",
    [("lemma1 (above)", (1, 1, 1)), ("lemma1 reflected (below)", (-1, -1, -1)),
     ("lemma2 (below,below,above)", (-1, -1, 1)), ("lemma2 reflected (above,above,below)", (1, 1, -1))],
)
def test_2_lemma_suites(name, sides):
    rng = np.random.default_rng([2, *[s + 1 for s in sides]])
    t0 = time.perf_counter()
    premise, violations = _lemma_violations(*sides, 10**6, rng)
    elapsed = time.perf_counter() - t0
    ok = violations == 0 and elapsed < 60
    report(2, ok, f"{name}: 10^6 triples, {premise} satisfy the premise, {violations} violations, {elapsed:.1f}s")
    assert ok


def test_3_factor_two():
    t0 = time.perf_counter()
    reports = (differential_test(GenParams("uniform", 18, 0.5, seed=40_000), 300)
               + differential_test(GenParams("clustered", 18, 0.5, seed=50_000), 200))
    s = summarize(reports)
    ok = len(reports) >= 500 and s["factor2_failures"] == 0
    report(3, ok, f"2*|approx2| >= OPT and independent on {len(reports)} general trials, "
                  f"failures={s['factor2_failures']}, mean |ALG|/OPT={s['mean_approx_ratio']:.3f}, "
                  f"{time.perf_counter() - t0:.1f}s")
    assert ok


def test_4_observation1():
    t0 = time.perf_counter()
    rng = np.random.default_rng(4)
    bad = 0
    for t in range(100):
        mode = ("uniform", "clustered")[t % 2]
        inst = generate(GenParams(mode, int(rng.integers(1, 1001)), 0.5, seed=60_000 + t))
        sa = decompose(inst)
        strip = np.array([sa.assignment[d.id] for d in inst.disks])
        far = np.abs(strip[:, None] - strip[None, :]) > 1
        bad += int((far & adjacency_matrix(inst)).sum() > 0)
        bad += not check_observation1(sa, inst)
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 60
    report(4, ok, f"no adjacent pair across strips |i-j|>1 on 100 instances (n<=1000), {elapsed:.1f}s")
    assert ok


def test_5_paper_dp_characterization(stabbed_reports):
    reports, _ = stabbed_reports
    upper = all(r.paper_dp >= r.brute for r in reports)
    c_star = compare(C_STAR, mode="stabbed")
    reproduced = c_star.paper_dp == 3 and c_star.brute == 2 and c_star.paper_dp_overcount
    s = summarize(reports)
    ok = upper and reproduced
    report(5, ok, f"paper-dp >= OPT on all {len(reports)} trials: {upper}; C* paper-dp={c_star.paper_dp} "
                  f"vs OPT={c_star.brute}; overcount rate={s['paper_dp_overcount_rate']:.4f}, "
                  f"infeasible-reconstruction rate={s['paper_dp_infeasible_rate']:.4f}")
    assert ok


def test_6_scaling():
    t0 = time.perf_counter()
    bench = bench_scaling("paper-dp", [2000, 4000, 8000], reps=5)
    ratios = bench.ratios
    ok = all(q <= 5 for q in ratios)
    report(6, ok, f"paper-dp [{bench.backend}] medians "
                  + ", ".join(f"n={n}: {t:.4f}s" for n, t, _ in bench.rows)
                  + f"; ratios {', '.join(f'{q:.2f}' for q in ratios)}; exponent {bench.exponent:.2f}; "
                  f"{time.perf_counter() - t0:.1f}s")
    assert ok


def _all_selections(inst):
    si = split_stabbed(inst, [d.id for d in inst.disks], 0.0)
    return (
        brute_force_solve(inst).selected,
        pair_state_dp_solve(si).selected,
        paper_dp_solve(si).selected,
        approx2_solve(inst).selected,
        approx2_solve(inst, "paper-dp").selected,
    )


def test_7_determinism_round_trip_scale():
    same = all(
        instance_to_json(generate(GenParams(m, 200, 0.5, seed=s)))
        == instance_to_json(generate(GenParams(m, 200, 0.5, seed=s)))
        for s in range(10) for m in ("uniform", "clustered", "stabbed")
    )
    round_trip = True
    for s in range(100):
        inst = generate(GenParams(("uniform", "clustered", "stabbed")[s % 3], s % 60, 0.1 + s / 7, seed=70_000 + s))
        round_trip &= instance_from_json(instance_to_json(inst)) == inst
    scale_ok = True
    for s in range(50):
        inst = generate(GenParams("stabbed", 1 + s % 18, 0.5, seed=80_000 + s, width=(1 + s % 18) * 0.4))
        base = _all_selections(inst)
        for c in (0.1, 3, 1000):
            scale_ok &= _all_selections(scale(inst, c)) == base
        gen = generate(GenParams("uniform", 1 + s % 18, 0.5, seed=90_000 + s))
        for c in (0.1, 3, 1000):
            scaled = scale(gen, c)
            scale_ok &= brute_force_solve(scaled).selected == brute_force_solve(gen).selected
            scale_ok &= approx2_solve(scaled).selected == approx2_solve(gen).selected
    ok = same and round_trip and scale_ok
    report(7, ok, f"byte-identical seeds: {same}; read(write) identity on 100: {round_trip}; "
                  f"scale-invariant selections on 50 instances x 3 factors: {scale_ok}")
    assert ok
