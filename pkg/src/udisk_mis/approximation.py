"""Factor-2 approximation: solve each strip exactly, keep the larger parity union."""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .geometry import Instance, InputError, InvariantViolation, SolveResult, verify_independent
from .line_solvers import pair_state_dp_solve, paper_dp_solve, split_stabbed
from .strips import decompose

LINE_SOLVERS = {"pair-dp": pair_state_dp_solve, "paper-dp": paper_dp_solve}


@dataclass(frozen=True)
class ParityUnion:
    s_odd: frozenset[int]
    s_even: frozenset[int]
    chosen: str

    @property
    def best(self) -> frozenset[int]:
        return self.s_odd if self.chosen == "odd" else self.s_even


def combine_parity(strip_solutions: Sequence[SolveResult | None], k: int) -> ParityUnion:
    """Union strip solutions by 1-based strip parity; ties go to odd.

    ``strip_solutions[i]`` belongs to strip i + 1; ``None`` marks an empty strip.
    """
    if len(strip_solutions) != k:
        raise InvariantViolation(f"expected {k} strip solutions, got {len(strip_solutions)}")
    odd: set[int] = set()
    even: set[int] = set()
    seen: set[int] = set()
    for i, res in enumerate(strip_solutions):
        if res is None:
            continue
        if seen & res.selected:
            raise InvariantViolation(f"disk ids {sorted(seen & res.selected)} selected in two strips")
        seen |= res.selected
        (odd if i % 2 == 0 else even).update(res.selected)
    chosen = "odd" if len(odd) >= len(even) else "even"
    return ParityUnion(frozenset(odd), frozenset(even), chosen)


def approx2_solve(inst: Instance, line_solver: str = "pair-dp", closed: bool = False,
                  backend: str | None = None, workers: int = 1) -> SolveResult:
    """Strip-decomposition 2-approximation.

    With the default pair-dp line solver the answer is always independent and
    at least half the optimum. With paper-dp the union may be dependent;
    ``verified`` says which happened.
    """
    try:
        solve = LINE_SOLVERS[line_solver]
    except KeyError:
        raise InputError(f"unknown line solver {line_solver!r}; choose from {sorted(LINE_SOLVERS)}") from None
    t0 = time.perf_counter()
    sa = decompose(inst)

    def run(i):
        ids = sa.strips[i]
        if not ids:
            return None
        return solve(split_stabbed(inst, ids, sa.line_ys[i]), closed=closed, backend=backend)

    if workers > 1 and sa.k > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(sa.k)))
    else:
        results = [run(i) for i in range(sa.k)]

    union = combine_parity(results, sa.k)
    selected = union.best
    ok = verify_independent(inst, selected, closed)
    elapsed = time.perf_counter() - t0
    if line_solver == "pair-dp" and not ok:
        raise InvariantViolation("pair-dp parity union is not independent")
    stats = {
        "strips": sa.k,
        "odd_size": len(union.s_odd),
        "even_size": len(union.s_even),
        "table_cells": sum(r.stats.get("table_cells", 0) for r in results if r is not None),
    }
    return SolveResult(selected, "approx2", elapsed, stats, ok)
