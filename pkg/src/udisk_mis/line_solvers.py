"""Exact solvers for disks that all stab one horizontal line.

Three solvers live here:

* ``paper_dp_solve`` - the RI-jump recurrence over prefix pairs (k, l) of the
  x-sorted above/below sequences. Kept exactly as the recurrence reads; its
  value never undershoots the optimum but can overshoot it (see ``C_STAR``),
  and its reconstructed set can be dependent.
* ``pair_state_dp_solve`` - exact DP whose state is the rightmost chosen disk
  on each side. A new disk only has to be checked against those two.
* ``brute_force_solve`` - branch and bound on the adjacency graph; the oracle.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import kernels
from .geometry import (
    Disk,
    Instance,
    InputError,
    InvariantViolation,
    SolveResult,
    adjacency_matrix,
    stabs_line,
    verify_independent,
    x_order_key,
)

DEFAULT_BRUTE_CAP = 40


class BruteForceCapExceeded(InputError):
    pass


def brute_cap() -> int:
    raw = os.environ.get("UDISK_BRUTE_CAP")
    if raw is None:
        return DEFAULT_BRUTE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"UDISK_BRUTE_CAP must be an integer, got {raw!r}") from None


def c_star() -> Instance:
    """Four above-line disks on which the RI-jump DP reports 3 but the optimum is 2.

    Ids 0..3 are A, B, C, D. Adjacent pairs: A-C, B-C, B-D.
    """
    return Instance(
        (
            Disk(0, -1.88, 0.50),
            Disk(1, -0.95, 0.01),
            Disk(2, -0.90, 0.50),
            Disk(3, 0.00, 0.01),
        ),
        0.5,
    )


C_STAR = c_star()


@dataclass(frozen=True)
class StabbedInstance:
    above: tuple[int, ...]
    below: tuple[int, ...]
    y_line: float
    parent: Instance

    @property
    def n1(self) -> int:
        return len(self.above)

    @property
    def n2(self) -> int:
        return len(self.below)

    def __len__(self):
        return self.n1 + self.n2

    @cached_property
    def packed(self) -> "_Packed":
        return _Packed.build(self)


@dataclass(frozen=True)
class _Packed:
    """1-based coordinate and rank arrays handed to the kernels."""

    ax: np.ndarray
    ay: np.ndarray
    bx: np.ndarray
    by: np.ndarray
    a_rank: np.ndarray
    b_rank: np.ndarray
    a_prev_b: np.ndarray
    b_prev_a: np.ndarray

    @classmethod
    def build(cls, si: StabbedInstance) -> "_Packed":
        inst = si.parent
        above = [inst.disk(i) for i in si.above]
        below = [inst.disk(i) for i in si.below]
        merged = sorted(above + below, key=x_order_key)
        rank = {d.id: p for p, d in enumerate(merged)}

        def coords(ds):
            x = np.zeros(len(ds) + 1)
            y = np.zeros(len(ds) + 1)
            x[1:] = [d.cx for d in ds]
            y[1:] = [d.cy for d in ds]
            return x, y

        ax, ay = coords(above)
        bx, by = coords(below)
        a_rank = np.array([-1] + [rank[d.id] for d in above], dtype=np.int64)
        b_rank = np.array([-1] + [rank[d.id] for d in below], dtype=np.int64)
        a_prev_b = np.searchsorted(b_rank[1:], a_rank).astype(np.int64)
        b_prev_a = np.searchsorted(a_rank[1:], b_rank).astype(np.int64)
        a_prev_b[0] = 0
        b_prev_a[0] = 0
        return cls(ax, ay, bx, by, a_rank, b_rank, a_prev_b, b_prev_a)


@dataclass(frozen=True)
class RiTable:
    """Rightmost-independent pointers as 1-based indices; 0 is the sentinel.

    ``aa[k]``/``ab[k]``: pointers of above disk k into the above/below
    sequence. ``ba[l]``/``bb[l]``: the same for below disk l.
    """

    aa: np.ndarray
    ab: np.ndarray
    ba: np.ndarray
    bb: np.ndarray
    si: StabbedInstance

    def _ids_map(self, own_above, own_below):
        out = {}
        for k, disk_id in enumerate(self.si.above, start=1):
            out[disk_id] = int(own_above[k])
        for m, disk_id in enumerate(self.si.below, start=1):
            out[disk_id] = int(own_below[m])
        return out

    @property
    def ri_above(self) -> dict[int, int]:
        return self._ids_map(self.aa, self.ba)

    @property
    def ri_below(self) -> dict[int, int]:
        return self._ids_map(self.ab, self.bb)


@dataclass(frozen=True)
class DpTable:
    values: np.ndarray
    took: np.ndarray
    ri: RiTable


def split_stabbed(inst: Instance, strip_ids: Sequence[int], y_line: float) -> StabbedInstance:
    above, below = [], []
    for i in strip_ids:
        d = inst.disk(i)
        if not stabs_line(d, y_line, inst.radius):
            raise InputError(f"disk {i} at y={d.cy} does not stab the line y={y_line}")
        (above if d.cy >= y_line else below).append(d)
    above.sort(key=x_order_key)
    below.sort(key=x_order_key)
    return StabbedInstance(tuple(d.id for d in above), tuple(d.id for d in below), float(y_line), inst)


def build_ri_tables(si: StabbedInstance, closed: bool = False, backend: str | None = None) -> RiTable:
    p = si.packed
    aa, ab, ba, bb = kernels.get(backend).ri_tables(
        p.ax, p.ay, p.bx, p.by, p.a_prev_b, p.b_prev_a, si.parent.radius, closed
    )
    return RiTable(aa, ab, ba, bb, si)


def paper_dp_table(si: StabbedInstance, closed: bool = False, backend: str | None = None) -> DpTable:
    ri = build_ri_tables(si, closed, backend)
    p = si.packed
    values, took = kernels.get(backend).paper_dp_fill(ri.aa, ri.ab, ri.ba, ri.bb, p.a_rank, p.b_rank)
    return DpTable(values, took, ri)


def reconstruct_solution(table: DpTable, si: StabbedInstance) -> set[int]:
    p = si.packed
    ri = table.ri
    k, l = si.n1, si.n2
    out = set()
    while k > 0 or l > 0:
        above_frontier = k > 0 and (l == 0 or p.a_rank[k] > p.b_rank[l])
        if table.took[k, l]:
            if above_frontier:
                out.add(si.above[k - 1])
                k, l = int(ri.aa[k]), min(int(ri.ab[k]), l)
            else:
                out.add(si.below[l - 1])
                k, l = min(int(ri.ba[l]), k), int(ri.bb[l])
        elif above_frontier:
            k -= 1
        else:
            l -= 1
    return out


def paper_dp_solve(si: StabbedInstance, closed: bool = False, backend: str | None = None) -> SolveResult:
    """Run the RI-jump recurrence; ``verified`` records whether the set is independent.

    ``values[n1, n2]`` is reported in ``stats["value"]``. It can differ from
    the size of the reconstructed set only if the recurrence is inconsistent
    with its own back-pointers, which the tests rule out.
    """
    t0 = time.perf_counter()
    table = paper_dp_table(si, closed, backend)
    selected = reconstruct_solution(table, si)
    elapsed = time.perf_counter() - t0
    value = int(table.values[si.n1, si.n2])
    stats = {"table_cells": int(table.values.size), "value": value}
    ok = verify_independent(si.parent, selected, closed)
    return SolveResult(frozenset(selected), "paper-dp", elapsed, stats, ok)


def pair_state_dp_solve(si: StabbedInstance, closed: bool = False, backend: str | None = None) -> SolveResult:
    t0 = time.perf_counter()
    p = si.packed
    f, parent = kernels.get(backend).pair_dp_fill(
        p.ax, p.ay, p.bx, p.by, p.a_rank, p.b_rank, si.parent.radius, closed
    )
    a, b = np.unravel_index(int(np.argmax(f)), f.shape)
    a, b = int(a), int(b)
    best = int(f[a, b])
    selected = set()
    while a > 0 or b > 0:
        ra = p.a_rank[a] if a > 0 else -1
        rb = p.b_rank[b] if b > 0 else -1
        prev = int(parent[a, b])
        if ra > rb:
            selected.add(si.above[a - 1])
            a = prev
        else:
            selected.add(si.below[b - 1])
            b = prev
    elapsed = time.perf_counter() - t0
    if len(selected) != best or not verify_independent(si.parent, selected, closed):
        raise InvariantViolation(
            f"pair-state DP produced an inconsistent set (value {best}, set {sorted(selected)})"
        )
    stats = {"table_cells": int(f.size), "value": best}
    return SolveResult(frozenset(selected), "pair-dp", elapsed, stats, True)


def brute_force_solve(inst: Instance, ids: Sequence[int] | None = None, closed: bool = False,
                      cap: int | None = None) -> SolveResult:
    """Exact MIS by branch and bound.

    Branches on the highest-degree remaining vertex (lowest id on ties):
    include it and drop its closed neighbourhood, or exclude it. A branch is
    cut when its count plus the remaining vertices cannot beat the incumbent.
    """
    cap = brute_cap() if cap is None else cap
    ids = sorted(d.id for d in inst.disks) if ids is None else sorted(set(ids))
    if len(ids) > cap:
        raise BruteForceCapExceeded(f"brute force refuses {len(ids)} disks (cap {cap}; set UDISK_BRUTE_CAP)")
    t0 = time.perf_counter()
    sub = Instance(tuple(inst.disk(i) for i in ids), inst.radius)
    adj = adjacency_matrix(sub, closed)
    n = len(ids)
    nbr = [sum(1 << j for j in np.flatnonzero(adj[i]).tolist()) for i in range(n)]

    best_count = -1
    best_mask = 0
    calls = 0

    def search(cand: int, count: int, chosen: int) -> None:
        nonlocal best_count, best_mask, calls
        calls += 1
        if count + cand.bit_count() <= best_count:
            return
        v, deg = -1, -1
        c = cand
        while c:
            low = c & -c
            i = low.bit_length() - 1
            dv = (nbr[i] & cand).bit_count()
            if dv > deg:
                v, deg = i, dv
            c ^= low
        if deg <= 0:
            # cand is empty or edgeless: take all of it
            best_count = count + cand.bit_count()
            best_mask = chosen | cand
            return
        bit = 1 << v
        search(cand & ~nbr[v] & ~bit, count + 1, chosen | bit)
        search(cand & ~bit, count, chosen)

    search((1 << n) - 1, 0, 0)
    selected = frozenset(ids[i] for i in range(n) if best_mask >> i & 1)
    elapsed = time.perf_counter() - t0
    return SolveResult(selected, "brute", elapsed, {"recursive_calls": calls}, True)
