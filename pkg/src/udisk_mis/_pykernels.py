"""Pure-Python kernels, used when the compiled extension is unavailable.

All arrays are 1-based along the disk axis: slot 0 stands for the "no disk"
sentinel and its coordinate entries are ignored. ``a_*`` arrays describe the
above side, ``b_*`` the below side, each sorted by (x, y, id). ``*_rank`` holds
every disk's position in the merged order of both sides.
"""
from __future__ import annotations

import numpy as np

NEG = -(1 << 30)


def _indep(x1, y1, x2, y2, r2x4, closed):
    dx = x1 - x2
    dy = y1 - y2
    d2 = dx * dx + dy * dy
    return d2 > r2x4 if closed else d2 >= r2x4


def ri_tables(ax, ay, bx, by, a_prev_b, b_prev_a, r, closed):
    """Rightmost-independent pointers for every disk on both sides.

    ``a_prev_b[k]`` is the number of below disks that precede above disk k in
    the merged order (``b_prev_a`` likewise), which is where the cross-side
    leftward scan starts.
    """
    n1 = len(ax) - 1
    n2 = len(bx) - 1
    t = 4.0 * r * r
    ax, ay, bx, by = ax.tolist(), ay.tolist(), bx.tolist(), by.tolist()
    ri_aa = [0] * (n1 + 1)
    ri_ab = [0] * (n1 + 1)
    ri_ba = [0] * (n2 + 1)
    ri_bb = [0] * (n2 + 1)
    for k in range(1, n1 + 1):
        x, y = ax[k], ay[k]
        for j in range(k - 1, 0, -1):
            if _indep(ax[j], ay[j], x, y, t, closed):
                ri_aa[k] = j
                break
        for j in range(int(a_prev_b[k]), 0, -1):
            if _indep(bx[j], by[j], x, y, t, closed):
                ri_ab[k] = j
                break
    for m in range(1, n2 + 1):
        x, y = bx[m], by[m]
        for j in range(int(b_prev_a[m]), 0, -1):
            if _indep(ax[j], ay[j], x, y, t, closed):
                ri_ba[m] = j
                break
        for j in range(m - 1, 0, -1):
            if _indep(bx[j], by[j], x, y, t, closed):
                ri_bb[m] = j
                break
    as_arr = lambda v: np.asarray(v, dtype=np.int64)  # noqa: E731
    return as_arr(ri_aa), as_arr(ri_ab), as_arr(ri_ba), as_arr(ri_bb)


def paper_dp_fill(ri_aa, ri_ab, ri_ba, ri_bb, a_rank, b_rank):
    """Fill the RI-jump table row by row; returns (values, took) arrays."""
    n1 = len(ri_aa) - 1
    n2 = len(ri_bb) - 1
    ri_aa, ri_ab, ri_ba, ri_bb = ri_aa.tolist(), ri_ab.tolist(), ri_ba.tolist(), ri_bb.tolist()
    a_rank, b_rank = a_rank.tolist(), b_rank.tolist()
    V = [[0] * (n2 + 1) for _ in range(n1 + 1)]
    took = [[0] * (n2 + 1) for _ in range(n1 + 1)]
    for k in range(n1 + 1):
        row = V[k]
        trow = took[k]
        for l in range(n2 + 1):
            if k == 0 and l == 0:
                continue
            if k > 0 and (l == 0 or a_rank[k] > b_rank[l]):
                take = V[ri_aa[k]][min(ri_ab[k], l)] + 1
                skip = V[k - 1][l]
            else:
                take = V[min(ri_ba[l], k)][ri_bb[l]] + 1
                skip = row[l - 1]
            if take > skip:
                row[l] = take
                trow[l] = 1
            else:
                row[l] = skip
    return np.array(V, dtype=np.int32), np.array(took, dtype=np.uint8)


def pair_dp_fill(ax, ay, bx, by, a_rank, b_rank, r, closed):
    """Exact DP over (last chosen above, last chosen below) frontier pairs.

    Returns ``(f, parent)``: ``f[a, b]`` is the largest independent set whose
    rightmost above member is a and rightmost below member is b (0 = none),
    or ``NEG`` if no such set exists; ``parent[a, b]`` is the frontier index
    on the moved side before the last disk was added.
    """
    n1 = len(ax) - 1
    n2 = len(bx) - 1
    t = 4.0 * r * r
    f = np.full((n1 + 1, n2 + 1), NEG, dtype=np.int32)
    parent = np.zeros((n1 + 1, n2 + 1), dtype=np.int32)
    f[0, 0] = 0
    events = sorted([(int(a_rank[k]), 0, k) for k in range(1, n1 + 1)]
                    + [(int(b_rank[m]), 1, m) for m in range(1, n2 + 1)])
    done_a = 0
    done_b = 0
    for _, side, i in events:
        if side == 0:
            x, y = ax[i], ay[i]
            rows = np.arange(0, done_a + 1)
            ok_r = np.ones(done_a + 1, dtype=bool)
            ok_r[1:] = _indep(ax[1:done_a + 1], ay[1:done_a + 1], x, y, t, closed)
            cols = np.arange(0, done_b + 1)
            ok_c = np.ones(done_b + 1, dtype=bool)
            ok_c[1:] = _indep(bx[1:done_b + 1], by[1:done_b + 1], x, y, t, closed)
            rows, cols = rows[ok_r], cols[ok_c]
            sub = f[np.ix_(rows, cols)]
            best = sub.max(axis=0)
            arg = rows[sub.argmax(axis=0)]
            good = best >= 0
            f[i, cols[good]] = best[good] + 1
            parent[i, cols[good]] = arg[good]
            done_a = i
        else:
            x, y = bx[i], by[i]
            rows = np.arange(0, done_a + 1)
            ok_r = np.ones(done_a + 1, dtype=bool)
            ok_r[1:] = _indep(ax[1:done_a + 1], ay[1:done_a + 1], x, y, t, closed)
            cols = np.arange(0, done_b + 1)
            ok_c = np.ones(done_b + 1, dtype=bool)
            ok_c[1:] = _indep(bx[1:done_b + 1], by[1:done_b + 1], x, y, t, closed)
            rows, cols = rows[ok_r], cols[ok_c]
            sub = f[np.ix_(rows, cols)]
            best = sub.max(axis=1)
            arg = cols[sub.argmax(axis=1)]
            good = best >= 0
            f[rows[good], i] = best[good] + 1
            parent[rows[good], i] = arg[good]
            done_b = i
    return f, parent
