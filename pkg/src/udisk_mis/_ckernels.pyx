# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled counterparts of ``_pykernels``; identical signatures and outputs."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.int32_t i32

cdef i32 NEG = -(1 << 30)


cdef inline bint _indep(double x1, double y1, double x2, double y2, double t, bint closed) noexcept nogil:
    cdef double dx = x1 - x2
    cdef double dy = y1 - y2
    cdef double d2 = dx * dx + dy * dy
    if closed:
        return d2 > t
    return d2 >= t


def ri_tables(double[::1] ax, double[::1] ay, double[::1] bx, double[::1] by,
              i64[::1] a_prev_b, i64[::1] b_prev_a, double r, bint closed):
    cdef Py_ssize_t n1 = ax.shape[0] - 1
    cdef Py_ssize_t n2 = bx.shape[0] - 1
    cdef double t = 4.0 * r * r
    out_aa = np.zeros(n1 + 1, dtype=np.int64)
    out_ab = np.zeros(n1 + 1, dtype=np.int64)
    out_ba = np.zeros(n2 + 1, dtype=np.int64)
    out_bb = np.zeros(n2 + 1, dtype=np.int64)
    cdef i64[::1] ri_aa = out_aa
    cdef i64[::1] ri_ab = out_ab
    cdef i64[::1] ri_ba = out_ba
    cdef i64[::1] ri_bb = out_bb
    cdef Py_ssize_t k, j
    cdef double x, y
    with nogil:
        for k in range(1, n1 + 1):
            x = ax[k]
            y = ay[k]
            j = k - 1
            while j > 0:
                if _indep(ax[j], ay[j], x, y, t, closed):
                    ri_aa[k] = j
                    break
                j -= 1
            j = a_prev_b[k]
            while j > 0:
                if _indep(bx[j], by[j], x, y, t, closed):
                    ri_ab[k] = j
                    break
                j -= 1
        for k in range(1, n2 + 1):
            x = bx[k]
            y = by[k]
            j = b_prev_a[k]
            while j > 0:
                if _indep(ax[j], ay[j], x, y, t, closed):
                    ri_ba[k] = j
                    break
                j -= 1
            j = k - 1
            while j > 0:
                if _indep(bx[j], by[j], x, y, t, closed):
                    ri_bb[k] = j
                    break
                j -= 1
    return out_aa, out_ab, out_ba, out_bb


def paper_dp_fill(i64[::1] ri_aa, i64[::1] ri_ab, i64[::1] ri_ba, i64[::1] ri_bb,
                  i64[::1] a_rank, i64[::1] b_rank):
    cdef Py_ssize_t n1 = ri_aa.shape[0] - 1
    cdef Py_ssize_t n2 = ri_bb.shape[0] - 1
    out_v = np.zeros((n1 + 1, n2 + 1), dtype=np.int32)
    out_t = np.zeros((n1 + 1, n2 + 1), dtype=np.uint8)
    cdef i32[:, ::1] V = out_v
    cdef cnp.uint8_t[:, ::1] took = out_t
    cdef Py_ssize_t k, l, p, q
    cdef i32 take, skip
    with nogil:
        for k in range(n1 + 1):
            for l in range(n2 + 1):
                if k == 0 and l == 0:
                    continue
                if k > 0 and (l == 0 or a_rank[k] > b_rank[l]):
                    q = ri_ab[k]
                    if q > l:
                        q = l
                    take = V[ri_aa[k], q] + 1
                    skip = V[k - 1, l]
                else:
                    p = ri_ba[l]
                    if p > k:
                        p = k
                    take = V[p, ri_bb[l]] + 1
                    skip = V[k, l - 1]
                if take > skip:
                    V[k, l] = take
                    took[k, l] = 1
                else:
                    V[k, l] = skip
    return out_v, out_t


def pair_dp_fill(double[::1] ax, double[::1] ay, double[::1] bx, double[::1] by,
                 i64[::1] a_rank, i64[::1] b_rank, double r, bint closed):
    """Same contract as the Python version.

    Rows (or columns) lying more than one diameter to the left of the new disk
    are non-adjacent to it, so their best value comes from a running prefix
    maximum; only the nearby ones are checked pairwise.
    """
    cdef Py_ssize_t n1 = ax.shape[0] - 1
    cdef Py_ssize_t n2 = bx.shape[0] - 1
    cdef double t = 4.0 * r * r
    cdef double reach = 2.0 * r
    out_f = np.full((n1 + 1, n2 + 1), NEG, dtype=np.int32)
    out_p = np.zeros((n1 + 1, n2 + 1), dtype=np.int32)
    out_pc = np.full((n1 + 1, n2 + 1), NEG, dtype=np.int32)
    out_pca = np.zeros((n1 + 1, n2 + 1), dtype=np.int32)
    out_pr = np.full((n1 + 1, n2 + 1), NEG, dtype=np.int32)
    out_pra = np.zeros((n1 + 1, n2 + 1), dtype=np.int32)
    near_a = np.zeros(n1 + 1, dtype=np.uint8)
    near_b = np.zeros(n2 + 1, dtype=np.uint8)
    cdef i32[:, ::1] f = out_f
    cdef i32[:, ::1] par = out_p
    cdef i32[:, ::1] pc = out_pc
    cdef i32[:, ::1] pca = out_pca
    cdef i32[:, ::1] pr = out_pr
    cdef i32[:, ::1] pra = out_pra
    cdef cnp.uint8_t[::1] ok_a = near_a
    cdef cnp.uint8_t[::1] ok_b = near_b
    cdef Py_ssize_t ia = 1, ib = 1, done_a = 0, done_b = 0
    cdef Py_ssize_t far_a = 0, far_b = 0
    cdef Py_ssize_t k, a, b
    cdef double x, y
    cdef i32 best, arg, v
    f[0, 0] = 0
    pc[0, 0] = 0
    pr[0, 0] = 0
    with nogil:
        while ia <= n1 or ib <= n2:
            if ia <= n1 and (ib > n2 or a_rank[ia] < b_rank[ib]):
                # above disk k extends row k over the processed columns
                k = ia
                x = ax[k]
                y = ay[k]
                while far_a + 1 < k and ax[far_a + 1] < x - reach:
                    far_a += 1
                for a in range(far_a + 1, k):
                    ok_a[a] = _indep(ax[a], ay[a], x, y, t, closed)
                for b in range(done_b + 1):
                    if b == 0 or _indep(bx[b], by[b], x, y, t, closed):
                        best = pc[far_a, b]
                        arg = pca[far_a, b]
                        for a in range(far_a + 1, k):
                            if ok_a[a] and f[a, b] > best:
                                best = f[a, b]
                                arg = <i32>a
                        if best >= 0:
                            f[k, b] = best + 1
                            par[k, b] = arg
                    v = f[k, b]
                    if v > pc[k - 1, b]:
                        pc[k, b] = v
                        pca[k, b] = <i32>k
                    else:
                        pc[k, b] = pc[k - 1, b]
                        pca[k, b] = pca[k - 1, b]
                    if b == 0 or v > pr[k, b - 1]:
                        pr[k, b] = v
                        pra[k, b] = <i32>b
                    else:
                        pr[k, b] = pr[k, b - 1]
                        pra[k, b] = pra[k, b - 1]
                done_a = k
                ia += 1
            else:
                k = ib
                x = bx[k]
                y = by[k]
                while far_b + 1 < k and bx[far_b + 1] < x - reach:
                    far_b += 1
                for b in range(far_b + 1, k):
                    ok_b[b] = _indep(bx[b], by[b], x, y, t, closed)
                for a in range(done_a + 1):
                    if a == 0 or _indep(ax[a], ay[a], x, y, t, closed):
                        best = pr[a, far_b]
                        arg = pra[a, far_b]
                        for b in range(far_b + 1, k):
                            if ok_b[b] and f[a, b] > best:
                                best = f[a, b]
                                arg = <i32>b
                        if best >= 0:
                            f[a, k] = best + 1
                            par[a, k] = arg
                    v = f[a, k]
                    if v > pr[a, k - 1]:
                        pr[a, k] = v
                        pra[a, k] = <i32>k
                    else:
                        pr[a, k] = pr[a, k - 1]
                        pra[a, k] = pra[a, k - 1]
                    if a == 0 or v > pc[a - 1, k]:
                        pc[a, k] = v
                        pca[a, k] = <i32>a
                    else:
                        pc[a, k] = pc[a - 1, k]
                        pca[a, k] = pca[a - 1, k]
                done_b = k
                ib += 1
    return out_f, out_p
