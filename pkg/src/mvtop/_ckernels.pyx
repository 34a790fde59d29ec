# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Mirrors ``_pykernels`` exactly (same signatures, same results)."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64

BACKEND = "cython"

cdef enum:
    LAW_MEET = 0
    LAW_OPLUS = 1
    LAW_ODOT = 2
    LAW_MONO = 3
    OP_JOIN = 0
    OP_MEET = 1
    OP_OPLUS = 2
    OP_ODOT = 3
    OP_SCALAR = 4


cdef inline i64 _min(i64 a, i64 b) nogil:
    return a if a < b else b


cdef inline i64 _max(i64 a, i64 b) nogil:
    return a if a > b else b


cdef i64[::1] _weights(Py_ssize_t n, i64 q):
    cdef i64[::1] w = np.empty(n, dtype=np.int64)
    cdef Py_ssize_t t
    cdef i64 acc = 1
    for t in range(n - 1, -1, -1):
        w[t] = acc
        acc *= q + 1
    return w


def interior_rows(alphas, opens):
    cdef const i64[:, ::1] a = np.ascontiguousarray(alphas, dtype=np.int64)
    cdef const i64[:, ::1] o = np.ascontiguousarray(opens, dtype=np.int64)
    cdef Py_ssize_t k = a.shape[0], n = a.shape[1], m = o.shape[0]
    out_arr = np.zeros((k, n), dtype=np.int64)
    cdef i64[:, ::1] out = out_arr
    cdef Py_ssize_t i, b, t
    cdef bint ok
    with nogil:
        for i in range(k):
            for b in range(m):
                ok = True
                for t in range(n):
                    if o[b, t] > a[i, t]:
                        ok = False
                        break
                if ok:
                    for t in range(n):
                        if o[b, t] > out[i, t]:
                            out[i, t] = o[b, t]
    return out_arr


def pair_laws(fvec, vec, i64 q, i64 limit):
    cdef const i64[:, ::1] f = np.ascontiguousarray(fvec, dtype=np.int64)
    cdef const i64[:, ::1] v = np.ascontiguousarray(vec, dtype=np.int64)
    cdef Py_ssize_t N = v.shape[0], n = v.shape[1]
    cdef i64[::1] w = _weights(n, q)
    counts_arr = np.zeros(4, dtype=np.int64)
    cdef i64[::1] counts = counts_arr
    wit_arr = np.zeros((4 * limit, 3), dtype=np.int64)
    cdef i64[:, ::1] wit = wit_arr
    cdef Py_ssize_t nw = 0
    cdef Py_ssize_t i, j, t, law
    cdef i64 a, b, s, im, io, iu
    cdef bint bad[4]
    cdef bint le_ij, le_ji, gt_ij, gt_ji
    with nogil:
        for i in range(N):
            for j in range(i, N):
                im = 0
                io = 0
                iu = 0
                for t in range(n):
                    a = v[i, t]
                    b = v[j, t]
                    im += w[t] * _min(a, b)
                    s = a + b
                    io += w[t] * (q if s > q else s)
                    iu += w[t] * (s - q if s > q else 0)
                bad[0] = False
                bad[1] = False
                bad[2] = False
                bad[3] = False
                le_ij = True
                le_ji = True
                gt_ij = False
                gt_ji = False
                for t in range(n):
                    a = f[i, t]
                    b = f[j, t]
                    if _min(a, b) != f[im, t]:
                        bad[0] = True
                    s = a + b
                    if (q if s > q else s) > f[io, t]:
                        bad[1] = True
                    if (s - q if s > q else 0) > f[iu, t]:
                        bad[2] = True
                    if v[i, t] > v[j, t]:
                        le_ij = False
                    if v[j, t] > v[i, t]:
                        le_ji = False
                    if a > b:
                        gt_ij = True
                    if b > a:
                        gt_ji = True
                if (le_ij and gt_ij) or (le_ji and gt_ji):
                    bad[3] = True
                for law in range(4):
                    if bad[law]:
                        if counts[law] < limit:
                            wit[nw, 0] = law
                            wit[nw, 1] = i
                            wit[nw, 2] = j
                            nw += 1
                        counts[law] += 1
    return counts_arr, np.array(wit_arr[:nw])


def u6_joins(mu, vec):
    cdef const i64[:, ::1] m = np.ascontiguousarray(mu, dtype=np.int64)
    cdef const i64[:, ::1] v = np.ascontiguousarray(vec, dtype=np.int64)
    cdef Py_ssize_t N = v.shape[0], n = v.shape[1]
    out_arr = np.zeros((N, n), dtype=np.int64)
    cdef i64[:, ::1] out = out_arr
    cdef Py_ssize_t i, b, t
    cdef bint ok
    with nogil:
        for i in range(N):
            for b in range(N):
                ok = True
                for t in range(n):
                    if v[b, t] > m[i, t]:
                        ok = False
                        break
                if ok:
                    for t in range(n):
                        if m[b, t] > out[i, t]:
                            out[i, t] = m[b, t]
    return out_arr


def closure_violations(members, open_idx, vec, i64 q, dlevels, i64 limit):
    cdef const cnp.uint8_t[::1] mem = np.ascontiguousarray(members, dtype=np.uint8)
    cdef const i64[::1] opens = np.ascontiguousarray(open_idx, dtype=np.int64)
    cdef const i64[:, ::1] v = np.ascontiguousarray(vec, dtype=np.int64)
    cdef const i64[::1] dl = np.ascontiguousarray(dlevels, dtype=np.int64)
    cdef Py_ssize_t n = v.shape[1], M = opens.shape[0], nd = dl.shape[0]
    cdef i64[::1] w = _weights(n, q)
    counts_arr = np.zeros(5, dtype=np.int64)
    cdef i64[::1] counts = counts_arr
    wit_arr = np.zeros((5 * limit, 3), dtype=np.int64)
    cdef i64[:, ::1] wit = wit_arr
    cdef Py_ssize_t nw = 0
    cdef Py_ssize_t x, y, t, r, op
    cdef i64 ia, ib, a, b, s, idx[4]
    with nogil:
        for x in range(M):
            ia = opens[x]
            for y in range(x, M):
                ib = opens[y]
                idx[0] = 0
                idx[1] = 0
                idx[2] = 0
                idx[3] = 0
                for t in range(n):
                    a = v[ia, t]
                    b = v[ib, t]
                    idx[0] += w[t] * _max(a, b)
                    idx[1] += w[t] * _min(a, b)
                    s = a + b
                    idx[2] += w[t] * (q if s > q else s)
                    idx[3] += w[t] * (s - q if s > q else 0)
                for op in range(4):
                    if not mem[idx[op]]:
                        if counts[op] < limit:
                            wit[nw, 0] = op
                            wit[nw, 1] = ia
                            wit[nw, 2] = ib
                            nw += 1
                        counts[op] += 1
            for r in range(nd):
                idx[0] = 0
                for t in range(n):
                    s = dl[r] + v[ia, t]
                    idx[0] += w[t] * (s - q if s > q else 0)
                if not mem[idx[0]]:
                    if counts[OP_SCALAR] < limit:
                        wit[nw, 0] = OP_SCALAR
                        wit[nw, 1] = dl[r]
                        wit[nw, 2] = ia
                        nw += 1
                    counts[OP_SCALAR] += 1
    return counts_arr, np.array(wit_arr[:nw])

