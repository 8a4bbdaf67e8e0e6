# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops.  Signatures mirror :mod:`cyclocover._kernels._pykernels`."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef unsigned char u8


def lfsr_nonzero_mask(taps, init, Py_ssize_t length, add, mul):
    """Mask of nonzero terms of ``s[j+d] = sum_k taps[k] * s[j+k]`` over F_q."""
    cdef const u8[:, ::1] A = np.ascontiguousarray(add, dtype=np.uint8)
    cdef const u8[:, ::1] M = np.ascontiguousarray(mul, dtype=np.uint8)
    cdef cnp.int64_t[::1] t = np.ascontiguousarray(taps, dtype=np.int64)
    cdef Py_ssize_t d = t.shape[0]
    cdef cnp.ndarray[u8, ndim=1] out_arr = np.zeros(length, dtype=np.uint8)
    cdef u8[::1] out = out_arr
    cdef u8[::1] buf = np.zeros(2 * d + 1, dtype=np.uint8)
    cdef Py_ssize_t j, k, pos = 0
    cdef u8 acc, v
    cdef object seed = list(init)
    for k in range(d):
        buf[k] = <u8>seed[k]
    # buf holds a sliding window of d terms starting at pos (circular)
    for j in range(length):
        v = buf[pos]
        out[j] = 1 if v else 0
        acc = 0
        for k in range(d):
            acc = A[acc, M[<u8>t[k], buf[(pos + k) % d]]]
        buf[pos] = acc
        pos += 1
        if pos == d:
            pos = 0
    return out_arr


def coset_scan(mask, Py_ssize_t m):
    """First j < N/m whose residues ``j + i*(N/m)`` are all nonzero, else -1."""
    cdef const u8[::1] mk = np.ascontiguousarray(mask, dtype=np.uint8)
    cdef Py_ssize_t N = mk.shape[0]
    cdef Py_ssize_t s = N // m
    cdef Py_ssize_t j, i
    for j in range(s):
        i = 0
        while i < m and mk[j + i * s]:
            i += 1
        if i == m:
            return j
    return -1


cdef Py_ssize_t _scan(Py_ssize_t q, Py_ssize_t n, const u8[:, ::1] rows,
                      const u8[:, ::1] A, const u8[:, ::1] M, u8* xx, Py_ssize_t total):
    cdef Py_ssize_t c = rows.shape[0]
    cdef Py_ssize_t rank, i, j, r, t
    cdef u8 ip
    cdef bint hit
    for t in range(2 * n):
        xx[t] = 0
    for rank in range(total):
        hit = False
        for i in range(n):
            r = 0
            while r < c:
                ip = 0
                for j in range(n):
                    ip = A[ip, M[rows[r, j], xx[j - i + n]]]
                if ip:
                    break
                r += 1
            if r == c:
                hit = True
                break
        if not hit:
            return rank
        # odometer, digit 0 least significant; mirror into the second half
        t = 0
        while t < n:
            xx[t] += 1
            if xx[t] == q:
                xx[t] = 0
                xx[t + n] = 0
                t += 1
            else:
                xx[t + n] = xx[t]
                break
    return -1


def first_uncovered(Py_ssize_t q, Py_ssize_t n, rows, add, mul):
    """Rank of the first x with no shift sigma^i(x) in ker(rows), else -1."""
    cdef const u8[:, ::1] R = np.ascontiguousarray(rows, dtype=np.uint8).reshape(-1, n)
    cdef const u8[:, ::1] A = np.ascontiguousarray(add, dtype=np.uint8)
    cdef const u8[:, ::1] M = np.ascontiguousarray(mul, dtype=np.uint8)
    cdef u8[::1] xx = np.zeros(2 * n, dtype=np.uint8)
    return _scan(q, n, R, A, M, &xx[0], q ** n)


def first_covering_hyperplane(Py_ssize_t q, Py_ssize_t n, add, mul):
    """Rank of the first normalized dual vector whose hyperplane covers, else -1."""
    cdef const u8[:, ::1] A = np.ascontiguousarray(add, dtype=np.uint8)
    cdef const u8[:, ::1] M = np.ascontiguousarray(mul, dtype=np.uint8)
    cdef cnp.ndarray[u8, ndim=2] c_arr = np.zeros((1, n), dtype=np.uint8)
    cdef u8[:, ::1] cv = c_arr
    cdef u8[::1] xx = np.zeros(2 * n, dtype=np.uint8)
    cdef Py_ssize_t total = q ** n
    cdef Py_ssize_t rank, t, lead
    for rank in range(1, total):
        t = 0
        while t < n:
            cv[0, t] += 1
            if cv[0, t] == q:
                cv[0, t] = 0
                t += 1
            else:
                break
        lead = 0
        while cv[0, lead] == 0:
            lead += 1
        if cv[0, lead] != 1:
            continue
        if _scan(q, n, cv, A, M, &xx[0], total) == -1:
            return rank
    return -1
