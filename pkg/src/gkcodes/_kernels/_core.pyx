# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the field-arithmetic kernels.

Same API and encoding conventions as _pure; scalar C loops instead of
vectorized numpy.  Addition works digitwise on the base-p encoding, so
no addition tables are required.
"""

import numpy as np


cdef inline int fadd(int a, int b, int p, int deg) noexcept nogil:
    cdef int out = 0, mult = 1, i
    if p == 2:
        return a ^ b
    for i in range(deg):
        out += ((a % p + b % p) % p) * mult
        a //= p
        b //= p
        mult *= p
    return out


cdef inline int fneg(int a, int p, int deg) noexcept nogil:
    cdef int out = 0, mult = 1, i
    if p == 2:
        return a
    for i in range(deg):
        out += ((p - a % p) % p) * mult
        a //= p
        mult *= p
    return out


cdef inline int fsub(int a, int b, int p, int deg) noexcept nogil:
    if p == 2:
        return a ^ b
    return fadd(a, fneg(b, p, deg), p, deg)


cdef inline int fmul(int a, int b, const int[::1] exp, const int[::1] log) noexcept nogil:
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


def row_reduce(mat, ft, bint full=False):
    """Row echelon form over the field; (reduced matrix, pivot columns)."""
    M = np.array(mat, dtype=np.int32, copy=True, order="C")
    if M.ndim != 2:
        raise ValueError("matrix must be 2-D")
    cdef int rows = M.shape[0], cols = M.shape[1]
    pivots = []
    if rows == 0 or cols == 0:
        return M, pivots
    cdef int[:, ::1] m = M
    cdef const int[::1] exp = ft.exp
    cdef const int[::1] log = ft.log
    cdef int p = ft.p, deg = ft.deg, order = ft.order
    cdef int r = 0, c, i, j, t, pv, pinv, f, tmp
    for c in range(cols):
        if r == rows:
            break
        i = -1
        for j in range(r, rows):
            if m[j, c] != 0:
                i = j
                break
        if i < 0:
            continue
        if i != r:
            for t in range(cols):
                tmp = m[r, t]
                m[r, t] = m[i, t]
                m[i, t] = tmp
        pv = m[r, c]
        if pv != 1:
            pinv = exp[(order - 1) - log[pv]]
            for t in range(c, cols):
                m[r, t] = fmul(m[r, t], pinv, exp, log)
        for j in range(0 if full else r + 1, rows):
            if j == r:
                continue
            f = m[j, c]
            if f != 0:
                for t in range(c, cols):
                    m[j, t] = fsub(m[j, t], fmul(f, m[r, t], exp, log), p, deg)
        pivots.append(c)
        r += 1
    return M, pivots


def min_nonzero_weight(basis, ft, int block=4096):
    """Exact minimum weight of the span; one word per projective class.

    block is accepted for API parity with the pure backend; the scalar
    odometer needs no block tuning.
    """
    B = np.ascontiguousarray(np.asarray(basis, dtype=np.int32))
    if B.ndim != 2 or B.shape[0] == 0:
        raise ValueError("basis must be a nonempty 2-D array")
    cdef int k = B.shape[0], n = B.shape[1]
    cdef int[:, ::1] b = B
    cdef const int[::1] exp = ft.exp
    cdef const int[::1] log = ft.log
    cdef int p = ft.p, deg = ft.deg, s = ft.order
    word_arr = np.empty(n, dtype=np.int32)
    dig_arr = np.zeros(k, dtype=np.int32)
    cdef int[::1] w = word_arr
    cdef int[::1] dig = dig_arr
    cdef int best = n + 1, i, j, t, wt, dc
    cdef bint dependent = False
    for i in range(k):
        for j in range(i + 1, k):
            dig[j] = 0
        for t in range(n):
            w[t] = b[i, t]
        while True:
            wt = 0
            for t in range(n):
                if w[t] != 0:
                    wt += 1
            if wt == 0:
                dependent = True
                break
            if wt < best:
                best = wt
                if best == 1:
                    return 1
            j = k - 1
            while j > i:
                if dig[j] < s - 1:
                    dc = fsub(dig[j] + 1, dig[j], p, deg)
                    dig[j] += 1
                    for t in range(n):
                        w[t] = fadd(w[t], fmul(dc, b[j, t], exp, log), p, deg)
                    break
                else:
                    dc = fneg(s - 1, p, deg)
                    dig[j] = 0
                    for t in range(n):
                        w[t] = fadd(w[t], fmul(dc, b[j, t], exp, log), p, deg)
                    j -= 1
            if j == i:
                break
        if dependent:
            raise ValueError("basis rows are linearly dependent")
    return best


def nu_grid(tau_arr, members, int delta, int off):
    """nu counts on the triangle a + b <= delta; see the pure backend."""
    T = np.ascontiguousarray(np.asarray(tau_arr, dtype=np.int64))
    mem = np.ascontiguousarray(np.asarray(members, dtype=np.int64))
    NU = np.zeros((delta + 1, delta + 1), dtype=np.int32)
    cdef const long long[::1] tv = T
    cdef const long long[::1] mv = mem
    cdef int[:, ::1] nu = NU
    cdef int nm = mem.shape[0]
    cdef int a, bb, u, cnt
    cdef long long m
    for a in range(delta + 1):
        for bb in range(delta + 1 - a):
            cnt = 0
            for u in range(nm):
                m = mv[u]
                if m > a + bb + 1:
                    break
                if tv[a + 1 - m + off] <= bb:
                    cnt += 1
            nu[a, bb] = cnt
    return NU
