"""Pure numpy backend for the field-arithmetic kernels.

All element encodings are integers in [0, order): the base-p digit
expansion of the encoding gives the coefficient vector of the element
over the prime field.  Under this encoding addition in characteristic 2
is XOR and odd-characteristic addition is digitwise mod p.
"""

from __future__ import annotations

import numpy as np


def elementwise_mul(a, b, ft):
    """Broadcasting elementwise product of encoded field elements."""
    a = np.asarray(a, dtype=np.int32)
    b = np.asarray(b, dtype=np.int32)
    a, b = np.broadcast_arrays(a, b)
    out = np.zeros(a.shape, dtype=np.int32)
    nz = (a != 0) & (b != 0)
    if nz.any():
        out[nz] = ft.exp[ft.log[a[nz]] + ft.log[b[nz]]]
    return out


def _add(a, b, ft):
    if ft.p == 2:
        return np.bitwise_xor(a, b)
    da = ft.digits[a].astype(np.int16)
    db = ft.digits[b]
    return (((da + db) % ft.p).astype(np.int64) @ ft.pows).astype(np.int32)


def _neg(a, ft):
    if ft.p == 2:
        return np.asarray(a, dtype=np.int32).copy()
    da = ft.digits[a].astype(np.int16)
    return (((ft.p - da) % ft.p).astype(np.int64) @ ft.pows).astype(np.int32)


def _sub(a, b, ft):
    if ft.p == 2:
        return np.bitwise_xor(a, b)
    da = ft.digits[a].astype(np.int16)
    db = ft.digits[b]
    return (((da - db) % ft.p).astype(np.int64) @ ft.pows).astype(np.int32)


def _inv(a: int, ft) -> int:
    if a == 0:
        raise ZeroDivisionError("inverse of zero field element")
    return int(ft.exp[(ft.order - 1) - ft.log[a]])


def row_reduce(mat, ft, full: bool = False):
    """Row echelon form over the field; (reduced matrix, pivot columns).

    full=True additionally clears entries above the pivots (RREF), which
    nullspace extraction needs; rank only needs the cheaper forward pass.
    """
    M = np.array(mat, dtype=np.int32, copy=True)
    if M.ndim != 2:
        raise ValueError("matrix must be 2-D")
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        pv = int(M[r, c])
        if pv != 1:
            M[r] = elementwise_mul(M[r], _inv(pv, ft), ft)
        if full:
            targets = np.nonzero(M[:, c])[0]
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.nonzero(M[r + 1 :, c])[0]
        if targets.size:
            prod = elementwise_mul(M[targets, c][:, None], M[r][None, :], ft)
            M[targets] = _sub(M[targets], prod, ft)
        pivots.append(c)
        r += 1
    return M, pivots


def min_nonzero_weight(basis, ft, block: int = 4096) -> int:
    """Exact minimum Hamming weight of the span of independent rows.

    Enumerates one representative per projective class (first nonzero
    coefficient fixed to 1), which covers every nonzero codeword weight.
    The trailing coefficient digits are enumerated as vectorized blocks
    of at most `block` words; any remaining digits run on an odometer
    with incremental prefix updates.
    """
    B = np.ascontiguousarray(np.asarray(basis, dtype=np.int32))
    if B.ndim != 2 or B.shape[0] == 0:
        raise ValueError("basis must be a nonempty 2-D array")
    k, n = B.shape
    s = ft.order

    tmax = 0
    while tmax < k - 1 and s ** (tmax + 1) <= block:
        tmax += 1
    # sufs[t]: all field-coefficient combinations of the last t rows.
    sufs = [np.zeros((1, n), dtype=np.int32)]
    for t in range(1, tmax + 1):
        mults = elementwise_mul(
            np.arange(s, dtype=np.int32)[:, None], B[k - t][None, :], ft
        )
        cur = _add(mults[:, None, :], sufs[-1][None, :, :], ft)
        sufs.append(cur.reshape(-1, n))

    best = n + 1
    for i in range(k):
        free = k - 1 - i
        t = min(free, tmax)
        outer = free - t
        suf = sufs[t]
        digits = [0] * outer
        # prefix[j] = B[i] + sum of the first j odometer rows scaled.
        prefix = [B[i]] * (outer + 1)
        while True:
            W = _add(prefix[outer][None, :], suf, ft)
            weights = np.count_nonzero(W, axis=1)
            w = int(weights.min())
            if w == 0:
                raise ValueError("basis rows are linearly dependent")
            if w < best:
                best = w
                if best == 1:
                    return 1
            j = outer - 1
            while j >= 0 and digits[j] == s - 1:
                digits[j] = 0
                j -= 1
            if j < 0:
                break
            digits[j] += 1
            row = B[i + 1 + j]
            prefix[j + 1] = _add(
                prefix[j], elementwise_mul(np.int32(digits[j]), row, ft), ft
            )
            # digits right of j were reset to zero
            for jj in range(j + 1, outer):
                prefix[jj + 1] = prefix[jj]
    return best


def nu_grid(tau_arr, members, delta: int, off: int):
    """nu counts on the whole triangle a + b <= delta.

    NU[a, b] = #{u in members, u <= a+b+1 : tau_arr[a+1-u+off] <= b},
    where members lists the non-gaps u with tau(u) <= 0 in [0, delta+1]
    and tau_arr[v + off] = tau(v).  Calling with the inverse map and the
    other place's members (then transposing) gives the vertical counts.
    """
    T = np.asarray(tau_arr, dtype=np.int64)
    mem = np.asarray(members, dtype=np.int64)
    NU = np.zeros((delta + 1, delta + 1), dtype=np.int32)
    for d in range(delta + 1):
        mm = mem[mem <= d + 1]
        if mm.size == 0:
            continue
        aa = np.arange(d + 1)
        cmp = T[(aa[:, None] + 1 - mm[None, :]) + off] <= (d - aa)[:, None]
        NU[aa, d - aa] = cmp.sum(axis=1).astype(np.int32)
    return NU
