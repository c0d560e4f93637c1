"""Order-bound dynamic program over the divisor triangle.

For each cell (a, b) the table stores a proven lower bound on the
minimum distance of the dual of the code of a*Q0 + b*Qinf.  A step from
(a, b) to (a+1, b) or (a, b+1) is usable only when the two codes differ,
and then contributes the nu count of non-gap pairs through the enlarged
coefficient; the recursion seeds with the Goppa bound on the boundary
diagonal and takes the best of the two walk directions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import _kernels
from .curve import CurveParams
from .riemann_roch import TwoPointDivisor
from .semigroup import tau, tau_inv


def nu_q0(a: int, b: int, params: CurveParams) -> int:
    """Non-gap pairs at Q0 summing to a+1, second slot relative to b*Qinf.

    Counts v in [-b, a+1] with tau(v) <= b and tau(a+1-v) <= 0.  This is
    the horizontal walk weight of the table recursion.
    """
    if a < 0 or b < 0:
        raise ValueError("nu_q0 requires a, b >= 0")
    return sum(
        1
        for v in range(-b, a + 2)
        if tau(v, params) <= b and tau(a + 1 - v, params) <= 0
    )


def nu_qinf(a: int, b: int, params: CurveParams) -> int:
    """Mirror of nu_q0 with the roles of the two places exchanged."""
    if a < 0 or b < 0:
        raise ValueError("nu_qinf requires a, b >= 0")
    return sum(
        1
        for v in range(-a, b + 2)
        if tau_inv(v, params) <= a and tau_inv(b + 1 - v, params) <= 0
    )


@dataclass(frozen=True)
class BoundTable:
    """Finished order-bound table plus the grids used to build it.

    entries[a, b] is valid for a + b <= delta and -1 outside the
    triangle.  dim_codes covers [0, delta+1]^2 so that the recursion's
    (a+1, b) lookups stay in range; nu_h and nu_v hold the walk weights
    for the whole triangle.
    """

    params: CurveParams
    delta: int
    entries: np.ndarray = field(repr=False)
    dim_codes: np.ndarray = field(repr=False)
    nu_h: np.ndarray = field(repr=False)
    nu_v: np.ndarray = field(repr=False)


def _tau_array(params: CurveParams, lo: int, hi: int) -> np.ndarray:
    """tau(i) for i in [lo, hi], computed in closed form without loops.

    Vectorizes the Euclidean decomposition i = -k(q^e+1) - l*r - m.
    """
    q, r = params.q, params.r
    i = np.arange(lo, hi + 1, dtype=np.int64)
    m = (-i) % r
    s = (-i - m) // r
    l = s % (q + 1)
    k = (s - l) // (q + 1)
    return k * params.gen_x + l * params.gen_y + m * params.gen_z


def _dim_code_grid(params: CurveParams, delta: int, tau_all, off: int) -> np.ndarray:
    """dim_code(a, b) for all 0 <= a, b <= delta + 1 via prefix sums."""
    w = params.w_deg
    size = delta + 2
    dc = np.zeros((size, size), dtype=np.int64)
    a_idx = np.arange(size)
    for b in range(size):
        # dim_l(a, b): count i in [-b, a] with tau(i) <= b.
        ind = tau_all[off - b : off + delta + 3] <= b
        cum = np.cumsum(ind)
        dl = cum[a_idx + b]
        # Correction dim_l(a+1, b-w): the subspace vanishing on all of D.
        bp = b - w
        lo = -bp
        ind2 = tau_all[off + lo : off + delta + 3] <= bp
        cum2 = np.concatenate(([0], np.cumsum(ind2)))
        pos = np.clip(a_idx + 1 - lo + 1, 0, cum2.size - 1)
        corr = cum2[pos]
        dc[:, b] = dl - corr
    return dc


def _triangle_indices(delta: int):
    a, b = np.indices((delta + 1, delta + 1))
    mask = a + b <= delta
    return a[mask], b[mask]


def build_table(params: CurveParams, delta: Optional[int] = None) -> BoundTable:
    """Run the backtracking recursion over the full triangle a+b <= delta.

    delta defaults to n_places + 2*genus, past which the bound equals
    the Goppa bound anyway.  Two structural facts are asserted during
    the build rather than assumed: whenever the horizontal (resp.
    vertical) codes differ the corresponding nu count is nonzero, and
    the finished table dominates the Goppa bound cell by cell.
    """
    if delta is None:
        delta = params.delta_default
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    g = params.genus

    off = delta + 2
    tau_all = _tau_array(params, -off, delta + 2)
    taui_all = np.empty_like(tau_all)
    for j in range(-off, delta + 3):
        taui_all[j + off] = tau_inv(j, params)

    u = np.arange(0, delta + 2)
    members_q0 = u[tau_all[u + off] <= 0]
    members_qinf = u[taui_all[u + off] <= 0]

    nu_h = _kernels.nu_grid(tau_all, members_q0, delta, off)
    nu_v = _kernels.nu_grid(taui_all, members_qinf, delta, off).T.copy()

    dim_codes = _dim_code_grid(params, delta, tau_all, off)

    entries = np.full((delta + 1, delta + 1), -1, dtype=np.int64)
    aa_full = np.arange(delta + 1)
    entries[aa_full, delta - aa_full] = delta - 2 * g + 2

    bad_h = bad_v = 0
    for d in range(delta - 1, -1, -1):
        aa = np.arange(d + 1)
        bb = d - aa
        right = entries[aa + 1, bb]
        up = entries[aa, bb + 1]
        dc = dim_codes[aa, bb]
        hchange = dc != dim_codes[aa + 1, bb]
        vchange = dc != dim_codes[aa, bb + 1]
        wh = nu_h[aa, bb]
        wv = nu_v[aa, bb]
        bad_h += int(np.count_nonzero(hchange & (wh == 0)))
        bad_v += int(np.count_nonzero(vchange & (wv == 0)))
        hb = np.where(hchange & (wh != 0), np.minimum(wh, right), right)
        vb = np.where(vchange & (wv != 0), np.minimum(wv, up), up)
        entries[aa, bb] = np.maximum(hb, vb)

    # Differ-implies-witness: a dimension jump always has a function
    # realizing it, so the walk weight cannot vanish there.
    assert bad_h == 0 and bad_v == 0, (bad_h, bad_v)

    tri_a, tri_b = _triangle_indices(delta)
    goppa = tri_a + tri_b - 2 * g + 2
    assert bool(np.all(entries[tri_a, tri_b] >= goppa)), "Goppa domination failed"

    return BoundTable(
        params=params,
        delta=delta,
        entries=entries,
        dim_codes=dim_codes,
        nu_h=nu_h,
        nu_v=nu_v,
    )


def bound(d: TwoPointDivisor, table: BoundTable) -> int:
    """Order bound for the dual of the code of d; Goppa beyond the table."""
    a1, a2 = d
    if a1 < 0 or a2 < 0:
        raise ValueError("bound requires a nonnegative divisor")
    if a1 + a2 <= table.delta:
        return int(table.entries[a1, a2])
    return a1 + a2 - 2 * table.params.genus + 2


class BestCodeRow(NamedTuple):
    """Best bound for one dual dimension k, with the attaining divisor.

    d_1p restricts the same maximum to one-point cells (a=0 or b=0); it
    is None when no one-point cell attains dual dimension k.
    """

    k: int
    a1: int
    a2: int
    d_2p: int
    d_1p: Optional[int]


def best_codes_per_dimension(
    params: CurveParams, table: BoundTable
) -> list[BestCodeRow]:
    """Strongest table entry per dual dimension k, descending in k.

    For each k in [1, n], d_2p is the maximum bound over all cells whose
    code has dual dimension k, reported with the lexicographically
    smallest maximizing (a1, a2); d_1p is the same maximum over the two
    axes only.  Dimensions no cell attains are omitted.
    """
    n = params.n
    delta = table.delta
    aa, bb = _triangle_indices(delta)
    vals = table.entries[aa, bb]
    kk = n - table.dim_codes[aa, bb]
    valid = (kk >= 1) & (kk <= n)
    aa, bb, vals, kk = aa[valid], bb[valid], vals[valid], kk[valid]

    best2 = np.full(n + 1, -1, dtype=np.int64)
    np.maximum.at(best2, kk, vals)

    pair_rank = np.full(n + 1, np.iinfo(np.int64).max, dtype=np.int64)
    attain = vals == best2[kk]
    rank = aa * (delta + 2) + bb
    np.minimum.at(pair_rank, kk[attain], rank[attain])

    best1 = np.full(n + 1, -1, dtype=np.int64)
    axis = (aa == 0) | (bb == 0)
    np.maximum.at(best1, kk[axis], vals[axis])

    rows = []
    for k in range(n, 0, -1):
        if best2[k] < 0:
            continue
        a1, a2 = divmod(int(pair_rank[k]), delta + 2)
        d_1p = int(best1[k]) if best1[k] >= 0 else None
        rows.append(BestCodeRow(k, a1, a2, int(best2[k]), d_1p))
    return rows
