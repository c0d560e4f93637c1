"""Timing comparison of the compiled and pure kernel backends.

Runs the three hot kernels on representative workloads: row reduction of
a dense generator matrix over GF(64), exhaustive dual-codeword weight
enumeration, and the nu walk-weight grids for the full default table.
Usage: python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from gkcodes import TwoPointDivisor, new_curve, oracle
from gkcodes._kernels import _pure
from gkcodes.orderbound import _tau_array
from gkcodes.semigroup import tau_inv

try:
    from gkcodes._kernels import _core
except ImportError:
    raise SystemExit("compiled backend not built; nothing to compare")


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    params = new_curve(2, 3)
    field = oracle.make_field(2, 3)
    ft = field.tables

    code = oracle.generator_matrix(TwoPointDivisor(231, 0), params, field)
    mat = code.matrix
    basis = oracle.nullspace(code)  # 3 rows -> 64^3 words

    delta = params.delta_default
    off = delta + 2
    tau_all = _tau_array(params, -off, delta + 2)
    taui_all = np.array([tau_inv(j, params) for j in range(-off, delta + 3)])
    u = np.arange(0, delta + 2)
    members_q0 = u[tau_all[u + off] <= 0]
    members_qi = u[taui_all[u + off] <= 0]

    cases = [
        (
            f"row_reduce {mat.shape[0]}x{mat.shape[1]} GF(64)",
            lambda b: b.row_reduce(mat, ft, True),
        ),
        (
            f"min_nonzero_weight {basis.shape[0]}x{basis.shape[1]} GF(64)",
            lambda b: b.min_nonzero_weight(basis, ft),
        ),
        (
            f"nu_grid delta={delta} both places",
            lambda b: (
                b.nu_grid(tau_all, members_q0, delta, off),
                b.nu_grid(taui_all, members_qi, delta, off),
            ),
        ),
    ]

    print(f"{'kernel':44s} {'pure':>9s} {'compiled':>9s} {'speedup':>8s}")
    for name, run in cases:
        tp = best_of(lambda: run(_pure))
        tc = best_of(lambda: run(_core))
        print(f"{name:44s} {tp:8.4f}s {tc:8.4f}s {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
