"""Command line front end.

Four subcommands: params (curve constants as JSON), table (the full
order-bound table), best (strongest divisor per code dimension), and
verify (cross-validation against the exact small-field oracle).  All
output is deterministic for fixed arguments; verify takes an explicit
--seed for its sampling.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
from dataclasses import asdict
from typing import Optional, TextIO

from .curve import CurveParams, new_curve
from .orderbound import BoundTable, best_codes_per_dimension, bound, build_table
from .riemann_roch import TwoPointDivisor, dim_code

TABLE_COLUMNS = ["a", "b", "deg", "dim_code", "dual_dim", "goppa", "order_bound"]
BEST_COLUMNS = ["n", "k", "a1", "a2", "d_2P", "d_1P"]


def _render(rows, columns: list[str], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow(["" if v is None else v for v in row])
    elif fmt == "json":
        objs = [dict(zip(columns, row)) for row in rows]
        if objs:
            body = ",\n".join(json.dumps(o) for o in objs)
            out.write("[\n" + body + "\n]\n")
        else:
            out.write("[]\n")
    elif fmt == "md":
        out.write("| " + " | ".join(columns) + " |\n")
        out.write("|" + "|".join([" --- "] * len(columns)) + "|\n")
        for row in rows:
            cells = ["-" if v is None else str(v) for v in row]
            out.write("| " + " | ".join(cells) + " |\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")


def _table_rows(table: BoundTable):
    params = table.params
    for a in range(table.delta + 1):
        for b in range(table.delta + 1 - a):
            dim = int(table.dim_codes[a, b])
            yield (
                a,
                b,
                a + b,
                dim,
                params.n - dim,
                a + b - 2 * params.genus + 2,
                int(table.entries[a, b]),
            )


def cmd_params(args) -> int:
    params = new_curve(args.q, args.e)
    info = asdict(params)
    info["delta_default"] = params.delta_default
    _write_output(args.output, lambda out: out.write(json.dumps(info, indent=2) + "\n"))
    return 0


def cmd_table(args) -> int:
    params = new_curve(args.q, args.e)
    table = build_table(params, delta=args.max_degree)
    _write_output(
        args.output,
        lambda out: _render(_table_rows(table), TABLE_COLUMNS, args.format, out),
    )
    return 0


def cmd_best(args) -> int:
    params = new_curve(args.q, args.e)
    table = build_table(params, delta=args.max_degree)
    rows = [
        (params.n, r.k, r.a1, r.a2, r.d_2p, r.d_1p)
        for r in best_codes_per_dimension(params, table)
    ]
    _write_output(
        args.output, lambda out: _render(rows, BEST_COLUMNS, args.format, out)
    )
    return 0


def _sample_divisors(params: CurveParams, delta: int, count: int, seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = rng.randint(0, delta)
        b = rng.randint(0, delta - a)
        out.append(TwoPointDivisor(a, b))
    return out


def cmd_verify(args) -> int:
    from . import oracle

    params = new_curve(args.q, args.e)
    field = oracle.make_field(args.q, args.e)
    table = build_table(params)
    results: list[bool] = []

    def report(name: str, ok: bool, detail: str) -> None:
        results.append(ok)
        print(f"CHECK {name}: {'PASS' if ok else 'FAIL'} ({detail})")

    pts = oracle.enumerate_points(params, field)
    report(
        "point count",
        len(pts) == params.n_places - 1,
        f"{len(pts)} affine points, expected {params.n_places - 1}",
    )

    if field.order <= 16:
        cap = args.grid_cap if args.grid_cap is not None else 12
        divisors = [
            TwoPointDivisor(a, b)
            for a in range(cap + 1)
            for b in range(cap + 1)
        ]
        mode = f"grid [0,{cap}]^2"
    else:
        count = args.samples if args.samples is not None else 20
        divisors = _sample_divisors(params, table.delta, count, args.seed)
        mode = f"{len(divisors)} sampled divisors, seed {args.seed}"

    codes = {d: oracle.generator_matrix(d, params, field) for d in divisors}
    bad_rank = [
        d for d, c in codes.items() if c.rank() != dim_code(d, params)
    ]
    report(
        "rank equals dimension",
        not bad_rank,
        f"{mode}" + (f"; first mismatch {bad_rank[0]}" if bad_rank else ""),
    )

    bad_dual = [
        d for d in divisors if not oracle.check_duality(d, params, field)
    ]
    report(
        "duality",
        not bad_dual,
        f"m_dual={params.m_dual}"
        + (f"; first failure {bad_dual[0]}" if bad_dual else ""),
    )
    variant_ok = sum(
        oracle.check_duality(d, params, field, m_coeff=params.m_dual_variant)
        for d in divisors
    )
    print(
        f"INFO variant coefficient m={params.m_dual_variant}: "
        f"{variant_ok}/{len(divisors)} divisors satisfy duality"
    )

    probes = list(divisors)
    if field.order > 16:
        # add high-rate pairs whose duals are small enough to enumerate
        for a in range(table.delta, -1, -1):
            kd = params.n - dim_code(TwoPointDivisor(a, 0), params)
            if kd in (1, 2, 3):
                probes.append(TwoPointDivisor(a, 0))
            elif kd > 3:
                break
    checked = skipped = 0
    bad_bound: Optional[tuple] = None
    for d in probes:
        code = codes.get(d) or oracle.generator_matrix(d, params, field)
        w = oracle.dual_min_distance(code, limit=args.work_limit)
        if w is None:
            skipped += 1
            continue
        checked += 1
        lb = bound(d, table)
        if not (w is math.inf or w >= lb):
            bad_bound = (d, w, lb)
            break
    report(
        "bound soundness",
        bad_bound is None,
        f"{checked} exact distances, {skipped} infeasible"
        + (
            f"; {bad_bound[0]} has distance {bad_bound[1]} < bound {bad_bound[2]}"
            if bad_bound
            else ""
        ),
    )

    ok = all(results)
    print(f"VERIFY {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _write_output(path: Optional[str], writer) -> None:
    if path is None:
        writer(sys.stdout)
    else:
        with open(path, "w", newline="") as fh:
            writer(fh)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gkcodes",
        description="Order-bound tables for two-point codes on "
        "generalized Giulietti-Korchmaros curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", type=int, required=True, help="base field size")
        p.add_argument("--e", type=int, required=True, help="odd tower exponent")
        p.add_argument("--output", help="write to this file instead of stdout")

    p_params = sub.add_parser("params", help="print curve constants as JSON")
    common(p_params)
    p_params.set_defaults(func=cmd_params)

    p_table = sub.add_parser("table", help="full order-bound table")
    common(p_table)
    p_table.add_argument(
        "--max-degree",
        type=int,
        default=None,
        help="cap on divisor degree (default n_places + 2*genus)",
    )
    p_table.add_argument(
        "--format", choices=["csv", "json", "md"], default="csv"
    )
    p_table.set_defaults(func=cmd_table)

    p_best = sub.add_parser("best", help="best divisor per code dimension")
    common(p_best)
    p_best.add_argument("--max-degree", type=int, default=None)
    p_best.add_argument(
        "--format", choices=["csv", "json", "md"], default="csv"
    )
    p_best.set_defaults(func=cmd_best)

    p_verify = sub.add_parser(
        "verify", help="cross-validate against the exact oracle"
    )
    common(p_verify)
    p_verify.add_argument(
        "--grid-cap",
        type=int,
        default=None,
        help="exhaustive divisor grid edge for tiny fields (default 12)",
    )
    p_verify.add_argument(
        "--samples",
        type=int,
        default=None,
        help="sampled divisor count for larger fields (default 20)",
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument(
        "--work-limit",
        type=int,
        default=2**28,
        help="skip exact distances needing more than this many words",
    )
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
