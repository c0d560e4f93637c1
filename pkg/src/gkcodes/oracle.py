"""Exact ground truth at desk scale over small finite fields.

Everything the closed-form modules predict (dimensions, duality, bound
soundness) is checkable here by honest linear algebra: enumerate the
curve's rational points over GF(q^(2e)), evaluate the monomial basis,
row reduce, and brute-force dual codeword weights.  Field elements are
encoded as integers in [0, order) via base-p coefficient vectors of the
residue class modulo a fixed irreducible polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from . import _kernels
from ._kernels import FieldTables, elementwise_mul
from .curve import CurveParams
from .riemann_roch import TwoPointDivisor, basis_exponents
from .semigroup import PoleTriple

FIELD_ORDER_CAP = 2**16


def _poly_rem(dividend: list[int], divisor: list[int], p: int) -> list[int]:
    """Remainder of division by a monic polynomial, coefficients
    ascending mod p."""
    rem = list(dividend)
    while len(rem) >= len(divisor) and any(rem):
        lead = rem[-1]
        if lead:
            shift = len(rem) - len(divisor)
            for i in range(len(divisor)):
                rem[shift + i] = (rem[shift + i] - lead * divisor[i]) % p
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree
    1..deg/2; fine at the table sizes the cap allows."""
    import itertools

    deg = len(coeffs) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_rem(coeffs, divisor, p):
                return False
    return True


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class SmallField:
    """GF(p^deg) with log/antilog tables, p^deg <= 2^16.

    The modulus is the monic irreducible polynomial of degree deg whose
    ascending coefficient vector has the smallest integer encoding; this
    reproduces the documented choices w^2+w+1 for GF(4), w^2+1 for
    GF(9), and w^6+w+1 for GF(64), and is deterministic for every other
    size.  Elements are encoded as integers: digit i in base p is the
    coefficient of w^i.
    """

    def __init__(self, p: int, deg: int):
        if not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if deg < 1:
            raise ValueError(f"extension degree must be >= 1, got {deg}")
        if p**deg > FIELD_ORDER_CAP:
            raise ValueError(
                f"field order {p}^{deg} exceeds the oracle cap 2^16"
            )
        self.p = p
        self.deg = deg
        self.order = p**deg
        self.modulus = self._find_modulus()
        self._build_tables()
        self._tables: Optional[FieldTables] = None

    def _find_modulus(self) -> tuple[int, ...]:
        for enc in range(self.order):
            coeffs = [(enc // self.p**i) % self.p for i in range(self.deg)]
            coeffs.append(1)
            if _is_irreducible(coeffs, self.p):
                return tuple(coeffs)
        raise AssertionError("no irreducible polynomial found")

    def _enc_to_poly(self, v: int) -> list[int]:
        return [(v // self.p**i) % self.p for i in range(self.deg)]

    def _poly_to_enc(self, c: list[int]) -> int:
        return sum(ci * self.p**i for i, ci in enumerate(c))

    def _poly_mul(self, a: int, b: int) -> int:
        pa, pb = self._enc_to_poly(a), self._enc_to_poly(b)
        out = [0] * (2 * self.deg - 1)
        for i, ca in enumerate(pa):
            if ca:
                for j, cb in enumerate(pb):
                    out[i + j] = (out[i + j] + ca * cb) % self.p
        # reduce modulo the monic modulus
        for i in range(len(out) - 1, self.deg - 1, -1):
            lead = out[i]
            if lead:
                for j in range(self.deg):
                    out[i - self.deg + j] = (
                        out[i - self.deg + j] - lead * self.modulus[j]
                    ) % self.p
            out[i] = 0
        return self._poly_to_enc(out[: self.deg])

    def _build_tables(self):
        s = self.order
        self.exp = np.zeros(max(2 * (s - 1), 1), dtype=np.int32)
        self.log = np.zeros(s, dtype=np.int32)
        if s == 2:
            self.exp[:] = 1
            self.log[1] = 0
            return
        for cand in range(2, s):
            val = 1
            seen = []
            ok = True
            for step in range(s - 1):
                seen.append(val)
                val = self._poly_mul(val, cand)
                if val == 1 and step < s - 2:
                    ok = False
                    break
            if ok and val == 1:
                for i, v in enumerate(seen):
                    self.exp[i] = v
                    self.exp[i + s - 1] = v
                    self.log[v] = i
                return
        raise AssertionError("no multiplicative generator found")

    # scalar arithmetic on encodings

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out, mult = 0, 1
        for _ in range(self.deg):
            out += ((a + b) % self.p) * mult
            a //= self.p
            b //= self.p
            mult *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        out, mult = 0, 1
        for _ in range(self.deg):
            out += ((self.p - a % self.p) % self.p) * mult
            a //= self.p
            mult *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[int(self.log[a]) + int(self.log[b])])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return int(self.exp[(self.order - 1) - int(self.log[a])])

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k > 0:
                return 0
            if k == 0:
                return 1
            raise ZeroDivisionError("zero base with negative exponent")
        return int(self.exp[(int(self.log[a]) * k) % (self.order - 1)])

    @property
    def tables(self) -> FieldTables:
        if self._tables is None:
            pows = self.p ** np.arange(self.deg, dtype=np.int64)
            v = np.arange(self.order, dtype=np.int64)
            digits = ((v[:, None] // pows[None, :]) % self.p).astype(np.int16)
            self._tables = FieldTables(
                p=self.p,
                deg=self.deg,
                order=self.order,
                exp=self.exp,
                log=self.log,
                digits=digits,
                pows=pows,
            )
        return self._tables


@lru_cache(maxsize=None)
def make_field(q: int, e: int) -> SmallField:
    """GF(q^(2e)) for the oracle; rejects orders above 2^16."""
    if q ** (2 * e) > FIELD_ORDER_CAP:
        raise ValueError(
            f"field order {q}^{2 * e} exceeds the oracle cap 2^16"
        )
    p = q
    for cand in range(2, q + 1):
        if cand * cand > q:
            break
        if q % cand == 0:
            p = cand
            break
    a = 0
    qq = q
    while qq > 1:
        assert qq % p == 0, f"{q} is not a prime power"
        qq //= p
        a += 1
    return SmallField(p, 2 * e * a)


class RationalPoint(NamedTuple):
    """Affine coordinates (x, y, z) as encoded field elements.

    Satisfies x^q + x = y^(q+1) and z^r = y^(q^2) - y; (0,0,0) is Q0.
    """

    x: int
    y: int
    z: int


@lru_cache(maxsize=None)
def enumerate_points(params: CurveParams, field: SmallField):
    """All rational points except Qinf, in lexicographic encoding order.

    Cached: the point list is pure in (params, field) and reused by
    every generator matrix.  Count is always n_places - 1.
    """
    q, e, r = params.q, params.e, params.r
    if field.order != q ** (2 * e):
        raise ValueError(
            f"field of order {field.order} does not match GF({q}^{2 * e})"
        )
    by_xq: dict[int, list[int]] = {}
    for x in range(field.order):
        by_xq.setdefault(field.add(field.pow(x, q), x), []).append(x)
    by_zr: dict[int, list[int]] = {}
    for z in range(field.order):
        by_zr.setdefault(field.pow(z, r), []).append(z)
    pts = []
    for y in range(field.order):
        lhs1 = field.pow(y, q + 1)
        lhs2 = field.sub(field.pow(y, q * q), y)
        for x in by_xq.get(lhs1, ()):
            for z in by_zr.get(lhs2, ()):
                pts.append((x, y, z))
    pts.sort()
    assert len(pts) == params.n_places - 1, (len(pts), params.n_places - 1)
    return tuple(RationalPoint(*t) for t in pts)


def evaluate_monomial(t: PoleTriple, pt: RationalPoint, field: SmallField) -> int:
    """x^k * y^l * z^m at the point, with 0^0 = 1.

    A zero base with a negative exponent raises; on the evaluation set
    this cannot happen because x vanishes only at Q0 and l, m >= 0.
    """
    return field.mul(
        field.mul(field.pow(pt.x, t.k), field.pow(pt.y, t.l)),
        field.pow(pt.z, t.m),
    )


def _pow_vec(a: np.ndarray, k: int, ft: FieldTables) -> np.ndarray:
    out = np.zeros(a.shape, dtype=np.int32)
    if k == 0:
        out[:] = 1
        return out
    nz = a != 0
    if k < 0 and not nz.all():
        raise ZeroDivisionError("zero base with negative exponent")
    kk = k % (ft.order - 1)
    out[nz] = ft.exp[(ft.log[a[nz]].astype(np.int64) * kk) % (ft.order - 1)]
    return out


@dataclass(eq=False)
class EvalCode:
    """Evaluated generator matrix of one two-point divisor.

    points excludes Q0, so columns match the length-n evaluation set;
    rows follow basis_exponents order.  rank is computed on demand and
    cached (it equals dim_code of the divisor; tests enforce that).
    """

    divisor: TwoPointDivisor
    points: tuple[RationalPoint, ...]
    exponents: tuple[PoleTriple, ...]
    matrix: np.ndarray
    field: SmallField
    _rank: Optional[int] = dc_field(default=None, repr=False)

    def rank(self) -> int:
        if self._rank is None:
            _, piv = _kernels.row_reduce(self.matrix, self.field.tables)
            self._rank = len(piv)
        return self._rank


def generator_matrix(
    d: TwoPointDivisor, params: CurveParams, field: SmallField
) -> EvalCode:
    """Evaluate the monomial basis of L(d) at every point of D."""
    d = TwoPointDivisor(*d)
    pts = enumerate_points(params, field)
    support = tuple(pt for pt in pts if pt != (0, 0, 0))
    exps = tuple(basis_exponents(d, params))
    ft = field.tables
    xs = np.array([pt.x for pt in support], dtype=np.int32)
    ys = np.array([pt.y for pt in support], dtype=np.int32)
    zs = np.array([pt.z for pt in support], dtype=np.int32)
    mat = np.empty((len(exps), len(support)), dtype=np.int32)
    for i, (k, l, m) in enumerate(exps):
        row = elementwise_mul(_pow_vec(xs, k, ft), _pow_vec(ys, l, ft), ft)
        mat[i] = elementwise_mul(row, _pow_vec(zs, m, ft), ft)
    return EvalCode(
        divisor=d, points=support, exponents=exps, matrix=mat, field=field
    )


def nullspace(code: EvalCode) -> np.ndarray:
    """Basis of the dual code (right kernel of the generator matrix)."""
    ft = code.field.tables
    R, piv = _kernels.row_reduce(code.matrix, ft, full=True)
    n = code.matrix.shape[1]
    free = [c for c in range(n) if c not in set(piv)]
    B = np.zeros((len(free), n), dtype=np.int32)
    for bi, fc in enumerate(free):
        B[bi, fc] = 1
        for ri, pc in enumerate(piv):
            B[bi, pc] = code.field.neg(int(R[ri, fc]))
    return B


def dual_min_distance(code: EvalCode, limit: int = 2**28):
    """Exact minimum distance of the dual code by full enumeration.

    Returns math.inf for a zero dual code (no nonzero words) and None
    when order**dual_dim exceeds the work limit, i.e. the enumeration is
    infeasible.
    """
    n = code.matrix.shape[1]
    kd = n - code.rank()
    if kd == 0:
        return math.inf
    if code.field.order**kd > limit:
        return None
    B = nullspace(code)
    return int(_kernels.min_nonzero_weight(B, code.field.tables))


def _zf_exponents(params: CurveParams) -> list[int]:
    """Exponents of the monomials of z*f, where f has the nonzero
    z-values of the rational points as its simple roots."""
    q, e, r = params.q, params.e, params.r
    t = (e - 1) // 2
    exps = [1]
    for i in range(t):
        exps.append(1 + r * (q ** (2 * i + 2) - 1 + q**e - q))
        exps.append(1 + r * q * (q ** (2 * i + 2) - 1))
    return exps


def dual_multipliers(
    params: CurveParams, field: SmallField, points
) -> np.ndarray:
    """Column multipliers (zf)'(z(P)) relating the dual to a two-point code.

    The formal derivative is taken in characteristic p.  Multipliers are
    provably nonzero on D (z*f has simple roots); a zero is a hard error
    because it would falsify that premise.
    """
    deriv = [
        (E - 1, E % field.p) for E in _zf_exponents(params) if E % field.p
    ]
    out = np.empty(len(points), dtype=np.int32)
    for j, pt in enumerate(points):
        acc = 0
        for ex, coeff in deriv:
            acc = field.add(acc, field.mul(coeff, field.pow(pt.z, ex)))
        if acc == 0:
            raise ArithmeticError(f"dual multiplier vanishes at {pt}")
        out[j] = acc
    return out


def check_duality(
    d: TwoPointDivisor,
    params: CurveParams,
    field: SmallField,
    m_coeff: Optional[int] = None,
) -> bool:
    """Verify that the dual code is the multiplier-scaled two-point code.

    Scales the nullspace of the generator matrix of d coordinatewise by
    the dual multipliers and tests row-space equality (mutual rank)
    against the code of -(a1+1)*Q0 + (m_coeff - a2)*Qinf.  m_coeff
    defaults to params.m_dual; pass params.m_dual_variant to probe the
    alternative coefficient.
    """
    d = TwoPointDivisor(*d)
    if m_coeff is None:
        m_coeff = params.m_dual
    ft = field.tables
    code = generator_matrix(d, params, field)
    nsp = nullspace(code)
    h = dual_multipliers(params, field, code.points)
    scaled = elementwise_mul(nsp, h[None, :], ft)
    dual_div = TwoPointDivisor(-(d.a1 + 1), m_coeff - d.a2)
    gh = generator_matrix(dual_div, params, field)
    _, piv1 = _kernels.row_reduce(scaled, ft)
    _, piv3 = _kernels.row_reduce(np.vstack([scaled, gh.matrix]), ft)
    r1, r2, r3 = len(piv1), gh.rank(), len(piv3)
    return r1 == r2 == r3
