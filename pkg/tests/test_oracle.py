import math

import numpy as np
import pytest

from gkcodes import TwoPointDivisor, dim_code, new_curve
from gkcodes.oracle import (
    SmallField,
    check_duality,
    dual_min_distance,
    dual_multipliers,
    enumerate_points,
    evaluate_monomial,
    generator_matrix,
    make_field,
    nullspace,
)
from gkcodes.semigroup import PoleTriple


def test_documented_moduli():
    assert make_field(2, 1).modulus == (1, 1, 1)  # w^2+w+1
    assert SmallField(3, 2).modulus == (1, 0, 1)  # w^2+1
    assert make_field(2, 3).modulus == (1, 1, 0, 0, 0, 0, 1)  # w^6+w+1


def test_field_axioms_exhaustive():
    for f in [make_field(2, 1), SmallField(3, 2)]:
        s = f.order
        for a in range(s):
            assert f.add(a, f.neg(a)) == 0
            assert f.mul(a, 1) == a
            assert f.add(a, 0) == a
            if a:
                assert f.mul(a, f.inv(a)) == 1
        for a in range(s):
            for b in range(s):
                assert f.add(a, b) == f.add(b, a)
                assert f.mul(a, b) == f.mul(b, a)
                assert f.sub(a, b) == f.add(a, f.neg(b))
        # Frobenius is additive in characteristic p
        for a in range(s):
            for b in range(s):
                assert f.pow(f.add(a, b), f.p) == f.add(
                    f.pow(a, f.p), f.pow(b, f.p)
                )


def test_field_pow_edge_cases(f23):
    assert f23.pow(0, 0) == 1
    assert f23.pow(0, 5) == 0
    assert f23.pow(7, 0) == 1
    assert f23.pow(7, -1) == f23.inv(7)
    with pytest.raises(ZeroDivisionError):
        f23.pow(0, -1)
    with pytest.raises(ZeroDivisionError):
        f23.inv(0)


def test_field_validation():
    with pytest.raises(ValueError, match="prime"):
        SmallField(6, 2)
    with pytest.raises(ValueError, match=">= 1"):
        SmallField(2, 0)
    with pytest.raises(ValueError, match="cap"):
        SmallField(2, 17)
    with pytest.raises(ValueError, match="cap"):
        make_field(8, 3)


def test_make_field_composite_q():
    f = make_field(4, 1)  # GF(4^2) = GF(2^4)
    assert (f.p, f.deg, f.order) == (2, 4, 16)


def test_exp_log_tables(f23):
    s = f23.order
    assert len(f23.exp) == 2 * (s - 1)
    for i in range(s - 1):
        assert f23.exp[i] == f23.exp[i + s - 1]
        assert f23.log[f23.exp[i]] == i
    assert sorted(int(v) for v in f23.exp[: s - 1]) == list(range(1, s))


def test_enumerate_points_counts(p21, p23, f21, f23):
    assert len(enumerate_points(p21, f21)) == p21.n_places - 1
    assert len(enumerate_points(p23, f23)) == p23.n_places - 1
    p31 = new_curve(3, 1)
    assert len(enumerate_points(p31, make_field(3, 1))) == 27


def test_points_satisfy_curve_equations(p23, f23):
    q, r = p23.q, p23.r
    for pt in enumerate_points(p23, f23):
        assert f23.add(f23.pow(pt.x, q), pt.x) == f23.pow(pt.y, q + 1)
        assert f23.pow(pt.z, r) == f23.sub(f23.pow(pt.y, q * q), pt.y)


def test_points_sorted_and_include_origin(p23, f23):
    pts = enumerate_points(p23, f23)
    assert list(pts) == sorted(pts)
    assert (0, 0, 0) in pts


def test_enumerate_points_field_mismatch(p23, f21):
    with pytest.raises(ValueError, match="match"):
        enumerate_points(p23, f21)


def test_evaluate_monomial(p23, f23):
    pts = enumerate_points(p23, f23)
    origin = pts[0]
    assert evaluate_monomial(PoleTriple(0, 0, 0), origin, f23) == 1
    with pytest.raises(ZeroDivisionError):
        evaluate_monomial(PoleTriple(-1, 0, 0), origin, f23)
    probe = next(pt for pt in pts if pt.x and pt.y and pt.z)
    val = evaluate_monomial(PoleTriple(-1, 1, 2), probe, f23)
    expect = f23.mul(
        f23.mul(f23.inv(probe.x), probe.y), f23.mul(probe.z, probe.z)
    )
    assert val == expect


def test_generator_matrix_shape_and_rank(p23, f23):
    code = generator_matrix(TwoPointDivisor(0, 0), p23, f23)
    assert code.matrix.shape == (1, p23.n)
    assert np.all(code.matrix == 1)
    assert code.rank() == 1
    for d in [(28, 7), (231, 0), (22, 7)]:
        c = generator_matrix(TwoPointDivisor(*d), p23, f23)
        assert c.rank() == dim_code(TwoPointDivisor(*d), p23)
        assert len(c.points) == p23.n
        assert (0, 0, 0) not in c.points


def test_nullspace_annihilates(p21, f21):
    code = generator_matrix(TwoPointDivisor(2, 1), p21, f21)
    B = nullspace(code)
    assert B.shape[0] == p21.n - code.rank()
    for v in B:
        for row in code.matrix:
            acc = 0
            for rv, vv in zip(row, v):
                acc = f21.add(acc, f21.mul(int(rv), int(vv)))
            assert acc == 0


def test_dual_min_distance_conventions(p21, f21):
    full = generator_matrix(TwoPointDivisor(11, 0), p21, f21)
    assert full.rank() == p21.n
    assert dual_min_distance(full) is math.inf
    small = generator_matrix(TwoPointDivisor(0, 0), p21, f21)
    assert dual_min_distance(small, limit=10) is None


def test_dual_min_distance_matches_direct_enumeration(p21, f21):
    import itertools

    code = generator_matrix(TwoPointDivisor(1, 1), p21, f21)
    B = nullspace(code)
    best = None
    for coeffs in itertools.product(range(f21.order), repeat=B.shape[0]):
        if not any(coeffs):
            continue
        word = [0] * B.shape[1]
        for c, row in zip(coeffs, B):
            if c:
                for t in range(len(word)):
                    word[t] = f21.add(word[t], f21.mul(c, int(row[t])))
        w = sum(1 for x in word if x)
        best = w if best is None else min(best, w)
    assert dual_min_distance(code) == best


def test_dual_multipliers_hermitian_trivial(p21, f21):
    pts = generator_matrix(TwoPointDivisor(0, 0), p21, f21).points
    h = dual_multipliers(p21, f21, pts)
    assert np.all(h == 1)


def test_dual_multipliers_gk(p23, f23):
    pts = generator_matrix(TwoPointDivisor(0, 0), p23, f23).points
    h = dual_multipliers(p23, f23, pts)
    assert np.all(h != 0)
    # e = 3 reduces the derivative of z*f to 1 + z^18
    for pt, val in zip(pts, h):
        assert val == f23.add(1, f23.pow(pt.z, 18))


def test_check_duality_arbitrates_coefficient(p21, p23, f21, f23):
    assert check_duality(TwoPointDivisor(1, 1), p21, f21)
    assert not check_duality(
        TwoPointDivisor(1, 1), p21, f21, m_coeff=p21.m_dual_variant
    )
    assert check_duality(TwoPointDivisor(10, 66), p23, f23)
    assert not check_duality(
        TwoPointDivisor(10, 66), p23, f23, m_coeff=p23.m_dual_variant
    )


def test_make_field_is_cached():
    assert make_field(2, 3) is make_field(2, 3)
