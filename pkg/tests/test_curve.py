import pytest

from gkcodes import new_curve


def test_constants_q2_e3(p23):
    assert p23.r == 3
    assert p23.genus == 10
    assert p23.n_places == 225
    assert p23.n == 223
    assert (p23.gen_x, p23.gen_y, p23.gen_z) == (9, 6, 8)
    assert p23.w_deg == 224
    assert p23.m_dual == 242
    assert p23.m_dual_variant == 251
    assert p23.delta_default == 245


def test_constants_q2_e1(p21):
    assert p21.r == 1
    assert p21.genus == 1
    assert p21.n_places == 9
    assert p21.n == 7
    assert (p21.gen_x, p21.gen_y, p21.gen_z) == (3, 2, 8)
    assert p21.w_deg == 8
    assert p21.m_dual == 8
    assert p21.m_dual_variant == 17
    assert p21.delta_default == 11


def test_constants_q3_e1(p31):
    assert p31.genus == 3
    assert p31.n_places == 28
    assert p31.n == 26


def test_constants_q3_e3():
    p = new_curve(3, 3)
    assert p.r == 7
    assert p.genus == 99
    assert p.n_places == 6076


def test_w_deg_is_n_plus_one():
    for q, e in [(2, 1), (2, 3), (3, 1), (3, 3), (4, 1), (5, 1), (2, 5)]:
        p = new_curve(q, e)
        assert p.w_deg == p.n + 1


def test_hermitian_specialization():
    # e = 1 collapses r to 1 and the curve to the Hermitian curve, whose
    # constants have well-known closed forms.
    for q in [2, 3, 4, 5, 7, 8, 9]:
        p = new_curve(q, 1)
        assert p.r == 1
        assert p.genus == q * (q - 1) // 2
        assert p.n_places == q**3 + 1


@pytest.mark.parametrize(
    "q,e,msg",
    [
        (2, 2, "odd"),
        (2, 0, ">= 1"),
        (2, -3, ">= 1"),
        (1, 1, ">= 2"),
        (0, 3, ">= 2"),
        (6, 1, "prime power"),
        (12, 3, "prime power"),
    ],
)
def test_rejects_bad_parameters(q, e, msg):
    with pytest.raises(ValueError, match=msg):
        new_curve(q, e)


def test_accepts_prime_powers():
    for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]:
        new_curve(q, 1)
