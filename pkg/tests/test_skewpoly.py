"""
Skew polynomial arithmetic, Euclidean layer and right evaluation
"""
import galois
import numpy as np
import pytest

from src.algebra import skewpoly as sp
from src.algebra.gf import FieldAut, field_create
from src.algebra.skewpoly import Convention, NEG_INF, from_ints, sp_divide, sp_gcd_lcm, sp_mul
from src.errors import DivisionByZero, MixedRings, WrongConvention, ZeroInput


@pytest.fixture
def frob4():
    return FieldAut(field_create(2, 2), 1)


@pytest.fixture
def frob8():
    return FieldAut(field_create(2, 3), 1)


def test_multiplication_examples(frob4):
    x = from_ints(frob4, [0, 1])
    a = from_ints(frob4, [2])
    assert sp_mul(x, a).coeffs == (0, 3)
    assert sp_mul(a, x).coeffs == (0, 2)
    f = from_ints(frob4, [1, 1])
    assert sp_mul(f, f).coeffs == (1, 0, 1)
    assert sp_mul(f, sp.one(frob4)) == f


def test_right_convention_multiplication(frob4):
    z = from_ints(frob4, [0, 1], Convention.RIGHT)
    a = from_ints(frob4, [2], Convention.RIGHT)
    # a z = z sigma(a)
    assert sp_mul(a, z).coeffs == (0, 3)
    assert sp_mul(z, a).coeffs == (0, 2)


def test_zero_polynomial_degree(frob4):
    assert sp.zero(frob4).degree == NEG_INF
    assert sp.zero(frob4).degree + 3 == NEG_INF
    assert from_ints(frob4, [1, 0, 0]).coeffs == (1,)


def test_mixed_rings_are_rejected(frob4):
    left = from_ints(frob4, [1, 1])
    right = from_ints(frob4, [1, 1], Convention.RIGHT)
    with pytest.raises(MixedRings):
        sp_mul(left, right)
    other = FieldAut(frob4.field, 0)
    with pytest.raises(MixedRings):
        left + from_ints(other, [1])


def test_division_examples(frob4):
    f = from_ints(frob4, [1, 0, 1])
    g = from_ints(frob4, [1, 1])
    q, r = sp_divide("right", f, g)
    assert q.coeffs == (1, 1) and r.is_zero
    q, r = sp_divide("right", g, g)
    assert q.coeffs == (1,) and r.is_zero
    q, r = sp_divide("right", g, f)
    assert q.is_zero and r == g
    with pytest.raises(DivisionByZero):
        sp_divide("left", f, sp.zero(frob4))


@pytest.mark.parametrize("convention", [Convention.LEFT, Convention.RIGHT])
@pytest.mark.parametrize("p,m,s", [(2, 3, 1), (2, 4, 1), (3, 2, 1), (2, 4, 2)])
def test_division_round_trips(convention, p, m, s):
    sigma = FieldAut(field_create(p, m), s)
    rng = np.random.default_rng(11)
    for _ in range(60):
        f = sp.random(sigma, rng, int(rng.integers(0, 8)), convention)
        g = sp.random(sigma, rng, int(rng.integers(0, 5)), convention)
        if g.is_zero:
            continue
        q, r = sp_divide("right", f, g)
        assert sp_mul(q, g) + r == f
        assert r.degree < g.degree
        q, r = sp_divide("left", f, g)
        assert sp_mul(g, q) + r == f
        assert r.degree < g.degree


def test_gcd_lcm_examples(frob4, frob8):
    a = frob4.field(2)
    f = sp.x_minus(frob4, a)
    assert sp_gcd_lcm("lclm", f, f) == f
    assert sp_gcd_lcm("gcrd", from_ints(frob4, [3, 2, 1]), sp.one(frob4)) == sp.one(frob4)
    b = frob8.field(2)
    g = sp_gcd_lcm("lclm", sp.x_minus(frob8, b), sp.x_minus(frob8, b * b))
    assert g.degree == 2 and g.is_monic
    for factor in (sp.x_minus(frob8, b), sp.x_minus(frob8, b * b)):
        assert sp_divide("right", g, factor)[1].is_zero


def test_gcd_lcm_zero_inputs(frob4):
    f = from_ints(frob4, [1, 1])
    zero = sp.zero(frob4)
    with pytest.raises(ZeroInput):
        sp_gcd_lcm("gcrd", zero, zero)
    with pytest.raises(ZeroInput):
        sp_gcd_lcm("lcrm", f, zero)
    assert sp_gcd_lcm("gcrd", f, zero) == f


@pytest.mark.parametrize("convention", [Convention.LEFT, Convention.RIGHT])
def test_gcd_lcm_properties(convention):
    sigma = FieldAut(field_create(2, 4), 1)
    rng = np.random.default_rng(5)
    for _ in range(40):
        h = sp.random(sigma, rng, int(rng.integers(0, 3)), convention, monic=True)
        f = sp_mul(sp.random(sigma, rng, int(rng.integers(0, 4)), convention, monic=True), h)
        g = sp_mul(sp.random(sigma, rng, int(rng.integers(0, 4)), convention, monic=True), h)

        d = sp.gcrd(f, g)
        l = sp.lclm(f, g)
        assert d.is_monic and l.is_monic
        assert sp_divide("right", f, d)[1].is_zero
        assert sp_divide("right", g, d)[1].is_zero
        assert sp_divide("right", l, f)[1].is_zero
        assert sp_divide("right", l, g)[1].is_zero
        assert d.degree >= h.degree
        assert l.degree + d.degree == f.degree + g.degree

        d = sp.gcld(f, g)
        l = sp.lcrm(f, g)
        assert sp_divide("left", f, d)[1].is_zero
        assert sp_divide("left", g, d)[1].is_zero
        assert sp_divide("left", l, f)[1].is_zero
        assert sp_divide("left", l, g)[1].is_zero
        assert l.degree + d.degree == f.degree + g.degree


@pytest.mark.parametrize("convention", [Convention.LEFT, Convention.RIGHT])
def test_lcrm_many_is_a_common_right_multiple(convention):
    sigma = FieldAut(field_create(2, 3), 1)
    rng = np.random.default_rng(8)
    for _ in range(10):
        family = [sp.random(sigma, rng, int(rng.integers(1, 3)), convention, monic=True) for _ in range(3)]
        l = sp.lcrm_many(family)
        assert l.is_monic
        for f in family:
            assert sp_divide("left", l, f)[1].is_zero
        assert l.degree <= sum(f.degree for f in family)
    with pytest.raises(ZeroInput):
        sp.lcrm_many([])


def test_identity_automorphism_matches_commutative_polynomials():
    F = field_create(3, 2)
    sigma = FieldAut(F, 0)
    rng = np.random.default_rng(2)

    def plain(f):
        return galois.Poly(f.array if f.coeffs else F.GF([0]), order="asc")

    for _ in range(100):
        f = sp.random(sigma, rng, int(rng.integers(0, 6)))
        g = sp.random(sigma, rng, int(rng.integers(0, 4)))
        assert plain(sp_mul(f, g)) == plain(f) * plain(g)
        if g.is_zero:
            continue
        q, r = sp_divide("right", f, g)
        expected_q, expected_r = divmod(plain(f), plain(g))
        assert plain(q) == expected_q and plain(r) == expected_r
        if not f.is_zero:
            assert plain(sp.gcrd(f, g)) == galois.gcd(plain(f), plain(g))
            assert plain(sp.lclm(f, g)) == galois.lcm(plain(f), plain(g))


def test_sigma_norms(frob8):
    b = frob8.field(2)
    assert int(sp.sp_norm(b, 0, frob8)) == 1
    assert int(sp.sp_norm(b, 1, frob8)) == 2
    assert int(sp.sp_norm(b, 3, frob8)) == 1


def test_right_evaluation_examples(frob8):
    b = frob8.field(2)
    assert int(sp.sp_right_eval(sp.x_minus(frob8, b), b)) == 0
    assert int(sp.sp_right_eval(from_ints(frob8, [0, 0, 1]), b)) == 3
    assert int(sp.sp_right_eval(from_ints(frob8, [6]), b)) == 6
    with pytest.raises(WrongConvention):
        sp.sp_right_eval(from_ints(frob8, [0, 1], Convention.RIGHT), b)


def test_right_evaluation_methods_agree(frob8):
    rng = np.random.default_rng(9)
    for _ in range(100):
        f = sp.random(frob8, rng, int(rng.integers(0, 7)))
        a = frob8.field.random(rng)
        assert sp.sp_right_eval(f, a, "norms") == sp.sp_right_eval(f, a, "division")


def test_convention_change_is_a_ring_isomorphism():
    sigma = FieldAut(field_create(2, 3), 1)
    rng = np.random.default_rng(4)
    for _ in range(30):
        f = sp.random(sigma, rng, 4)
        g = sp.random(sigma, rng, 3)
        image = sp.to_convention(sp_mul(f, g), Convention.RIGHT)
        assert image.convention == Convention.RIGHT
        assert image == sp_mul(sp.to_convention(f, Convention.RIGHT), sp.to_convention(g, Convention.RIGHT))
        assert sp.to_convention(sp.to_convention(f, Convention.RIGHT), Convention.LEFT) == f


def test_apply_sigma_is_a_ring_automorphism():
    sigma = FieldAut(field_create(2, 4), 1)
    rng = np.random.default_rng(6)
    for _ in range(20):
        f = sp.random(sigma, rng, 3)
        g = sp.random(sigma, rng, 3)
        assert sp.sp_apply_sigma(sp_mul(f, g)) == sp_mul(sp.sp_apply_sigma(f), sp.sp_apply_sigma(g))
