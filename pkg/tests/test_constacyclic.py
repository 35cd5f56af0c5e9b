"""
Skew constacyclic rings, the transposition Theta and constacyclic duals
"""
import numpy as np
import pytest

from src.algebra import skewpoly as sp
from src.algebra.gf import FieldAut, field_create
from src.codes import constacyclic as cc
from src.codes.framework import check_transposition, dual_oracle, mrep
from src.errors import MixedRings, NotALeftDivisor, NotFixedUnit, NotMonic, OrderMismatch

CASES = [(2, 2, 2), (2, 3, 3), (3, 2, 2)]


def make_ring(p, m, n, u=1):
    L = field_create(p, m)
    return cc.ring_create(L, FieldAut(L, 1), n, u)


def test_ring_creation_errors():
    L = field_create(2, 3)
    sigma = FieldAut(L, 1)
    with pytest.raises(OrderMismatch):
        cc.ring_create(L, sigma, 2, 1)
    with pytest.raises(NotFixedUnit):
        cc.ring_create(L, sigma, 3, 2)
    with pytest.raises(NotFixedUnit):
        cc.ring_create(L, sigma, 3, 0)
    with pytest.raises(MixedRings):
        cc.ring_create(field_create(2, 2), sigma, 3, 1)


def test_multiplication_reduces_modulo_x_n_minus_u():
    R = make_ring(3, 2, 2, 2)
    x = cc.element(R, [0, 1])
    assert cc.ring_mul(R, x, x).coeffs == (2, 0)
    assert cc.element(R, [0, 0, 1]).coeffs == (2, 0)
    assert cc.ring_mul(R, cc.one(R), x) == x


def test_mrep_closed_form_matches_row_definition():
    R = make_ring(3, 2, 2, 2)
    rng = np.random.default_rng(3)
    for _ in range(30):
        f = cc.random_element(R, rng)
        assert np.array_equal(cc.mrep_consta(R, f), mrep(cc.ext(R), f))


@pytest.mark.parametrize("p,m,n", CASES)
def test_transposition_identity(p, m, n):
    for u in cc.admissible_units(field_create(p, m), FieldAut(field_create(p, m), 1)):
        R = make_ring(p, m, n, u)
        report = check_transposition(cc.ext(R), cc.ext(R.hat()), lambda f: cc.theta(R, f),
                                     samples=50, seed=u)
        assert report.passed, report.failures[:1]


def test_transposition_without_sigma_twist_fails():
    R = make_ring(2, 3, 3)
    R_hat = R.hat()

    def untwisted(f):
        out = R.L.zeros(R.n)
        out[0] = f.array[0]
        for j in range(1, R.n):
            out[j] = R.unit * f.array[R.n - j]
        return cc.from_array(R_hat, out)

    report = check_transposition(cc.ext(R), cc.ext(R_hat), untwisted, samples=30, seed=1)
    assert not report.passed
    assert report.failures and report.failures[0].input is not None
    assert check_transposition(cc.ext(R), cc.ext(R_hat), lambda f: cc.theta(R, f), samples=30, seed=1).passed


def test_theta_inverse_and_sigma_commute():
    R = make_ring(2, 3, 3)
    rng = np.random.default_rng(8)
    for _ in range(30):
        f = cc.random_element(R, rng)
        assert cc.theta_inverse(R.hat(), cc.theta(R, f)) == f
        assert cc.theta(R, cc.sigma_on_ring(R, f)) == cc.sigma_on_ring(R.hat(), cc.theta(R, f))


def test_negacyclic_units_over_gf9():
    L = field_create(3, 2)
    assert cc.admissible_units(L, FieldAut(L, 1)) == [1, 2]
    R = make_ring(3, 2, 2, 2)
    assert R.hat().u == 2


def test_cofactor_errors():
    R = make_ring(2, 2, 2)
    with pytest.raises(NotMonic):
        cc.cofactor(R, sp.from_ints(R.sigma, [1, 2]))
    with pytest.raises(NotALeftDivisor):
        cc.cofactor(R, sp.from_ints(R.sigma, [0, 1, 1]))


def test_dual_of_x_plus_one_over_gf4():
    R = make_ring(2, 2, 2)
    result = cc.dual(R, sp.from_ints(R.sigma, [1, 1]))
    assert result.h.coeffs == (1, 1)
    assert result.code.dim == 1 and result.dual.dim == 1
    assert result.pair.agrees
    assert result.shortcut == result.dual


@pytest.mark.parametrize("p,m,n", CASES)
def test_dual_of_every_divisor(p, m, n):
    L = field_create(p, m)
    for u in cc.admissible_units(L, FieldAut(L, 1)):
        R = make_ring(p, m, n, u)
        divisors = cc.monic_left_divisors(R)
        assert (sp.one(R.sigma), R.modulus) in divisors
        for f, h in divisors:
            result = cc.dual(R, f)
            assert result.pair.agrees
            assert result.shortcut == result.dual
            assert result.code.dim + result.dual.dim == n
            assert result.code.dim == n - f.degree
            assert dual_oracle(result.dual) == result.code
