"""
Skew Reed-Solomon codes: decomposition of x^n - 1, closed-form duals,
minimum distance and the evaluation description
"""
import pytest

from src.algebra.gf import FieldAut, field_create
from src.algebra.linalg import rank
from src.codes import skewrs
from src.codes.framework import BaseRing, LinearCode, dual_oracle
from src.errors import BadDelta, CodeTooLarge, NotNormal, ZeroCode


@pytest.fixture
def gf8():
    return field_create(2, 3)


def frobenius_setup(p, m, s=1):
    L = field_create(p, m)
    return L, FieldAut(L, s)


def test_normal_elements_of_gf8(gf8):
    normal = skewrs.normal_elements(gf8, FieldAut(gf8, 1))
    assert 3 in normal and 2 not in normal and 1 not in normal


@pytest.mark.parametrize("p,m,s", [(2, 2, 1), (2, 3, 1), (2, 4, 1), (3, 2, 1), (2, 4, 2)])
def test_full_decomposition_for_every_normal_element(p, m, s):
    L, sigma = frobenius_setup(p, m, s)
    normal = skewrs.normal_elements(L, sigma)
    assert normal
    for alpha in normal:
        assert skewrs.full_decomposition_check(L, sigma, alpha)


def test_construction_errors(gf8):
    sigma = FieldAut(gf8, 1)
    with pytest.raises(NotNormal):
        skewrs.rs_create(gf8, sigma, 2, 2)
    with pytest.raises(BadDelta):
        skewrs.rs_create(gf8, sigma, 3, 1)
    with pytest.raises(BadDelta):
        skewrs.rs_create(gf8, sigma, 3, 4)


def test_gf8_code_and_its_dual(gf8):
    code = skewrs.rs_create(gf8, FieldAut(gf8, 1), 3, 3)
    assert (code.n, code.k) == (3, 1)
    assert code.g.degree == 2 and code.g.is_monic
    assert skewrs.min_distance(code.code) == 3

    dual = skewrs.rs_dual(code)
    assert dual.code.dim == 2
    assert dual.code == dual_oracle(code.code)
    assert skewrs.min_distance(dual.code) == 2


@pytest.mark.parametrize("delta", [2, 3, 4])
def test_gf16_codes_are_mds(delta):
    L, sigma = frobenius_setup(2, 4)
    alpha = skewrs.normal_elements(L, sigma)[0]
    code = skewrs.rs_create(L, sigma, alpha, delta)
    assert code.code.dim == 4 - delta + 1
    assert skewrs.min_distance(code.code) == delta
    assert skewrs.dual_matches_oracle(code)
    dual = skewrs.rs_dual(code)
    assert skewrs.min_distance(dual.code) == 4 - delta + 2


def test_gf16_over_gf4():
    L, sigma = frobenius_setup(2, 4, 2)
    alpha = skewrs.normal_elements(L, sigma)[0]
    code = skewrs.rs_create(L, sigma, alpha, 2)
    assert (code.n, code.k) == (2, 1)
    assert skewrs.min_distance(code.code) == 2
    assert skewrs.dual_matches_oracle(code)


def test_double_dual(gf8):
    code = skewrs.rs_create(gf8, FieldAut(gf8, 1), 3, 2)
    assert skewrs.rs_dual(skewrs.rs_dual(code)).code == code.code


def test_companion_root(gf8):
    sigma = FieldAut(gf8, 1)
    code = skewrs.rs_create(gf8, sigma, 3, 2)
    gamma = code.gamma
    assert skewrs.lcrm_conjugates(sigma, gamma, 0, 3) == skewrs.lclm_conjugates(sigma, code.root, 0, 3)


def test_right_left_identity_for_every_k(gf8):
    sigma = FieldAut(gf8, 1)
    for alpha in skewrs.normal_elements(gf8, sigma):
        for delta in (2, 3):
            code = skewrs.rs_create(gf8, sigma, alpha, delta)
            for k in range(code.n):
                assert skewrs.right_left_check(code, k)


@pytest.mark.parametrize("p,m,delta", [(2, 3, 2), (2, 3, 3), (2, 4, 2), (2, 4, 3), (2, 4, 4)])
def test_theta_of_the_cofactor(p, m, delta):
    L, sigma = frobenius_setup(p, m)
    code = skewrs.rs_create(L, sigma, skewrs.normal_elements(L, sigma)[0], delta)
    assert skewrs.theta_h_check(code)


@pytest.mark.parametrize("p,m,delta", [(2, 3, 3), (2, 4, 2), (2, 4, 3), (2, 4, 4), (3, 2, 2)])
def test_evaluation_description(p, m, delta):
    L, sigma = frobenius_setup(p, m)
    code = skewrs.rs_create(L, sigma, skewrs.normal_elements(L, sigma)[0], delta)
    params = skewrs.eval_params(code)
    mu, nu = L.GF(params.mu), L.GF(params.nu)
    assert sigma.apply(nu) / nu == mu
    assert skewrs.sge_code(code, params) == code.code
    assert rank(skewrs.sge_matrix(sigma, params.points, params.multipliers, params.k)) == code.k


def test_skew_cyclic_code_rejects_a_bad_root(gf8):
    sigma = FieldAut(gf8, 1)
    with pytest.raises(NotNormal):
        skewrs.skew_cyclic_code(gf8, sigma, 0, 1)
    code = skewrs.rs_create(gf8, sigma, 3, 3)
    generic = skewrs.skew_cyclic_code(gf8, sigma, code.root, 2)
    assert generic.code == code.code


def test_min_distance_limits():
    L = field_create(2, 4)
    with pytest.raises(ZeroCode):
        skewrs.min_distance(LinearCode(BaseRing.FIELD, L, 3, L.zeros((1, 3))))
    with pytest.raises(CodeTooLarge):
        skewrs.min_distance(LinearCode(BaseRing.FIELD, L, 6, L.identity(6)))
    assert skewrs.min_distance(LinearCode(BaseRing.FIELD, L, 3, L.GF([[1, 1, 0]]))) == 2
