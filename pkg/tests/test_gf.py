"""
Finite field layer: construction, arithmetic, traces, bases, Hilbert 90
"""
import numpy as np
import pytest

from src.algebra.gf import (
    FieldAut,
    coordinates,
    dual_basis,
    f_arith,
    field_create,
    find_self_dual_normal,
    from_coordinates,
    frobenius,
    hilbert90,
    make_basis,
    norm,
    normal_basis,
    normal_basis_check,
    subfield_elements,
    trace,
    trace_norm,
)
from src.errors import (
    CompositeCharacteristic,
    DivisionByZero,
    FieldTooLarge,
    NonDivisorDegree,
    NormNotOne,
    NotABasis,
    ReducibleModulus,
)


@pytest.fixture
def gf4():
    return field_create(2, 2)


@pytest.fixture
def gf8():
    return field_create(2, 3)


def test_default_moduli():
    assert field_create(2, 2).modulus == (1, 1, 1)
    assert field_create(2, 3).modulus == (1, 1, 0, 1)
    assert field_create(3, 2).modulus == (1, 0, 1)
    assert field_create(5, 1).q == 5


def test_field_create_rejects_bad_input():
    with pytest.raises(CompositeCharacteristic):
        field_create(4, 1)
    with pytest.raises(ReducibleModulus):
        field_create(2, 2, modulus=[1, 0, 1])
    with pytest.raises(ReducibleModulus):
        field_create(2, 2, modulus=[1, 1])
    with pytest.raises(FieldTooLarge):
        field_create(2, 17)


def test_explicit_modulus_is_used():
    F = field_create(2, 3, modulus=[1, 0, 1, 1])
    assert F.modulus == (1, 0, 1, 1)
    # b^3 = b^2 + 1
    assert int(f_arith(F, "pow", 2, 3)) == 5


def test_gf4_arithmetic(gf4):
    assert int(f_arith(gf4, "mul", 2, 2)) == 3
    assert int(f_arith(gf4, "add", 2, 3)) == 1
    assert int(f_arith(gf4, "inv", 2)) == 3
    assert int(f_arith(gf4, "div", 1, 2)) == 3
    assert int(f_arith(gf4, "pow", 2, -1)) == 3
    with pytest.raises(DivisionByZero):
        f_arith(gf4, "div", 1, 0)
    with pytest.raises(DivisionByZero):
        f_arith(gf4, "inv", 0)


def test_frobenius(gf4):
    assert int(frobenius(gf4, 1, gf4(2))) == 3
    assert int(frobenius(gf4, 2, gf4(2))) == 2
    assert int(frobenius(gf4, 0, gf4(3))) == 3


def test_frobenius_is_an_automorphism():
    rng = np.random.default_rng(7)
    for p, m in [(2, 4), (3, 2), (5, 2)]:
        F = field_create(p, m)
        x, y = F.random(rng, 50), F.random(rng, 50)
        for s in range(m + 1):
            assert np.array_equal(frobenius(F, s, x + y), frobenius(F, s, x) + frobenius(F, s, y))
            assert np.array_equal(frobenius(F, s, x * y), frobenius(F, s, x) * frobenius(F, s, y))
        assert np.array_equal(frobenius(F, m, x), x)


def test_field_aut_order_and_fixed_field():
    F = field_create(2, 4)
    sigma = FieldAut(F, 2)
    assert sigma.order == 2
    assert sigma.fixed_degree == 2
    assert FieldAut(F, 1).order == 4
    assert FieldAut(F, 0).is_identity
    x = F.random(np.random.default_rng(1), 20)
    assert np.array_equal(sigma.apply(sigma.inverse().apply(x)), x)
    assert np.array_equal(sigma.apply(x, 3), FieldAut(F, 1).apply(x, 6))


def test_trace_and_norm(gf4, gf8):
    assert int(trace_norm(gf4, 1, "trace", 2)) == 1
    assert int(trace_norm(gf4, 1, "trace", 0)) == 0
    nonzero = gf8.nonzero_elements()
    assert np.all(norm(gf8, 1, nonzero) == 1)
    with pytest.raises(NonDivisorDegree):
        trace_norm(gf8, 2, "trace", 3)


def test_trace_properties():
    F = field_create(2, 4)
    rng = np.random.default_rng(3)
    x, y = F.random(rng, 40), F.random(rng, 40)
    c = subfield_elements(F, 2)
    assert len(c) == 4
    for d in (1, 2):
        assert np.array_equal(trace(F, d, x + y), trace(F, d, x) + trace(F, d, y))
        assert np.array_equal(norm(F, d, x * y), norm(F, d, x) * norm(F, d, y))
        assert np.array_equal(trace(F, d, frobenius(F, 1, x)), trace(F, d, x))
        values = trace(F, d, x)
        assert np.array_equal(frobenius(F, d, values), values)
    for a in c:
        assert np.array_equal(trace(F, 2, a * x), a * trace(F, 2, x))


def test_dual_basis(gf4):
    B = make_basis(gf4, 1, [2, 3])
    assert B.normal and B.self_dual
    assert dual_basis(B).elements == (2, 3)
    prime = field_create(3, 1)
    assert dual_basis(make_basis(prime, 1, [1])).elements == (1,)


def test_dual_basis_is_an_involution_with_trace_duality():
    F = field_create(2, 4)
    for elements in ([1, 2, 4, 8], [3, 5, 9, 2]):
        B = make_basis(F, 1, elements)
        D = dual_basis(B)
        pairing = trace(F, 1, B.vector[:, None] * D.vector[None, :])
        assert np.array_equal(pairing, F.identity(4))
        assert dual_basis(D).elements == B.elements


def test_dependent_elements_are_not_a_basis(gf8):
    with pytest.raises(NotABasis):
        make_basis(gf8, 1, [1, 2, 3])
    with pytest.raises(NotABasis):
        make_basis(gf8, 1, [1, 2])


def test_coordinates_round_trip(gf8):
    B = normal_basis(gf8, 1, 3)
    assert B.elements == (3, 5, 7)
    everything = gf8.elements()
    coords = coordinates(B, everything)
    assert np.array_equal(from_coordinates(B, coords), everything)
    assert np.array_equal(coordinates(B, gf8(3)), gf8([1, 0, 0]))


def test_normal_bases(gf4, gf8):
    assert not normal_basis_check(gf8, 1, 2)
    assert normal_basis_check(gf8, 1, 3)
    assert not normal_basis_check(gf8, 1, 0)
    assert find_self_dual_normal(gf8, 1) == 3
    assert find_self_dual_normal(gf4, 1) == 2
    gram = make_basis(gf8, 1, [3, 5, 7]).gram
    assert np.array_equal(gram, gf8.identity(3))


@pytest.mark.parametrize("p,m,d", [
    (2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 5, 1), (2, 6, 1), (2, 4, 2), (2, 6, 2), (2, 6, 3), (2, 8, 2),
    (3, 2, 1), (3, 3, 1), (3, 4, 1), (3, 4, 2), (5, 2, 1), (5, 3, 1), (7, 2, 1),
])
def test_self_dual_normal_existence(p, m, d):
    # a self-dual normal basis of GF(q^t) over GF(q) exists iff t is odd, or q is even and 4 does not divide t
    t = m // d
    exists = t % 2 == 1 or (p == 2 and t % 4 == 2)
    F = field_create(p, m)
    alpha = find_self_dual_normal(F, d)
    assert (alpha is not None) == exists
    if exists:
        B = normal_basis(F, d, alpha)
        assert B.normal and B.self_dual


def test_hilbert90_examples(gf8):
    assert int(hilbert90(gf8, 1, 1)) == 1
    assert int(hilbert90(gf8, 1, 3)) == 3
    gf9 = field_create(3, 2)
    with pytest.raises(NormNotOne):
        hilbert90(gf9, 1, 4)
    with pytest.raises(NormNotOne):
        hilbert90(gf9, 1, 0)


@pytest.mark.parametrize("p,m,d", [(2, 3, 1), (2, 4, 2), (3, 2, 1)])
def test_hilbert90_solves_every_norm_one_element(p, m, d):
    F = field_create(p, m)
    sigma = FieldAut.frobenius(F, d)
    units = F.nonzero_elements()
    for mu in units[norm(F, d, units) == 1]:
        nu = hilbert90(F, d, mu)
        assert nu != 0
        assert sigma.apply(nu) / nu == mu


def test_hilbert90_with_other_generator():
    F = field_create(2, 3)
    sigma = FieldAut(F, 2)
    for mu in F.nonzero_elements():
        nu = hilbert90(F, 1, mu, sigma=sigma)
        assert sigma.apply(nu) / nu == mu
