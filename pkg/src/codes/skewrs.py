"""
Skew Reed-Solomon Codes
sigma-cyclic codes generated by least common left multiples of conjugate
linear factors of x^n - 1: construction from a normal basis, the companion
root, closed-form duals, exhaustive minimum distance and the evaluation form
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import List, Sequence
import logging

import galois
import numpy as np

from ..algebra import skewpoly as sp
from ..algebra.gf import Field, FieldAut, felt, hilbert90, normal_basis_check
from ..algebra.linalg import row_basis
from ..algebra.skewpoly import SkewPoly
from ..errors import BadDelta, CodeTooLarge, NotNormal, SkewDualError, ZeroCode
from . import constacyclic as cc
from .framework import BaseRing, LinearCode, dual_oracle

logger = logging.getLogger(__name__)

# Largest number of messages enumerated by min_distance
MAX_MESSAGES = 2 ** 20


def _check_order(L: Field, sigma: FieldAut) -> int:
    if sigma.field != L:
        raise SkewDualError(f"{sigma!r} is not an automorphism of {L!r}")
    return sigma.order


def conjugate_factors(sigma: FieldAut, root, start: int, stop: int) -> List[SkewPoly]:
    """x - sigma^i(root) for start <= i < stop"""
    root = felt(sigma.field, root)
    return [sp.x_minus(sigma, sigma.apply(root, i)) for i in range(start, stop)]


def lclm_conjugates(sigma: FieldAut, root, start: int, stop: int) -> SkewPoly:
    """lclm of consecutive conjugate factors; 1 for an empty range"""
    factors = conjugate_factors(sigma, root, start, stop)
    return sp.lclm_many(factors) if factors else sp.one(sigma)


def lcrm_conjugates(sigma: FieldAut, root, start: int, stop: int) -> SkewPoly:
    factors = conjugate_factors(sigma, root, start, stop)
    return sp.lcrm_many(factors) if factors else sp.one(sigma)


def normal_elements(L: Field, sigma: FieldAut) -> List[int]:
    """Every alpha whose sigma-conjugates form a basis of L over the fixed field"""
    _check_order(L, sigma)
    d = sigma.fixed_degree
    return [a for a in range(1, L.q) if normal_basis_check(L, d, a)]


def _require_normal(L: Field, sigma: FieldAut, alpha) -> galois.FieldArray:
    _check_order(L, sigma)
    alpha = felt(L, alpha)
    if not normal_basis_check(L, sigma.fixed_degree, alpha):
        raise NotNormal(f"{int(alpha)} does not generate a normal basis over the fixed field of {sigma!r}")
    return alpha


def beta_of(sigma: FieldAut, alpha) -> galois.FieldArray:
    """beta = sigma(alpha) alpha^-1"""
    alpha = felt(sigma.field, alpha)
    return sigma.apply(alpha) / alpha


def decomposes(sigma: FieldAut, root) -> bool:
    """x^n - 1 = lclm(x - root, ..., x - sigma^(n-1)(root))"""
    n = sigma.order
    return lclm_conjugates(sigma, root, 0, n) == sp.x_power_minus(sigma, n, 1)


def full_decomposition_check(L: Field, sigma: FieldAut, alpha) -> bool:
    alpha = _require_normal(L, sigma, alpha)
    return decomposes(sigma, beta_of(sigma, alpha))


def companion_gamma(sigma: FieldAut, root) -> galois.FieldArray:
    """
    gamma with (x - gamma) lclm(x - sigma(root), ..., x - sigma^(n-1)(root)) = x^n - 1,
    read off the quotient of the right division of x^n - 1
    """
    n = sigma.order
    N = lclm_conjugates(sigma, root, 1, n)
    q, r = sp.sp_divide("right", sp.x_power_minus(sigma, n, 1), N)
    if not r.is_zero or q.degree != 1:
        raise NotNormal(f"the conjugates of {int(felt(sigma.field, root))} do not decompose x^{n} - 1")
    return -q.coeff(0)


@dataclass(frozen=True)
class SkewCyclicCode:
    """
    The sigma-cyclic code v(Rg) with g = lclm(x - sigma^i(root), 0 <= i < count),
    where the conjugates of root decompose x^n - 1
    """
    L: Field
    sigma: FieldAut
    root: int
    count: int

    @property
    def n(self) -> int:
        return self.sigma.order

    @property
    def k(self) -> int:
        return self.n - self.count

    @property
    def delta(self) -> int:
        return self.count + 1

    @cached_property
    def ring(self) -> cc.ConstaRing:
        return cc.ring_create(self.L, self.sigma, self.n, 1)

    @cached_property
    def g(self) -> SkewPoly:
        return lclm_conjugates(self.sigma, self.root, 0, self.count)

    @cached_property
    def gamma(self) -> galois.FieldArray:
        return companion_gamma(self.sigma, self.root)

    @cached_property
    def h(self) -> SkewPoly:
        """The cofactor with g h = x^n - 1"""
        return cc.cofactor(self.ring, self.g)

    @property
    def generator_matrix(self) -> galois.FieldArray:
        return cc.mrep_consta(self.ring, cc.from_poly(self.ring, self.g))

    @property
    def code(self) -> LinearCode:
        return cc.code_from_gen(self.ring, cc.from_poly(self.ring, self.g))


@dataclass(frozen=True)
class SkewRSCode(SkewCyclicCode):
    """Skew RS code of designed distance delta from the normal element alpha"""
    alpha: int

    @property
    def beta(self) -> galois.FieldArray:
        return self.L.GF(self.root)


def skew_cyclic_code(L: Field, sigma: FieldAut, root, count: int) -> SkewCyclicCode:
    n = _check_order(L, sigma)
    if not 0 <= count <= n:
        raise BadDelta(f"number of factors must lie in [0, {n}], got {count}")
    root = felt(L, root)
    if root == 0 or not decomposes(sigma, root):
        raise NotNormal(f"the conjugates of {int(root)} do not decompose x^{n} - 1")
    return SkewCyclicCode(L=L, sigma=sigma, root=int(root), count=count)


def rs_create(L: Field, sigma: FieldAut, alpha, delta: int) -> SkewRSCode:
    """g = lclm(x - beta, ..., x - sigma^(delta-2)(beta)) with beta = sigma(alpha)/alpha"""
    alpha = _require_normal(L, sigma, alpha)
    n = sigma.order
    if not 2 <= delta <= n:
        raise BadDelta(f"designed distance must lie in [2, {n}], got {delta}")
    beta = beta_of(sigma, alpha)
    code = SkewRSCode(L=L, sigma=sigma, root=int(beta), count=delta - 1, alpha=int(alpha))
    logger.debug(f"Skew RS [{n}, {code.k}] over {L!r}: g = {list(code.g.coeffs)}")
    return code


def dual_root(code: SkewCyclicCode) -> galois.FieldArray:
    """mu = sigma^delta(gamma)^-1"""
    return code.sigma.apply(code.gamma, code.count + 1) ** -1


def rs_dual(code: SkewCyclicCode) -> SkewCyclicCode:
    """The dual code, generated by lclm(x - sigma^delta(gamma)^-1, ..., x - sigma^n(gamma)^-1)"""
    mu = dual_root(code)
    return SkewCyclicCode(L=code.L, sigma=code.sigma, root=int(mu), count=code.n - code.count)


def dual_matches_oracle(code: SkewCyclicCode) -> bool:
    return rs_dual(code).code == dual_oracle(code.code)


def min_distance(C: LinearCode) -> int:
    """Minimum Hamming weight over all nonzero codewords, by enumeration"""
    if C.base != BaseRing.FIELD:
        raise SkewDualError("minimum distance is computed for codes over a field")
    G = row_basis(C.generator)
    k = G.shape[0]
    if k == 0:
        raise ZeroCode("the zero code has no minimum distance")
    q = C.field.q
    if q ** k > MAX_MESSAGES:
        logger.warning(f"Refusing to enumerate {q}^{k} codewords")
        raise CodeTooLarge(f"{q}^{k} codewords exceed the limit {MAX_MESSAGES}")
    messages = C.field.GF(np.array(list(product(range(q), repeat=k)), dtype=np.int64)[1:])
    weights = np.count_nonzero(np.asarray(messages @ G), axis=1)
    return int(weights.min())


@dataclass(frozen=True)
class EvalParams:
    mu: int
    nu: int
    points: List[int]
    multipliers: List[int]
    k: int


def eval_params(code: SkewCyclicCode) -> EvalParams:
    """mu from the dual generator, nu from Hilbert 90 with mu = sigma(nu)/nu"""
    sigma = code.sigma
    mu = dual_root(code)
    nu = hilbert90(code.L, sigma.fixed_degree, mu, sigma=sigma)
    points = [int(sigma.apply(mu, j)) for j in range(code.n)]
    multipliers = [int(sigma.apply(nu, j)) for j in range(code.n)]
    return EvalParams(mu=int(mu), nu=int(nu), points=points, multipliers=multipliers, k=code.k)


def sge_matrix(sigma: FieldAut, points: Sequence[int], multipliers: Sequence[int], k: int) -> galois.FieldArray:
    """Entry (i, j) = v_j N_i(a_j), the generator of the skew generalized evaluation code"""
    L = sigma.field
    if any(int(v) == 0 for v in multipliers):
        raise SkewDualError("evaluation multipliers must be nonzero")
    M = L.zeros((k, len(points)))
    for j, (a, v) in enumerate(zip(points, multipliers)):
        for i in range(k):
            M[i, j] = felt(L, v) * sp.sp_norm(a, i, sigma)
    return M


def sge_code(code: SkewCyclicCode, params: EvalParams) -> LinearCode:
    M = sge_matrix(code.sigma, params.points, params.multipliers, params.k)
    return LinearCode(base=BaseRing.FIELD, field=code.L, length=code.n, generator=M)


def right_left_check(code: SkewCyclicCode, k: int) -> bool:
    """lcrm(x - gamma, ..., x - sigma^k(gamma)) lclm(x - sigma^(k+1)(root), ..., x - sigma^(n-1)(root)) = x^n - 1"""
    sigma, n = code.sigma, code.n
    left = lcrm_conjugates(sigma, code.gamma, 0, k + 1)
    right = lclm_conjugates(sigma, code.root, k + 1, n)
    return sp.sp_mul(left, right) == sp.x_power_minus(sigma, n, 1)


def theta_h_check(code: SkewCyclicCode) -> bool:
    """
    With gamma~ = sigma^(delta-1)(gamma), the cofactor h equals
    lcrm(x - sigma^i(gamma~)) and R Theta(h) = R lclm(x - sigma^i(gamma')),
    gamma' = sigma(gamma~)^-1, both over 0 <= i < n - delta + 1
    """
    sigma, R = code.sigma, code.ring
    shifted = sigma.apply(code.gamma, code.count)
    h = lcrm_conjugates(sigma, shifted, 0, code.k)
    if h != code.h:
        return False
    gamma_prime = sigma.apply(shifted) ** -1
    h_prime = lclm_conjugates(sigma, gamma_prime, 0, code.k)
    via_theta = cc.code_from_gen(R, cc.theta(R, cc.from_poly(R, h)))
    via_lclm = cc.code_from_gen(R, cc.from_poly(R, h_prime))
    return via_theta == via_lclm
