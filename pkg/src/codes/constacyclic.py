"""
Skew Constacyclic Codes
The quotient rings L[x; sigma]/<x^n - u> and L[x; sigma]/<x^n - u^-1>, the
transposition Theta between them, and duals of (u, sigma)-constacyclic codes
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple
import logging

import galois
import numpy as np

from ..algebra import skewpoly as sp
from ..algebra.gf import Field, FieldAut, felt, subfield_elements
from ..algebra.linalg import MAX_ENUMERATION, all_vectors
from ..algebra.skewpoly import Convention, SkewPoly
from ..errors import (
    CodeTooLarge,
    MixedRings,
    NotALeftDivisor,
    NotFixedUnit,
    NotMonic,
    OrderMismatch,
    SkewDualError,
)
from .framework import BaseRing, DualPair, HammingExt, LinearCode, code_from_matrix, dual_oracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstaRing:
    """L[x; sigma]/<x^n - u> with sigma^n = id and sigma(u) = u != 0"""
    L: Field
    sigma: FieldAut
    n: int
    u: int

    @property
    def unit(self) -> galois.FieldArray:
        return self.L.GF(self.u)

    def hat(self) -> "ConstaRing":
        """The ring modulo x^n - u^-1"""
        return ConstaRing(L=self.L, sigma=self.sigma, n=self.n, u=int(self.unit ** -1))

    @property
    def modulus(self) -> SkewPoly:
        return sp.x_power_minus(self.sigma, self.n, self.unit)

    def __repr__(self) -> str:
        return f"ConstaRing({self.L!r}, s={self.sigma.s}, n={self.n}, u={self.u})"


@dataclass(frozen=True)
class ConstaElt:
    """Residue class given by its representative of degree < n"""
    ring: ConstaRing
    coeffs: Tuple[int, ...]

    @cached_property
    def array(self) -> galois.FieldArray:
        return self.ring.L.GF(list(self.coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        return f"ConstaElt(u={self.ring.u}, {list(self.coeffs)})"


def ring_create(L: Field, sigma: FieldAut, n: int, u) -> ConstaRing:
    if sigma.field != L:
        raise MixedRings(f"{sigma!r} is not an automorphism of {L!r}")
    if n < 1:
        raise SkewDualError(f"length must be >= 1, got {n}")
    if not sigma.power(n).is_identity:
        raise OrderMismatch(f"sigma^{n} is not the identity (sigma has order {sigma.order})")
    unit = felt(L, u)
    if unit == 0 or sigma.apply(unit) != unit:
        raise NotFixedUnit(f"u = {int(unit)} is not a nonzero element fixed by sigma")
    return ConstaRing(L=L, sigma=sigma, n=n, u=int(unit))


def element(R: ConstaRing, coeffs: Sequence[int]) -> ConstaElt:
    """Reduce an arbitrary coefficient list modulo x^n - u"""
    return from_poly(R, sp.from_ints(R.sigma, coeffs))


def zero(R: ConstaRing) -> ConstaElt:
    return ConstaElt(R, (0,) * R.n)


def one(R: ConstaRing) -> ConstaElt:
    return ConstaElt(R, (1,) + (0,) * (R.n - 1))


def from_array(R: ConstaRing, arr) -> ConstaElt:
    return ConstaElt(R, tuple(int(c) for c in arr))


def from_poly(R: ConstaRing, f: SkewPoly) -> ConstaElt:
    """The representative of f of degree < n, using x^(n+j) = u x^j"""
    if f.sigma != R.sigma or f.convention != Convention.LEFT:
        raise MixedRings(f"{f!r} does not live in {R!r}")
    length = max(len(f.coeffs), R.n)
    work = f.padded(length)
    for k in range(length - 1, R.n - 1, -1):
        if work[k] != 0:
            work[k - R.n] = work[k - R.n] + work[k] * R.unit
            work[k] = 0
    return from_array(R, work[:R.n])


def to_poly(f: ConstaElt) -> SkewPoly:
    return sp.from_ints(f.ring.sigma, f.coeffs)


def random_element(R: ConstaRing, rng: np.random.Generator) -> ConstaElt:
    return from_array(R, R.L.random(rng, R.n))


def all_elements(R: ConstaRing) -> Iterator[ConstaElt]:
    for w in all_vectors(R.L, R.n):
        yield from_array(R, w)


def ring_add(R: ConstaRing, f: ConstaElt, g: ConstaElt) -> ConstaElt:
    _check(R, f, g)
    return from_array(R, f.array + g.array)


def ring_mul(R: ConstaRing, f: ConstaElt, g: ConstaElt) -> ConstaElt:
    """Skew product followed by the substitution x^n = u"""
    _check(R, f, g)
    product = sp.sp_mul(to_poly(f), to_poly(g)).padded(2 * R.n)
    return from_array(R, product[:R.n] + R.unit * product[R.n:])


def _check(R: ConstaRing, *elements: ConstaElt) -> None:
    for e in elements:
        if e.ring != R:
            raise MixedRings(f"{e!r} does not live in {R!r}")


def mrep_consta(R: ConstaRing, f: ConstaElt) -> galois.FieldArray:
    """
    M_R(f) in closed form: entry (i, j) is sigma^i(a_{j-i}) for j >= i and
    u sigma^i(a_{n+j-i}) for j < i
    """
    _check(R, f)
    n = R.n
    a = f.array
    cols = np.arange(n)
    M = R.L.zeros((n, n))
    for i in range(n):
        shifted = R.sigma.apply(a[(cols - i) % n], i)
        wrap = R.L.GF(np.where(cols < i, R.u, 1))
        M[i] = shifted * wrap
    return M


def theta(R: ConstaRing, f: ConstaElt) -> ConstaElt:
    """
    Theta(sum a_i x^i) = sum sigma^-i(a_i) x^-i, landing in the hat ring as
    a_0 + sum_{j >= 1} u sigma^j(a_{n-j}) x^j
    """
    _check(R, f)
    n = R.n
    a = f.array
    out = R.L.zeros(n)
    out[0] = a[0]
    for j in range(1, n):
        out[j] = R.unit * R.sigma.apply(a[n - j], j)
    return from_array(R.hat(), out)


def theta_inverse(R_hat: ConstaRing, g: ConstaElt) -> ConstaElt:
    """The transposition of the hat ring, which undoes theta"""
    return theta(R_hat, g)


def sigma_on_ring(R: ConstaRing, f: ConstaElt, k: int = 1) -> ConstaElt:
    """sigma^k applied coefficientwise"""
    _check(R, f)
    return from_array(R, R.sigma.apply(f.array, k))


def ext(R: ConstaRing) -> HammingExt:
    """R as a Hamming extension of L with coordinates in the basis 1, x, ..., x^(n-1)"""
    def basis() -> List[ConstaElt]:
        return [ConstaElt(R, tuple(int(i == k) for i in range(R.n))) for k in range(R.n)]

    return HammingExt(
        name=f"L[x;sigma]/<x^{R.n} - {R.u}>",
        base=BaseRing.FIELD,
        field=R.L,
        rank=R.n,
        multiply=lambda f, g: ring_mul(R, f, g),
        one=lambda: one(R),
        coords=lambda f: f.array,
        from_coords=lambda w: from_array(R, w),
        basis=basis,
        sample=lambda rng: random_element(R, rng),
        describe=lambda f: list(f.coeffs),
    )


def code_from_gen(R: ConstaRing, f: ConstaElt) -> LinearCode:
    """v(Rf) as the row space of M_R(f)"""
    return code_from_matrix(ext(R), mrep_consta(R, f))


def admissible_units(L: Field, sigma: FieldAut) -> List[int]:
    """Every u != 0 with sigma(u) = u"""
    return [int(u) for u in subfield_elements(L, sigma.fixed_degree) if u != 0]


def monic_polys(sigma: FieldAut, degree: int) -> Iterator[SkewPoly]:
    F = sigma.field
    if degree == 0:
        yield sp.one(sigma)
        return
    for low in all_vectors(F, degree):
        yield sp.from_ints(sigma, [int(c) for c in low] + [1])


def monic_left_divisors(R: ConstaRing) -> List[Tuple[SkewPoly, SkewPoly]]:
    """Every monic f with x^n - u = f h exactly, with its cofactor h, by exhaustive scan"""
    if R.L.q ** R.n > MAX_ENUMERATION:
        raise CodeTooLarge(f"scanning {R.L.q}^{R.n} monic polynomials exceeds the enumeration limit")
    target = R.modulus
    found = []
    for d in range(R.n + 1):
        for f in monic_polys(R.sigma, d):
            h, r = sp.sp_divide("left", target, f)
            if r.is_zero:
                found.append((f, h))
    logger.debug(f"{R!r}: {len(found)} monic left divisors of x^n - u")
    return found


def cofactor(R: ConstaRing, f: SkewPoly) -> SkewPoly:
    """h with x^n - u = f h; f must be monic and divide exactly"""
    if f.sigma != R.sigma or f.convention != Convention.LEFT:
        raise MixedRings(f"{f!r} does not live in {R!r}")
    if not f.is_monic:
        raise NotMonic(f"generator {list(f.coeffs)} is not monic")
    h, r = sp.sp_divide("left", R.modulus, f)
    if not r.is_zero:
        raise NotALeftDivisor(f"{list(f.coeffs)} does not divide x^{R.n} - {R.u} on the left")
    return h


def dual_generator_poly(R: ConstaRing, h: SkewPoly) -> SkewPoly:
    """x^k Theta(h) with k = deg h, as the polynomial sum sigma^(k-i)(h_i) x^(k-i)"""
    k = int(h.degree)
    coeffs = [0] * (k + 1)
    for i in range(k + 1):
        coeffs[k - i] = int(R.sigma.apply(h.coeff(i), k - i))
    return sp.from_ints(R.sigma, coeffs)


@dataclass(frozen=True)
class ConstacyclicDual:
    ring: ConstaRing
    f: SkewPoly
    h: SkewPoly
    pair: DualPair
    dual_poly: SkewPoly
    shortcut: LinearCode

    @property
    def code(self) -> LinearCode:
        return self.pair.code

    @property
    def dual(self) -> LinearCode:
        return self.pair.dual

    @property
    def generator_matrix(self) -> galois.FieldArray:
        return mrep_consta(self.ring, from_poly(self.ring, self.f))

    @property
    def dual_matrix(self) -> galois.FieldArray:
        R_hat = self.ring.hat()
        return mrep_consta(R_hat, theta(self.ring, from_poly(self.ring, self.h)))


def dual(R: ConstaRing, f: SkewPoly) -> ConstacyclicDual:
    """
    The dual of v(Rf) for a monic left divisor f of x^n - u:
    with x^n - u = f h, the dual is v^(R^ Theta(h))
    """
    h = cofactor(R, f)
    R_hat = R.hat()
    E, E_hat = ext(R), ext(R_hat)
    f_elt, h_elt = from_poly(R, f), from_poly(R, h)

    code = code_from_matrix(E, mrep_consta(R, f_elt))
    dual_code = code_from_matrix(E_hat, mrep_consta(R_hat, theta(R, h_elt)))
    pair = DualPair(code=code, dual=dual_code, oracle=dual_oracle(code))

    shifted = dual_generator_poly(R, h)
    shortcut = code_from_matrix(E_hat, mrep_consta(R_hat, from_poly(R_hat, shifted)))
    if not pair.agrees:
        logger.warning(f"{R!r}: dual of {list(f.coeffs)} disagrees with the nullspace oracle")
    return ConstacyclicDual(ring=R, f=f, h=h, pair=pair, dual_poly=shifted, shortcut=shortcut)
