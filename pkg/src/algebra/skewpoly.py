"""
Skew Polynomial Arithmetic
Ore polynomials over GF(p^m) twisted by a Frobenius power, in both
multiplication conventions, with Euclidean divisions, gcds, lcms and
right evaluation through sigma-norms
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, reduce
from typing import Iterable, List, Sequence, Tuple, Union
import logging
import math

import galois
import numpy as np

from .gf import Field, FieldAut, felt
from ..errors import DivisionByZero, MixedRings, SkewDualError, WrongConvention, ZeroInput

logger = logging.getLogger(__name__)

# Degree of the zero polynomial
NEG_INF = -math.inf


class Convention(str, Enum):
    LEFT = "left"    # x a = sigma(a) x, coefficients written on the left
    RIGHT = "right"  # a z = z sigma(a), coefficients written on the right


@dataclass(frozen=True)
class SkewPoly:
    """
    Element of L[x; sigma]. coeffs are ascending integer encodings with no trailing zeros.
    For RIGHT, coeffs[k] is the coefficient c in the term z^k c.
    """
    sigma: FieldAut
    convention: Convention
    coeffs: Tuple[int, ...]

    @property
    def field(self) -> Field:
        return self.sigma.field

    @cached_property
    def array(self) -> galois.FieldArray:
        return self.field.GF(list(self.coeffs)) if self.coeffs else self.field.zeros(0)

    @property
    def degree(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> galois.FieldArray:
        if not self.coeffs:
            raise ZeroInput("the zero polynomial has no leading coefficient")
        return self.field.GF(self.coeffs[-1])

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> galois.FieldArray:
        return self.field.GF(self.coeffs[k] if 0 <= k < len(self.coeffs) else 0)

    def padded(self, length: int) -> galois.FieldArray:
        """Coefficient vector of the given length (truncates nothing; caller checks degree)"""
        out = self.field.zeros(length)
        out[:len(self.coeffs)] = self.array
        return out

    def same_ring(self, other: "SkewPoly") -> bool:
        return self.sigma == other.sigma and self.convention == other.convention

    def _check(self, other: "SkewPoly") -> None:
        if not self.same_ring(other):
            raise MixedRings(f"{self.sigma!r}/{self.convention.value} vs {other.sigma!r}/{other.convention.value}")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return _build(self.sigma, self.convention, self.padded(size) + other.padded(size))

    def __neg__(self) -> "SkewPoly":
        return _build(self.sigma, self.convention, -self.array)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return sp_mul(self, other)

    def __repr__(self) -> str:
        return f"SkewPoly({self.convention.value}, s={self.sigma.s}, {list(self.coeffs)})"


def _build(sigma: FieldAut, convention: Convention, arr) -> SkewPoly:
    values = [int(c) for c in arr]
    while values and values[-1] == 0:
        values.pop()
    return SkewPoly(sigma=sigma, convention=Convention(convention), coeffs=tuple(values))


def from_ints(sigma: FieldAut, coeffs: Iterable[int], convention: Convention = Convention.LEFT) -> SkewPoly:
    values = [int(c) for c in coeffs]
    if any(not 0 <= c < sigma.field.q for c in values):
        raise SkewDualError(f"coefficients {values} are not elements of {sigma.field!r}")
    return _build(sigma, convention, values)


def to_ints(f: SkewPoly) -> List[int]:
    return list(f.coeffs)


def zero(sigma: FieldAut, convention: Convention = Convention.LEFT) -> SkewPoly:
    return SkewPoly(sigma=sigma, convention=Convention(convention), coeffs=())


def one(sigma: FieldAut, convention: Convention = Convention.LEFT) -> SkewPoly:
    return SkewPoly(sigma=sigma, convention=Convention(convention), coeffs=(1,))


def constant(sigma: FieldAut, c, convention: Convention = Convention.LEFT) -> SkewPoly:
    return _build(sigma, convention, [int(c)])


def monomial(sigma: FieldAut, c, k: int, convention: Convention = Convention.LEFT) -> SkewPoly:
    """c x^k (LEFT) or z^k c (RIGHT)"""
    return _build(sigma, convention, [0] * k + [int(c)])


def x_minus(sigma: FieldAut, a, convention: Convention = Convention.LEFT) -> SkewPoly:
    """The linear polynomial x - a"""
    F = sigma.field
    return _build(sigma, convention, [int(-felt(F, a)), 1])


def x_power_minus(sigma: FieldAut, n: int, u, convention: Convention = Convention.LEFT) -> SkewPoly:
    """x^n - u"""
    F = sigma.field
    return _build(sigma, convention, [int(-felt(F, u))] + [0] * (n - 1) + [1])


def random(sigma: FieldAut, rng: np.random.Generator, degree: int,
           convention: Convention = Convention.LEFT, monic: bool = False) -> SkewPoly:
    """Uniform coefficients up to the given degree; a negative degree gives zero"""
    if degree < 0:
        return zero(sigma, convention)
    F = sigma.field
    coeffs = F.random(rng, degree + 1)
    if monic:
        coeffs[-1] = 1
    return _build(sigma, convention, coeffs)


def sp_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """
    Product in the skew ring.

    LEFT:  (sum a_i x^i)(sum b_j x^j) = sum a_i sigma^i(b_j) x^(i+j)
    RIGHT: (sum z^i a_i)(sum z^j b_j) = sum z^(i+j) sigma^j(a_i) b_j
    """
    f._check(g)
    if f.is_zero or g.is_zero:
        return zero(f.sigma, f.convention)
    F = f.field
    a, b = f.array, g.array
    out = F.zeros(len(a) + len(b) - 1)
    if f.convention == Convention.LEFT:
        for i in range(len(a)):
            if a[i] != 0:
                out[i:i + len(b)] = out[i:i + len(b)] + a[i] * f.sigma.apply(b, i)
    else:
        for j in range(len(b)):
            if b[j] != 0:
                out[j:j + len(a)] = out[j:j + len(a)] + f.sigma.apply(a, j) * b[j]
    return _build(f.sigma, f.convention, out)


def scale_left(c, f: SkewPoly) -> SkewPoly:
    """c * f"""
    return sp_mul(constant(f.sigma, felt(f.field, c), f.convention), f)


def scale_right(f: SkewPoly, c) -> SkewPoly:
    """f * c"""
    return sp_mul(f, constant(f.sigma, felt(f.field, c), f.convention))


def _quotient_term(side: str, r: SkewPoly, g: SkewPoly) -> SkewPoly:
    """The monomial t with deg(r - t g) < deg r (right) or deg(r - g t) < deg r (left)"""
    sigma = r.sigma
    k = int(r.degree - g.degree)
    dg = int(g.degree)
    r_lead, g_lead = r.lead, g.lead
    if r.convention == Convention.LEFT:
        if side == "right":
            c = r_lead / sigma.apply(g_lead, k)
        else:
            c = sigma.apply(r_lead / g_lead, -dg)
    else:
        if side == "right":
            c = sigma.apply(r_lead / g_lead, -dg)
        else:
            c = r_lead / sigma.apply(g_lead, k)
    return monomial(sigma, c, k, r.convention)


def sp_divide(side: str, f: SkewPoly, g: SkewPoly) -> Tuple[SkewPoly, SkewPoly]:
    """
    Euclidean division.

    Args:
        side: "right" for f = q g + r, "left" for f = g q + r
        f: dividend
        g: nonzero divisor

    Returns:
        (q, r) with deg r < deg g
    """
    f._check(g)
    if side not in ("right", "left"):
        raise SkewDualError(f"division side must be 'right' or 'left', got '{side}'")
    if g.is_zero:
        raise DivisionByZero("division by the zero polynomial")
    q = zero(f.sigma, f.convention)
    r = f
    while not r.is_zero and r.degree >= g.degree:
        t = _quotient_term(side, r, g)
        q = q + t
        r = r - (sp_mul(t, g) if side == "right" else sp_mul(g, t))
    return q, r


def make_monic(f: SkewPoly, side: str) -> SkewPoly:
    """Normalize the leading coefficient by a scalar on the given side (left keeps Lf, right keeps fL)"""
    if f.is_zero:
        raise ZeroInput("cannot normalize the zero polynomial")
    d = int(f.degree)
    lead_inv = f.lead ** -1
    twisted = (f.convention == Convention.RIGHT) == (side == "left")
    c = f.sigma.apply(lead_inv, -d) if twisted else lead_inv
    return scale_left(c, f) if side == "left" else scale_right(f, c)


def _euclid(side: str, f: SkewPoly, g: SkewPoly):
    """Extended Euclid; returns (last nonzero remainder, u, v) with u f + v g = 0 (right) or f u + g v = 0 (left)"""
    r0, r1 = f, g
    u0, u1 = one(f.sigma, f.convention), zero(f.sigma, f.convention)
    v0, v1 = zero(f.sigma, f.convention), one(f.sigma, f.convention)
    while not r1.is_zero:
        q, r = sp_divide(side, r0, r1)
        r0, r1 = r1, r
        if side == "right":
            u0, u1 = u1, u0 - sp_mul(q, u1)
            v0, v1 = v1, v0 - sp_mul(q, v1)
        else:
            u0, u1 = u1, u0 - sp_mul(u1, q)
            v0, v1 = v1, v0 - sp_mul(v1, q)
    return r0, u1, v1


def sp_gcd_lcm(kind: str, f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """
    Monic gcrd, gcld, lclm or lcrm of f and g.

    gcrd generates Lf + Lg and lclm generates Lf intersected with Lg;
    gcld and lcrm are the mirrored right-ideal versions.
    """
    f._check(g)
    if kind in ("gcrd", "gcld"):
        if f.is_zero and g.is_zero:
            raise ZeroInput(f"{kind} of two zero polynomials")
        side = "right" if kind == "gcrd" else "left"
        d, _, _ = _euclid(side, f, g)
        return make_monic(d, "left" if side == "right" else "right")
    if kind in ("lclm", "lcrm"):
        if f.is_zero or g.is_zero:
            raise ZeroInput(f"{kind} needs two nonzero polynomials")
        if kind == "lclm":
            _, u, _ = _euclid("right", f, g)
            return make_monic(sp_mul(u, f), "left")
        _, u, _ = _euclid("left", f, g)
        return make_monic(sp_mul(f, u), "right")
    raise SkewDualError(f"unknown gcd/lcm kind '{kind}'")


def gcrd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return sp_gcd_lcm("gcrd", f, g)


def gcld(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return sp_gcd_lcm("gcld", f, g)


def lclm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return sp_gcd_lcm("lclm", f, g)


def lcrm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return sp_gcd_lcm("lcrm", f, g)


def lclm_many(polys: Sequence[SkewPoly]) -> SkewPoly:
    """Left-to-right fold of lclm"""
    if not polys:
        raise ZeroInput("lclm of an empty family")
    return reduce(lclm, polys[1:], make_monic(polys[0], "left"))


def lcrm_many(polys: Sequence[SkewPoly]) -> SkewPoly:
    """Left-to-right fold of lcrm"""
    if not polys:
        raise ZeroInput("lcrm of an empty family")
    return reduce(lcrm, polys[1:], make_monic(polys[0], "right"))


def sp_norm(a, i: int, sigma: FieldAut) -> galois.FieldArray:
    """N_i(a) = a sigma(a) ... sigma^(i-1)(a); N_0 = 1"""
    F = sigma.field
    a = felt(F, a)
    if i < 0:
        raise SkewDualError(f"norm index must be >= 0, got {i}")
    return reduce(lambda x, y: x * y, (sigma.apply(a, j) for j in range(i)), F.one)


def sp_right_eval(f: SkewPoly, a, method: str = "norms") -> galois.FieldArray:
    """
    Right evaluation f(a): the remainder of the right division of f by x - a,
    equivalently sum f_i N_i(a)
    """
    if f.convention != Convention.LEFT:
        raise WrongConvention("right evaluation is defined for LEFT-convention polynomials")
    F = f.field
    a = felt(F, a)
    if method == "division":
        _, r = sp_divide("right", f, x_minus(f.sigma, a))
        return r.coeff(0)
    if method == "norms":
        if f.is_zero:
            return F.zero
        norms = F.GF([int(sp_norm(a, i, f.sigma)) for i in range(len(f.coeffs))])
        return (f.array * norms).sum()
    raise SkewDualError(f"unknown evaluation method '{method}'")


def sp_apply_sigma(f: SkewPoly, k: int = 1) -> SkewPoly:
    """Coefficientwise sigma^k, the ring automorphism fixing x"""
    return _build(f.sigma, f.convention, f.sigma.apply(f.array, k))


def to_convention(f: SkewPoly, target: Convention) -> SkewPoly:
    """
    Rewrite f in the other convention. The LEFT ring over sigma is the RIGHT
    ring over sigma^-1 (a x = x sigma^-1(a)), so the result lives over the
    inverse automorphism with the k-th coefficient twisted by sigma^-k.
    """
    target = Convention(target)
    if target == f.convention:
        return f
    twisted = [int(f.sigma.apply(f.coeff(k), -k)) for k in range(len(f.coeffs))]
    return _build(f.sigma.inverse(), target, twisted)
