"""
Finite Field Arithmetic
GF(p^m) on top of galois: Frobenius automorphisms, traces and norms,
dual / normal / self-dual normal bases and the Hilbert 90 solver
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from typing import Optional, Sequence, Tuple, Union
import logging
import math

import galois
import numpy as np

from ..errors import (
    CompositeCharacteristic,
    DivisionByZero,
    FieldTooLarge,
    NonDivisorDegree,
    NormNotOne,
    NotABasis,
    ReducibleModulus,
    SkewDualError,
)

logger = logging.getLogger(__name__)

# Every search in this package is exhaustive over the field
MAX_FIELD_ORDER = 2 ** 16

FeltLike = Union[int, np.integer, galois.FieldArray]


@lru_cache(maxsize=None)
def _galois_class(p: int, m: int, modulus: Tuple[int, ...]):
    if m == 1:
        return galois.GF(p)
    poly = galois.Poly(list(modulus), field=galois.GF(p), order="asc")
    return galois.GF(p ** m, irreducible_poly=poly)


@dataclass(frozen=True)
class Field:
    """
    GF(p^m) with a fixed monic irreducible modulus.
    Elements are integers sum(c_i p^i) over the polynomial basis 1, x, ..., x^(m-1).
    """
    p: int
    m: int
    modulus: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.m

    @cached_property
    def GF(self):
        """The galois FieldArray class realizing this field"""
        return _galois_class(self.p, self.m, self.modulus)

    def __call__(self, value) -> galois.FieldArray:
        return self.GF(value)

    @property
    def zero(self) -> galois.FieldArray:
        return self.GF(0)

    @property
    def one(self) -> galois.FieldArray:
        return self.GF(1)

    def elements(self) -> galois.FieldArray:
        return self.GF.elements

    def nonzero_elements(self) -> galois.FieldArray:
        return self.GF.elements[1:]

    def zeros(self, shape) -> galois.FieldArray:
        return self.GF.Zeros(shape)

    def identity(self, size: int) -> galois.FieldArray:
        return self.GF.Identity(size)

    def random(self, rng: np.random.Generator, shape=(), nonzero: bool = False) -> galois.FieldArray:
        low = 1 if nonzero else 0
        return self.GF(rng.integers(low, self.q, size=shape))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"


def field_create(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> Field:
    """
    Build GF(p^m).

    Args:
        p: characteristic, must be prime
        m: extension degree >= 1
        modulus: ascending base-p digits of a monic irreducible of degree m;
            the lexicographically smallest one is used when omitted

    Returns:
        Field
    """
    if p < 2 or not galois.is_prime(p):
        raise CompositeCharacteristic(f"characteristic {p} is not prime")
    if m < 1:
        raise SkewDualError(f"extension degree must be >= 1, got {m}")
    if p ** m > MAX_FIELD_ORDER:
        logger.warning(f"Refusing GF({p}^{m}): order exceeds {MAX_FIELD_ORDER}")
        raise FieldTooLarge(f"GF({p}^{m}) exceeds the supported order {MAX_FIELD_ORDER}")

    prime_field = galois.GF(p)
    if modulus is None:
        if m == 1:
            digits = (0, 1)
        else:
            poly = galois.irreducible_poly(p, m, method="min")
            digits = tuple(int(c) for c in poly.coeffs[::-1])
    else:
        digits = tuple(int(c) for c in modulus)
        if len(digits) != m + 1 or any(not 0 <= c < p for c in digits):
            raise ReducibleModulus(f"modulus {digits} is not a degree-{m} polynomial over GF({p})")
        if digits[-1] != 1:
            raise ReducibleModulus(f"modulus {digits} is not monic")
        if m > 1 and not galois.Poly(list(digits), field=prime_field, order="asc").is_irreducible():
            raise ReducibleModulus(f"modulus {digits} is reducible over GF({p})")

    F = Field(p=p, m=m, modulus=digits)
    logger.debug(f"Created {F!r} with modulus {digits}")
    return F


def felt(F: Field, x: FeltLike) -> galois.FieldArray:
    """Coerce an integer (or element) into F"""
    if isinstance(x, galois.FieldArray):
        if type(x) is not F.GF:
            x = F.GF(int(x))
        return x
    return F.GF(int(x))


def f_arith(F: Field, op: str, x: FeltLike, y: Union[FeltLike, None] = None) -> galois.FieldArray:
    """Exact arithmetic in F: add, sub, mul, div, pow (integer exponent) and inv"""
    a = felt(F, x)
    if op == "inv":
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return a ** -1
    if op == "pow":
        exponent = int(y)
        if exponent < 0 and a == 0:
            raise DivisionByZero("negative power of 0")
        return a ** exponent
    b = felt(F, y)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero("division by 0")
        return a / b
    raise SkewDualError(f"unknown field operation '{op}'")


def frobenius(F: Field, s: int, x):
    """x -> x^(p^s), elementwise on arrays"""
    e = s % F.m
    if e == 0:
        return x
    return x ** (F.p ** e)


@dataclass(frozen=True)
class FieldAut:
    """The Frobenius power x -> x^(p^s) of a field"""
    field: Field
    s: int

    @classmethod
    def frobenius(cls, F: Field, d: int = 1) -> "FieldAut":
        return cls(F, d % F.m)

    @property
    def order(self) -> int:
        return self.field.m // math.gcd(self.field.m, self.s % self.field.m)

    @property
    def fixed_degree(self) -> int:
        """Degree over GF(p) of the fixed field of the automorphism"""
        return math.gcd(self.field.m, self.s % self.field.m)

    @property
    def is_identity(self) -> bool:
        return self.s % self.field.m == 0

    def power(self, k: int) -> "FieldAut":
        return FieldAut(self.field, (self.s * k) % self.field.m)

    def inverse(self) -> "FieldAut":
        return self.power(-1)

    def apply(self, x, k: int = 1):
        """sigma^k(x); k may be negative"""
        return frobenius(self.field, self.s * k, x)

    def __repr__(self) -> str:
        return f"FieldAut({self.field!r}, s={self.s})"


def _check_subfield(F: Field, d: int) -> int:
    if d < 1 or F.m % d != 0:
        raise NonDivisorDegree(f"{d} does not divide the extension degree {F.m}")
    return F.m // d


def _conjugates(F: Field, d: int, x):
    t = _check_subfield(F, d)
    return [frobenius(F, d * i, x) for i in range(t)]


def trace(F: Field, d: int, x):
    """Tr from F down to GF(p^d); elementwise on arrays"""
    x = felt(F, x) if not isinstance(x, galois.FieldArray) else x
    return reduce(lambda a, b: a + b, _conjugates(F, d, x))


def norm(F: Field, d: int, x):
    """N from F down to GF(p^d); elementwise on arrays"""
    x = felt(F, x) if not isinstance(x, galois.FieldArray) else x
    return reduce(lambda a, b: a * b, _conjugates(F, d, x))


def trace_norm(F: Field, d: int, which: str, x: FeltLike) -> galois.FieldArray:
    if which == "trace":
        return trace(F, d, x)
    if which == "norm":
        return norm(F, d, x)
    raise SkewDualError(f"expected 'trace' or 'norm', got '{which}'")


def subfield_elements(F: Field, d: int) -> galois.FieldArray:
    """GF(p^d) as the elements of F fixed by x -> x^(p^d)"""
    _check_subfield(F, d)
    elements = F.elements()
    return elements[frobenius(F, d, elements) == elements]


def gram_matrix(F: Field, d: int, elements: galois.FieldArray) -> galois.FieldArray:
    """Tr(a_i a_j) over GF(p^d)"""
    elements = F.GF(elements)
    return trace(F, d, elements[:, None] * elements[None, :])


@dataclass(frozen=True)
class SubfieldBasis:
    """An ordered basis of F over GF(p^d), with cached normality and self-duality verdicts"""
    field: Field
    d: int
    elements: Tuple[int, ...]
    normal: bool
    self_dual: bool

    @property
    def t(self) -> int:
        return len(self.elements)

    @cached_property
    def vector(self) -> galois.FieldArray:
        return self.field.GF(list(self.elements))

    @cached_property
    def gram(self) -> galois.FieldArray:
        return gram_matrix(self.field, self.d, self.vector)

    @cached_property
    def dual_vector(self) -> galois.FieldArray:
        return np.linalg.inv(self.gram) @ self.vector


def make_basis(F: Field, d: int, elements: Sequence[FeltLike]) -> SubfieldBasis:
    """Validate a candidate basis of F over GF(p^d) and compute its flags"""
    t = _check_subfield(F, d)
    values = tuple(int(e) for e in elements)
    if len(values) != t:
        raise NotABasis(f"a basis of {F!r} over GF({F.p}^{d}) has {t} elements, got {len(values)}")
    vec = F.GF(list(values))
    gram = gram_matrix(F, d, vec)
    if np.linalg.matrix_rank(gram) < t:
        raise NotABasis(f"{values} is linearly dependent over GF({F.p}^{d})")

    conj = _conjugates(F, d, vec[0])
    normal = all(int(conj[k]) == values[k] for k in range(t))
    self_dual = bool(np.array_equal(gram, F.identity(t)))
    return SubfieldBasis(field=F, d=d, elements=values, normal=normal, self_dual=self_dual)


def normal_basis(F: Field, d: int, alpha: FeltLike) -> SubfieldBasis:
    """The basis {alpha, alpha^(p^d), ...}; NotABasis if the conjugates are dependent"""
    conj = _conjugates(F, d, felt(F, alpha))
    return make_basis(F, d, [int(c) for c in conj])


def dual_basis(B: SubfieldBasis) -> SubfieldBasis:
    """D* with Tr(a_i b_j) = delta_ij, through the inverse Gram matrix"""
    return make_basis(B.field, B.d, [int(b) for b in B.dual_vector])


def coordinates(B: SubfieldBasis, gamma) -> galois.FieldArray:
    """(Tr(b_0 gamma), ..., Tr(b_{t-1} gamma)); the last axis indexes the basis"""
    gamma = B.field.GF(gamma) if not isinstance(gamma, galois.FieldArray) else gamma
    return trace(B.field, B.d, gamma[..., None] * B.dual_vector)


def from_coordinates(B: SubfieldBasis, coords) -> galois.FieldArray:
    """sum_i c_i a_i, the inverse of coordinates()"""
    coords = B.field.GF(coords) if not isinstance(coords, galois.FieldArray) else coords
    return (coords * B.vector).sum(axis=-1)


def normal_basis_check(F: Field, d: int, alpha: FeltLike) -> bool:
    _check_subfield(F, d)
    if felt(F, alpha) == 0:
        return False
    conj = F.GF([int(c) for c in _conjugates(F, d, felt(F, alpha))])
    return bool(np.linalg.matrix_rank(gram_matrix(F, d, conj)) == len(conj))


def find_self_dual_normal(F: Field, d: int) -> Optional[int]:
    """The least alpha whose conjugates form a self-dual normal basis over GF(p^d), if any"""
    t = _check_subfield(F, d)
    identity = F.identity(t)
    for alpha in range(1, F.q):
        if not normal_basis_check(F, d, alpha):
            continue
        conj = F.GF([int(c) for c in _conjugates(F, d, F.GF(alpha))])
        if np.array_equal(gram_matrix(F, d, conj), identity):
            logger.debug(f"Self-dual normal basis of {F!r} over GF({F.p}^{d}) generated by {alpha}")
            return alpha
    return None


def hilbert90(F: Field, d: int, mu: FeltLike, sigma: Optional[FieldAut] = None) -> galois.FieldArray:
    """
    Solve mu = sigma(nu) / nu.

    Args:
        F: the field L
        d: degree of the fixed field K = GF(p^d)
        mu: element with N_{L/K}(mu) = 1
        sigma: a generator of Gal(L/K); the p^d-Frobenius by default

    Returns:
        the least nonzero nu (by integer encoding) with sigma(nu) nu^-1 = mu
    """
    _check_subfield(F, d)
    if sigma is None:
        sigma = FieldAut.frobenius(F, d)
    elif sigma.fixed_degree != d:
        raise NonDivisorDegree(f"{sigma!r} does not fix exactly GF({F.p}^{d})")
    mu = felt(F, mu)
    if mu == 0 or norm(F, d, mu) != 1:
        raise NormNotOne(f"N({int(mu)}) != 1 over GF({F.p}^{d})")

    candidates = F.nonzero_elements()
    quotients = sigma.apply(candidates) / candidates
    hits = np.flatnonzero(quotients == mu)
    # Hilbert 90 guarantees a hit once the norm is 1
    return candidates[hits[0]]
