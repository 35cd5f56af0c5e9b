"""
Left Ideal Convolutional Codes
Word ambient A = M_n(K) over F = GF(q) with K = GF(q^t): coordinate maps,
Kronecker and regular representation matrices, the Ore extension A[z; sigma]
in the right convention, its transposition Theta and duals of codes with
annihilator certificates
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union
import logging

import galois
import numpy as np

from ..algebra.gf import (
    Field,
    SubfieldBasis,
    coordinates,
    field_create,
    find_self_dual_normal,
    from_coordinates,
    frobenius,
    make_basis,
    normal_basis,
    normal_basis_check,
)
from ..algebra.linalg import PolyMat, is_direct_summand, poly_mat_from_constant
from ..errors import BadCertificate, BasisNotSelfDualNormal, SingularU, SkewDualError
from .framework import (
    BaseRing,
    CheckReport,
    DualPair,
    HammingExt,
    LinearCode,
    check_transposition,
    dual_code,
    left_annihilator,
    matrices_equal,
    matrix_to_json,
    mrep,
)

logger = logging.getLogger(__name__)

Entries = Tuple[int, ...]


@dataclass(frozen=True)
class WordAmbient:
    """
    A = M_n(K) as an F-space with basis alpha_k E_ij, ordered by entry in row
    concatenation order and then by k; coordinate index = (i n + j) t + k
    """
    F: Field
    K: Field
    n: int
    D: SubfieldBasis
    root: int  # image in K of the generator of F

    @property
    def t(self) -> int:
        return self.K.m // self.F.m

    @property
    def d(self) -> int:
        return self.F.m

    @property
    def rank(self) -> int:
        return self.t * self.n * self.n

    @cached_property
    def embed_table(self) -> np.ndarray:
        """F element (as integer) -> its image in K"""
        if self.F.m == 1:
            return np.arange(self.F.p)
        r = self.K.GF(self.root)
        powers = [r ** i for i in range(self.F.m)]
        table = np.zeros(self.F.q, dtype=np.int64)
        for c in range(self.F.q):
            digits = np.base_repr(c, self.F.p).zfill(self.F.m)[::-1]
            value = self.K.zero
            for i, ch in enumerate(digits):
                value = value + self.K.GF(int(ch, self.F.p)) * powers[i]
            table[c] = int(value)
        return table

    @cached_property
    def restrict_table(self) -> np.ndarray:
        table = np.full(self.K.q, -1, dtype=np.int64)
        table[self.embed_table] = np.arange(self.F.q)
        return table

    def lift(self, x) -> galois.FieldArray:
        return self.K.GF(self.embed_table[np.asarray(x, dtype=np.int64)])

    def restrict(self, y) -> galois.FieldArray:
        values = self.restrict_table[np.asarray(y, dtype=np.int64)]
        if np.any(values < 0):
            raise SkewDualError(f"element of {self.K!r} outside the embedded {self.F!r}")
        return self.F.GF(values)

    def matrix(self, entries) -> galois.FieldArray:
        return self.K.GF(np.asarray(entries, dtype=np.int64).reshape(self.n, self.n))

    def tau(self, x, k: int = 1):
        """The q-Frobenius of K over F, to the power k"""
        return frobenius(self.K, self.d * k, x)

    def __repr__(self) -> str:
        return f"WordAmbient(M_{self.n}({self.K!r}) over {self.F!r})"


def _embedding_root(F: Field, K: Field) -> int:
    if F.m == 1:
        return 1
    modulus = galois.Poly(list(F.modulus), field=K.GF, order="asc")
    return int(min(int(r) for r in modulus.roots()))


def ambient_create(p: int, d: int, t: int, n: int, basis: Optional[Sequence[int]] = None,
                   F_modulus: Optional[Sequence[int]] = None,
                   K_modulus: Optional[Sequence[int]] = None) -> WordAmbient:
    """
    M_n(GF(p^(d t))) over GF(p^d). Without an explicit basis of K over F the
    least self-dual normal basis is used, falling back to the least normal one.
    """
    if n < 1 or t < 1:
        raise SkewDualError(f"matrix size and extension degree must be >= 1, got n={n}, t={t}")
    F = field_create(p, d, F_modulus)
    K = field_create(p, d * t, K_modulus)
    if basis is not None:
        D = make_basis(K, d, basis)
    else:
        alpha = find_self_dual_normal(K, d)
        if alpha is None:
            alpha = next(a for a in range(1, K.q) if normal_basis_check(K, d, a))
        D = normal_basis(K, d, alpha)
    W = WordAmbient(F=F, K=K, n=n, D=D, root=_embedding_root(F, K))
    logger.debug(f"Created {W!r} with basis {D.elements} (normal={D.normal}, self-dual={D.self_dual})")
    return W


def coord(W: WordAmbient, a) -> galois.FieldArray:
    """The F-coordinates of a in the basis alpha_k E_ij"""
    a = W.K.GF(a).reshape(-1)
    return W.restrict(coordinates(W.D, a)).reshape(-1)


def coord_inv(W: WordAmbient, w) -> galois.FieldArray:
    w = W.F.GF(w)
    if w.shape != (W.rank,):
        raise SkewDualError(f"expected {W.rank} coordinates, got shape {w.shape}")
    entries = from_coordinates(W.D, W.lift(w).reshape(W.n * W.n, W.t))
    return entries.reshape(W.n, W.n)


def ambient_basis(W: WordAmbient) -> List[galois.FieldArray]:
    unit = W.F.identity(W.rank)
    return [coord_inv(W, unit[i]) for i in range(W.rank)]


def kron(M: galois.FieldArray, N: galois.FieldArray) -> galois.FieldArray:
    """The block matrix (m_ij N)"""
    r1, c1 = M.shape
    r2, c2 = N.shape
    out = type(M).Zeros((r1 * r2, c1 * c2))
    for i in range(r1):
        for j in range(c1):
            out[i * r2:(i + 1) * r2, j * c2:(j + 1) * c2] = M[i, j] * N
    return out


def little_m(W: WordAmbient, gamma) -> galois.FieldArray:
    """Multiplication by gamma in D-coordinates: row i holds the coordinates of alpha_i gamma"""
    gamma = W.K.GF(int(gamma))
    return W.restrict(coordinates(W.D, W.D.vector * gamma))


def m_expand(W: WordAmbient, M: galois.FieldArray) -> galois.FieldArray:
    """Each entry m_ij of a matrix over K replaced by the t x t block m(m_ij)"""
    r, c = M.shape
    t = W.t
    blocks = coordinates(W.D, M[..., None] * W.D.vector)  # (r, c, t, t)
    return W.restrict(np.asarray(blocks).transpose(0, 2, 1, 3).reshape(r * t, c * t))


def linear_map_matrix(W: WordAmbient, fn: Callable[[galois.FieldArray], galois.FieldArray]) -> galois.FieldArray:
    """Matrix of an F-linear map of A in the basis alpha_k E_ij: row i is coord(fn(b_i))"""
    return W.F.GF(np.vstack([np.asarray(coord(W, fn(b))) for b in ambient_basis(W)]))


@dataclass(frozen=True)
class MatAut:
    """sigma(a) = U tau^h(a) U^-1, with U stored row-major"""
    ambient: WordAmbient
    U: Entries
    h: int

    @cached_property
    def matrix(self) -> galois.FieldArray:
        return self.ambient.matrix(self.U)

    @cached_property
    def matrix_inv(self) -> galois.FieldArray:
        return np.linalg.inv(self.matrix)

    def apply(self, a, k: int = 1) -> galois.FieldArray:
        """sigma^k(a); k may be negative"""
        sigma = self if k == 1 else self.power(k)
        W = self.ambient
        return sigma.matrix @ W.tau(W.K.GF(a), sigma.h) @ sigma.matrix_inv

    def compose(self, other: "MatAut") -> "MatAut":
        """self after other"""
        W = self.ambient
        U = self.matrix @ W.tau(other.matrix, self.h)
        return _mat_aut(W, U, (self.h + other.h) % W.t)

    def inverse(self) -> "MatAut":
        W = self.ambient
        h = (W.t - self.h) % W.t
        return _mat_aut(W, W.tau(self.matrix_inv, h), h)

    def power(self, k: int) -> "MatAut":
        base = self if k >= 0 else self.inverse()
        result = identity_aut(self.ambient)
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    def to_json(self) -> Dict:
        return {"U": np.asarray(self.matrix, dtype=np.int64).tolist(), "h": self.h}


def _mat_aut(W: WordAmbient, U: galois.FieldArray, h: int) -> MatAut:
    return MatAut(ambient=W, U=tuple(int(x) for x in np.asarray(U).reshape(-1)), h=h)


def mat_aut(W: WordAmbient, U, h: int) -> MatAut:
    U = W.K.GF(np.asarray(U, dtype=np.int64))
    if U.shape != (W.n, W.n):
        raise SkewDualError(f"U must be {W.n} x {W.n}, got shape {U.shape}")
    if np.linalg.matrix_rank(U) < W.n:
        raise SingularU(f"U = {np.asarray(U).tolist()} is singular")
    if not 0 <= h < W.t:
        raise SkewDualError(f"Frobenius power must lie in [0, {W.t}), got {h}")
    return _mat_aut(W, U, h)


def identity_aut(W: WordAmbient) -> MatAut:
    return _mat_aut(W, W.K.identity(W.n), 0)


def random_regular(W: WordAmbient, rng: np.random.Generator) -> galois.FieldArray:
    while True:
        U = W.K.random(rng, (W.n, W.n))
        if np.linalg.matrix_rank(U) == W.n:
            return U


def random_mat_aut(W: WordAmbient, rng: np.random.Generator, h: Optional[int] = None) -> MatAut:
    if h is None:
        h = int(rng.integers(0, W.t))
    return mat_aut(W, random_regular(W, rng), h)


def random_tau_aut(W: WordAmbient, rng: np.random.Generator) -> MatAut:
    """sigma_U composed with tau for a random regular U"""
    return random_mat_aut(W, rng, h=1 % W.t)


def sigma_hat(sigma: MatAut) -> MatAut:
    """theta sigma^-1 theta, which is again of the form (tau^h'(U^T), h') with h' = (t - h) mod t"""
    W = sigma.ambient
    h = (W.t - sigma.h) % W.t
    return _mat_aut(W, W.tau(sigma.matrix.T, h), h)


def mat_a(W: WordAmbient, a) -> galois.FieldArray:
    """Right multiplication by a: m(I kron a)"""
    return m_expand(W, kron(W.K.identity(W.n), W.K.GF(a)))


def mat_sigma_u(W: WordAmbient, U) -> galois.FieldArray:
    U = W.K.GF(U)
    return m_expand(W, kron(U.T, np.linalg.inv(U)))


def p_h(W: WordAmbient, h: int) -> galois.FieldArray:
    """The cyclic shift of normal-basis coordinates induced by tau^h"""
    t = W.t
    P = W.F.zeros((t, t))
    for k in range(t):
        P[k, (k + h) % t] = 1
    return P


def mat_tau(W: WordAmbient, h: int) -> galois.FieldArray:
    return kron(W.F.identity(W.n * W.n), p_h(W, h))


def mat_sigma(W: WordAmbient, sigma: MatAut) -> galois.FieldArray:
    """M_sigma = M_tau^h M_sigma_U"""
    return mat_tau(W, sigma.h) @ mat_sigma_u(W, sigma.matrix)


@dataclass(frozen=True)
class RepMatrices:
    samples: List[galois.FieldArray]
    M_a: List[galois.FieldArray]
    M_sigma_U: galois.FieldArray
    M_tau: galois.FieldArray
    M_sigma: galois.FieldArray


def rep_matrices(W: WordAmbient, sigma: MatAut, samples: int = 5,
                 rng: Union[int, np.random.Generator] = 0) -> RepMatrices:
    rng = np.random.default_rng(rng)
    if not W.D.normal:
        raise BasisNotSelfDualNormal("the Frobenius representation needs a normal basis")
    sampled = [W.K.random(rng, (W.n, W.n)) for _ in range(samples)]
    return RepMatrices(
        samples=sampled,
        M_a=[mat_a(W, a) for a in sampled],
        M_sigma_U=mat_sigma_u(W, sigma.matrix),
        M_tau=mat_tau(W, sigma.h),
        M_sigma=mat_sigma(W, sigma),
    )


def check_rep_matrices(W: WordAmbient, sigma: MatAut, samples: int = 5,
                       seed: Union[int, np.random.Generator] = 0) -> CheckReport:
    """Closed forms against the coordinate definition, the commutation rule and the transpose identities"""
    reps = rep_matrices(W, sigma, samples, seed)
    report = CheckReport(name=f"{W!r}: representation matrices")
    U, h = sigma.matrix, sigma.h
    U_inv = sigma.matrix_inv
    by_definition = {
        "sigma_U": (reps.M_sigma_U, linear_map_matrix(W, lambda b: U @ b @ U_inv)),
        "tau^h": (reps.M_tau, linear_map_matrix(W, lambda b: W.tau(b, h))),
        "sigma": (reps.M_sigma, linear_map_matrix(W, sigma.apply)),
    }
    for name, (closed, defined) in by_definition.items():
        report.record(matrices_equal(closed, defined), name, matrix_to_json(closed), matrix_to_json(defined))

    inverse_tau = mat_tau(W, (W.t - h) % W.t)
    report.record(matrices_equal(reps.M_tau @ inverse_tau, W.F.identity(W.rank)), "tau^h inverse")
    report.record(matrices_equal(inverse_tau, reps.M_tau.T), "tau^h transpose")
    if W.D.self_dual:
        M_hat = mat_sigma(W, sigma_hat(sigma))
        report.record(matrices_equal(M_hat, reps.M_sigma.T), "sigma hat",
                      matrix_to_json(M_hat), matrix_to_json(reps.M_sigma.T))

    lambdas = {"sigma_U": (reps.M_sigma_U, lambda a: U @ a @ U_inv),
               "tau^h": (reps.M_tau, lambda a: W.tau(a, h)),
               "sigma": (reps.M_sigma, sigma.apply)}
    for a, M_a in zip(reps.samples, reps.M_a):
        a_json = np.asarray(a, dtype=np.int64).tolist()
        defined = linear_map_matrix(W, lambda b: b @ a)
        report.record(matrices_equal(M_a, defined), a_json, matrix_to_json(M_a), matrix_to_json(defined))
        for name, (M_l, fn) in lambdas.items():
            lhs = M_a @ M_l
            rhs = M_l @ mat_a(W, fn(a))
            report.record(matrices_equal(lhs, rhs), [name, a_json], matrix_to_json(lhs), matrix_to_json(rhs))
        if W.D.self_dual:
            report.record(matrices_equal(M_a.T, mat_a(W, a.T)), ["transpose", a_json])
    if report.failures:
        logger.warning(f"{report.name}: {len(report.failures)} counterexamples")
    return report


@dataclass(frozen=True)
class OrePoly:
    """sum_k z^k f_k in A[z; sigma] with a z = z sigma(a); coefficients stored row-major"""
    ambient: WordAmbient
    sigma: MatAut
    coeffs: Tuple[Entries, ...]

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else -np.inf

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> galois.FieldArray:
        W = self.ambient
        if 0 <= k < len(self.coeffs):
            return W.matrix(self.coeffs[k])
        return W.K.zeros((W.n, W.n))

    @property
    def matrices(self) -> List[galois.FieldArray]:
        return [self.coefficient(k) for k in range(len(self.coeffs))]

    def __add__(self, other: "OrePoly") -> "OrePoly":
        _check(self, other)
        length = max(len(self.coeffs), len(other.coeffs))
        return ore_from_matrices(self.ambient, self.sigma,
                                 [self.coefficient(k) + other.coefficient(k) for k in range(length)])

    def __neg__(self) -> "OrePoly":
        return ore_from_matrices(self.ambient, self.sigma, [-c for c in self.matrices])

    def __sub__(self, other: "OrePoly") -> "OrePoly":
        return self + (-other)

    def __mul__(self, other: "OrePoly") -> "OrePoly":
        return ore_mul(self, other)

    def to_json(self) -> List[List[List[int]]]:
        return [np.asarray(c, dtype=np.int64).tolist() for c in self.matrices]


def _check(f: OrePoly, g: OrePoly) -> None:
    if f.ambient != g.ambient or f.sigma != g.sigma:
        raise SkewDualError("polynomials over different Ore extensions")


def ore_from_matrices(W: WordAmbient, sigma: MatAut, mats: Sequence) -> OrePoly:
    coeffs = [tuple(int(x) for x in np.asarray(m, dtype=np.int64).reshape(-1)) for m in mats]
    while coeffs and not any(coeffs[-1]):
        coeffs.pop()
    return OrePoly(ambient=W, sigma=sigma, coeffs=tuple(coeffs))


def ore_zero(W: WordAmbient, sigma: MatAut) -> OrePoly:
    return OrePoly(ambient=W, sigma=sigma, coeffs=())


def ore_constant(W: WordAmbient, sigma: MatAut, a) -> OrePoly:
    return ore_from_matrices(W, sigma, [W.K.GF(a)])


def ore_one(W: WordAmbient, sigma: MatAut) -> OrePoly:
    return ore_constant(W, sigma, W.K.identity(W.n))


def ore_z(W: WordAmbient, sigma: MatAut) -> OrePoly:
    return ore_from_matrices(W, sigma, [W.K.zeros((W.n, W.n)), W.K.identity(W.n)])


def ore_random(W: WordAmbient, sigma: MatAut, rng: np.random.Generator, degree: int) -> OrePoly:
    return ore_from_matrices(W, sigma, list(W.K.random(rng, (degree + 1, W.n, W.n))))


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    """(z^i a)(z^j b) = z^(i+j) sigma^j(a) b"""
    _check(f, g)
    W, sigma = f.ambient, f.sigma
    if f.is_zero or g.is_zero:
        return ore_zero(W, sigma)
    out = W.K.zeros((len(f.coeffs) + len(g.coeffs) - 1, W.n, W.n))
    powers = [sigma.power(j) for j in range(len(g.coeffs))]
    for i, a in enumerate(f.matrices):
        for j, b in enumerate(g.matrices):
            out[i + j] = out[i + j] + powers[j].apply(a) @ b
    return ore_from_matrices(W, sigma, list(out))


def is_idempotent(e: OrePoly) -> bool:
    return ore_mul(e, e) == e


def theta_conv(f: OrePoly) -> OrePoly:
    """Theta(sum z^k a_k) = sum z^k (sigma^-k(a_k))^T, in A[z; sigma hat]"""
    sigma = f.sigma
    mats = [sigma.apply(a, -k).T for k, a in enumerate(f.matrices)]
    return ore_from_matrices(f.ambient, sigma_hat(sigma), mats)


def M_R_poly(W: WordAmbient, sigma: MatAut, f: OrePoly) -> PolyMat:
    """M_R(f) = sum_k z^k M_sigma^k M_{f_k}"""
    F = W.F
    if f.is_zero:
        return poly_mat_from_constant(F, F.zeros((W.rank, W.rank)))
    M_sigma = mat_sigma(W, sigma)
    power = F.identity(W.rank)
    stack = F.zeros((len(f.coeffs), W.rank, W.rank))
    for k, a in enumerate(f.matrices):
        stack[k] = power @ mat_a(W, a)
        power = power @ M_sigma
    return PolyMat(F, stack)


def ore_ext(W: WordAmbient, sigma: MatAut, sample_degree: int = 3) -> HammingExt:
    """A[z; sigma] as a Hamming extension of F[z]"""
    F = W.F

    def coords(f: OrePoly) -> PolyMat:
        if f.is_zero:
            return PolyMat(F, F.zeros((1, 1, W.rank)))
        layers = [np.asarray(coord(W, a)) for a in f.matrices]
        return PolyMat(F, F.GF(np.stack(layers)[:, None, :]))

    def from_coords(w: PolyMat) -> OrePoly:
        return ore_from_matrices(W, sigma, [coord_inv(W, w.coefficient(k)[0]) for k in range(w.degree + 1)])

    return HammingExt(
        name=f"M_{W.n}({W.K!r})[z; sigma]",
        base=BaseRing.POLYRING,
        field=F,
        rank=W.rank,
        multiply=ore_mul,
        one=lambda: ore_one(W, sigma),
        coords=coords,
        from_coords=from_coords,
        basis=lambda: [ore_constant(W, sigma, b) for b in ambient_basis(W)],
        sample=lambda rng: ore_random(W, sigma, rng, int(rng.integers(0, sample_degree + 1))),
        describe=lambda f: f.to_json(),
    )


def check_conv_transposition(W: WordAmbient, sigma: MatAut, samples: int = 200,
                             seed: Union[int, np.random.Generator] = 0) -> CheckReport:
    """M_R^(Theta(f)) = M_R(f)^T and Theta(fg) = Theta(g) Theta(f) for random f of z-degree <= 3"""
    _require_self_dual_normal(W)
    E, E_hat = ore_ext(W, sigma), ore_ext(W, sigma_hat(sigma))
    return check_transposition(E, E_hat, theta_conv, samples=samples, seed=seed)


def _require_self_dual_normal(W: WordAmbient) -> None:
    if not (W.D.normal and W.D.self_dual):
        raise BasisNotSelfDualNormal(f"basis {W.D.elements} of {W.K!r} is not self-dual normal")


@dataclass(frozen=True)
class LiccDual:
    f: OrePoly
    h: OrePoly
    pair: DualPair
    closed_form: bool
    transposition: bool
    direct_summand: bool
    biduality: bool

    @property
    def code(self) -> LinearCode:
        return self.pair.code

    @property
    def dual(self) -> LinearCode:
        return self.pair.dual

    @property
    def checks(self) -> Dict[str, bool]:
        return {
            "closed_form": self.closed_form,
            "transposition": self.transposition,
            "kernel_match": self.pair.agrees,
            "direct_summand": self.direct_summand,
            "biduality": self.biduality,
        }


def licc_dual(W: WordAmbient, sigma: MatAut, f: OrePoly, h: OrePoly) -> LiccDual:
    """
    C = v(Rf) and C^perp = v(R^ Theta(h)) for a certificate hR = r.ann(Rf).

    The dual generator is the rows of M_R(h)^T; the kernel of M_R(f)^T is the oracle.
    """
    _require_self_dual_normal(W)
    if not ore_mul(f, h).is_zero:
        raise BadCertificate(f"f h != 0 for f = {f.to_json()}, h = {h.to_json()}")
    E, E_hat = ore_ext(W, sigma), ore_ext(W, sigma_hat(sigma))
    pair = dual_code(E, E_hat, f, h, theta_conv)

    M_f = M_R_poly(W, sigma, f)
    M_h = M_R_poly(W, sigma, h)
    closed_form = M_f == mrep(E, f) and M_h == mrep(E, h)
    transposition = M_R_poly(W, sigma_hat(sigma), theta_conv(h)) == M_h.transpose()
    result = LiccDual(
        f=f,
        h=h,
        pair=pair,
        closed_form=closed_form,
        transposition=transposition,
        direct_summand=is_direct_summand(M_f),
        biduality=left_annihilator(E, h) == pair.code,
    )
    logger.debug(f"{W!r}: dual checks {result.checks}")
    return result


def licc_dual_idem(W: WordAmbient, sigma: MatAut, e) -> LiccDual:
    """The certificate (e, 1 - e) for an idempotent matrix e"""
    e = W.K.GF(np.asarray(e, dtype=np.int64))
    if e.shape != (W.n, W.n) or not np.array_equal(e @ e, e):
        raise BadCertificate(f"{np.asarray(e).tolist()} is not an idempotent {W.n} x {W.n} matrix")
    f = ore_constant(W, sigma, e)
    return licc_dual(W, sigma, f, ore_one(W, sigma) - f)


def elementary_idempotent(W: WordAmbient) -> galois.FieldArray:
    """E_00"""
    e = W.K.zeros((W.n, W.n))
    e[0, 0] = 1
    return e


def random_conjugated_idempotent(W: WordAmbient, rng: np.random.Generator) -> galois.FieldArray:
    """P E_00 P^-1 for a random regular P"""
    P = random_regular(W, rng)
    return P @ elementary_idempotent(W) @ np.linalg.inv(P)
