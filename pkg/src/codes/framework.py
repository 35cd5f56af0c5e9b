"""
Hamming Ring Extensions
Generic machinery shared by the concrete code families: coordinate maps,
matrix representations M_R, transposition checks, duals from annihilator
certificates and biduality
"""
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Iterable, List, Optional, Union
import logging

import galois
import numpy as np
from pydantic import BaseModel, Field as ModelField, computed_field

from ..algebra.gf import Field
from ..algebra.linalg import (
    PolyMat,
    all_vectors,
    canonical_rows,
    is_direct_summand,
    nullspace,
    hnf_rank,
    poly_hnf,
    poly_left_kernel,
    poly_mat_from_constant,
    poly_vstack,
    rank,
    row_basis,
)
from ..errors import AnnihilatorCertificateInvalid, NotDirectSummand, SkewDualError

logger = logging.getLogger(__name__)

Matrix = Union[galois.FieldArray, PolyMat]


class BaseRing(str, Enum):
    FIELD = "field"        # C = GF(q)
    POLYRING = "polyring"  # C = GF(q)[z]


class Failure(BaseModel):
    input: Any = None
    lhs: Any = None
    rhs: Any = None


class CheckReport(BaseModel):
    """Outcome of a property check: how many instances ran and every counterexample"""
    name: str = ""
    checked: int = 0
    failures: List[Failure] = ModelField(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, input: Any = None, lhs: Any = None, rhs: Any = None) -> bool:
        self.checked += 1
        if not ok:
            self.failures.append(Failure(input=input, lhs=lhs, rhs=rhs))
        return ok

    def absorb(self, other: "CheckReport") -> "CheckReport":
        self.checked += other.checked
        self.failures.extend(other.failures)
        return self


@dataclass(frozen=True)
class HammingExt:
    """
    A ring R with a C-module isomorphism v: R -> C^m, given through narrow hooks.

    coords returns a length-m FieldArray (field base) or a 1 x m PolyMat (polyring base);
    basis lists v^-1(e_0), ..., v^-1(e_{m-1}).
    """
    name: str
    base: BaseRing
    field: Field
    rank: int
    multiply: Callable[[Any, Any], Any]
    one: Callable[[], Any]
    coords: Callable[[Any], Any]
    from_coords: Callable[[Any], Any]
    basis: Callable[[], List[Any]]
    sample: Callable[[np.random.Generator], Any]
    describe: Callable[[Any], Any] = lambda f: repr(f)

    def equal(self, a, b) -> bool:
        ca, cb = self.coords(a), self.coords(b)
        if self.base == BaseRing.FIELD:
            return bool(np.array_equal(ca, cb))
        return ca == cb

    def is_zero(self, a) -> bool:
        c = self.coords(a)
        if self.base == BaseRing.FIELD:
            return not np.any(c != 0)
        return c.is_zero()


def matrix_to_json(M: Matrix):
    if isinstance(M, PolyMat):
        return M.to_json()
    return np.asarray(M, dtype=np.int64).tolist()


def matrices_equal(A: Matrix, B: Matrix) -> bool:
    if isinstance(A, PolyMat):
        return A == B
    return A.shape == B.shape and bool(np.array_equal(A, B))


def transpose(M: Matrix) -> Matrix:
    return M.transpose() if isinstance(M, PolyMat) else M.T


def mrep(E: HammingExt, f) -> Matrix:
    """M_R(f): row i is v(b_i f)"""
    rows = [E.coords(E.multiply(b, f)) for b in E.basis()]
    if E.base == BaseRing.FIELD:
        return E.field.GF(np.vstack([np.asarray(r) for r in rows]))
    return poly_vstack(E.field, rows)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A code over GF(q) or GF(q)[z] given by a generator matrix; equality is canonical-form equality"""
    base: BaseRing
    field: Field
    length: int
    generator: Matrix

    @cached_property
    def canonical(self) -> Matrix:
        if self.base == BaseRing.FIELD:
            return row_basis(self.generator)
        return canonical_rows(self.generator)

    @property
    def dim(self) -> int:
        if self.base == BaseRing.FIELD:
            return rank(self.generator)
        return hnf_rank(poly_hnf(self.generator)[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode) or self.base != other.base or self.length != other.length:
            return False
        return matrices_equal(self.canonical, other.canonical)

    def to_json(self):
        return matrix_to_json(self.canonical)

    def __repr__(self) -> str:
        return f"LinearCode({self.base.value}, n={self.length}, dim={self.dim})"


def code_from_matrix(E: HammingExt, M: Matrix) -> LinearCode:
    return LinearCode(base=E.base, field=E.field, length=E.rank, generator=M)


def row_code(base: BaseRing, field: Field, M: Matrix) -> LinearCode:
    length = M.cols if isinstance(M, PolyMat) else M.shape[1]
    return LinearCode(base=base, field=field, length=length, generator=M)


def dual_oracle(C: LinearCode) -> LinearCode:
    """The dual by kernel computation: {w : w G^T = 0}"""
    if C.base == BaseRing.FIELD:
        return row_code(C.base, C.field, nullspace(C.generator))
    return row_code(C.base, C.field, poly_left_kernel(C.generator.transpose()))


def check_homomorphism(E: HammingExt, samples: int, seed: Union[int, np.random.Generator] = 0) -> CheckReport:
    """M_R(1) = I, M_R(fg) = M_R(f) M_R(g), and M_R(f) = 0 only for f = 0"""
    rng = np.random.default_rng(seed)
    report = CheckReport(name=f"{E.name}: M_R is an injective ring homomorphism")
    identity = mrep(E, E.one())
    expected = E.field.identity(E.rank)
    if E.base == BaseRing.POLYRING:
        expected = poly_mat_from_constant(E.field, expected)
    report.record(matrices_equal(identity, expected), "one", matrix_to_json(identity), matrix_to_json(expected))
    for _ in range(samples):
        f, g = E.sample(rng), E.sample(rng)
        lhs = mrep(E, E.multiply(f, g))
        rhs = mrep(E, f) @ mrep(E, g)
        report.record(matrices_equal(lhs, rhs), [E.describe(f), E.describe(g)],
                      matrix_to_json(lhs), matrix_to_json(rhs))
        Mf = mrep(E, f)
        zero_image = Mf.is_zero() if isinstance(Mf, PolyMat) else not np.any(Mf != 0)
        report.record(zero_image == E.is_zero(f), E.describe(f), zero_image, E.is_zero(f))
    return report


def check_transposition(
    E: HammingExt,
    E_hat: HammingExt,
    theta: Callable[[Any], Any],
    samples: int = 100,
    seed: Union[int, np.random.Generator] = 0,
    elements: Optional[Iterable[Any]] = None,
) -> CheckReport:
    """
    M_R^(theta(f)) = M_R(f)^T and theta(fg) = theta(g) theta(f).

    Runs over `elements` when given (exhaustive mode), otherwise over `samples`
    seeded-random elements.
    """
    if E.base != E_hat.base or E.rank != E_hat.rank:
        raise SkewDualError(f"{E.name} and {E_hat.name} do not share the base ring and rank")
    rng = np.random.default_rng(seed)
    report = CheckReport(name=f"{E.name}: transposition")
    pool = list(elements) if elements is not None else [E.sample(rng) for _ in range(samples)]
    for f in pool:
        lhs = mrep(E_hat, theta(f))
        rhs = transpose(mrep(E, f))
        report.record(matrices_equal(lhs, rhs), E.describe(f), matrix_to_json(lhs), matrix_to_json(rhs))
        g = E.sample(rng)
        left = theta(E.multiply(f, g))
        right = E_hat.multiply(theta(g), theta(f))
        report.record(E_hat.equal(left, right), [E.describe(f), E.describe(g)],
                      E_hat.describe(left), E_hat.describe(right))
    if report.failures:
        logger.warning(f"{report.name}: {len(report.failures)} counterexamples")
    return report


@dataclass(frozen=True)
class DualPair:
    code: LinearCode
    dual: LinearCode
    oracle: LinearCode

    @property
    def agrees(self) -> bool:
        return self.dual == self.oracle


def dual_code(E: HammingExt, E_hat: HammingExt, f, h, theta: Callable[[Any], Any]) -> DualPair:
    """
    C = v(Rf) and its dual v^(R^ theta(h)), for a certificate hR = r.ann(Rf).

    The dual generator is M_R^(theta(h)), the rows of M_R(h)^T; the oracle
    is the kernel of M_R(f)^T.
    """
    if not E.is_zero(E.multiply(f, h)):
        raise AnnihilatorCertificateInvalid(f"{E.describe(f)} * {E.describe(h)} != 0")
    code = code_from_matrix(E, mrep(E, f))
    dual = code_from_matrix(E_hat, mrep(E_hat, theta(h)))
    oracle = dual_oracle(code)
    pair = DualPair(code=code, dual=dual, oracle=oracle)
    logger.debug(f"{E.name}: dim C = {code.dim}, dim C^perp = {dual.dim}, oracle agrees = {pair.agrees}")
    return pair


def biduality_check(C: LinearCode) -> bool:
    """C^perp^perp = C; over GF(q)[z] only for direct summands"""
    if C.base == BaseRing.POLYRING and not is_direct_summand(C.generator):
        raise NotDirectSummand("biduality over GF(q)[z] needs a direct summand")
    return dual_oracle(dual_oracle(C)) == C


def left_annihilator(E: HammingExt, h) -> LinearCode:
    """l.ann(hR) = {g : g h = 0}, the left kernel of M_R(h), as a code"""
    M = mrep(E, h)
    if E.base == BaseRing.FIELD:
        return code_from_matrix(E, nullspace(M.T))
    return code_from_matrix(E, poly_left_kernel(M))


def all_elements(E: HammingExt) -> List[Any]:
    """Every element of R (field base, desk scale)"""
    if E.base != BaseRing.FIELD:
        raise SkewDualError("only rings over a finite field can be enumerated")
    return [E.from_coords(w) for w in all_vectors(E.field, E.rank)]


def right_annihilator(E: HammingExt, f) -> List[Any]:
    """{h' : f h' = 0} by enumeration"""
    return [g for g in all_elements(E) if E.is_zero(E.multiply(f, g))]


def right_ideal(E: HammingExt, h) -> set:
    """hR as a set of coordinate tuples, by enumeration"""
    return {tuple(int(c) for c in E.coords(E.multiply(h, r))) for r in all_elements(E)}
