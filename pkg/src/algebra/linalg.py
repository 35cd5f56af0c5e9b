"""
Exact Linear Algebra
Row reduction and null spaces over GF(q) through galois, and Hermite / Smith
normal forms, left kernels and module comparisons over GF(q)[z]
"""
from dataclasses import dataclass
from itertools import product
from typing import List, Sequence, Tuple
import logging

import galois
import numpy as np

from .gf import Field
from ..errors import CodeTooLarge, SkewDualError

logger = logging.getLogger(__name__)

# Largest vector space enumerated by the exhaustive oracles
MAX_ENUMERATION = 2 ** 16


# ---------------------------------------------------------------------------
# Matrices over GF(q)
# ---------------------------------------------------------------------------

def rref(M: galois.FieldArray) -> Tuple[galois.FieldArray, int, List[int]]:
    """
    Reduced row echelon form.

    Returns:
        (R, rank, pivots) with R of the same shape as M
    """
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return M.copy(), 0, []
    R = M.row_reduce()
    nonzero = np.any(R != 0, axis=1)
    rank = int(np.count_nonzero(nonzero))
    pivots = [int(np.flatnonzero(R[i])[0]) for i in range(rank)]
    return R, rank, pivots


def rank(M: galois.FieldArray) -> int:
    return rref(M)[1]


def row_basis(M: galois.FieldArray) -> galois.FieldArray:
    """Canonical basis of the row space: the nonzero rows of the RREF"""
    R, r, _ = rref(M)
    return R[:r]


def nullspace(M: galois.FieldArray) -> galois.FieldArray:
    """Rows w with w M^T = 0, as a canonical basis; cols(M) - rank(M) rows"""
    GF = type(M)
    rows, cols = M.shape
    if rows == 0 or rank(M) == 0:
        return GF.Identity(cols)
    if rank(M) == cols:
        return GF.Zeros((0, cols))
    return row_basis(M.null_space())


def row_space_equal(A: galois.FieldArray, B: galois.FieldArray) -> bool:
    if A.shape[1] != B.shape[1]:
        return False
    return bool(np.array_equal(row_basis(A), row_basis(B)))


def in_row_space(M: galois.FieldArray, w: galois.FieldArray) -> bool:
    GF = type(M)
    stacked = GF(np.vstack([np.asarray(M), np.asarray(w).reshape(1, -1)]))
    return rank(stacked) == rank(M)


def all_vectors(F: Field, length: int) -> galois.FieldArray:
    """Every vector of GF(q)^length, lexicographic"""
    if F.q ** length > MAX_ENUMERATION:
        logger.warning(f"Refusing to enumerate {F.q}^{length} vectors")
        raise CodeTooLarge(f"{F.q}^{length} vectors exceed the enumeration limit {MAX_ENUMERATION}")
    grid = np.array(list(product(range(F.q), repeat=length)), dtype=np.int64).reshape(-1, length)
    return F.GF(grid)


def brute_force_dual(F: Field, M: galois.FieldArray) -> galois.FieldArray:
    """The dual of the row space of M by enumerating all of GF(q)^n"""
    n = M.shape[1]
    words = all_vectors(F, n)
    if M.shape[0] == 0:
        orthogonal = words
    else:
        orthogonal = words[np.all(words @ M.T == 0, axis=1)]
    logger.debug(f"Brute-force dual: {len(orthogonal)} orthogonal words out of {len(words)}")
    return row_basis(orthogonal)


# ---------------------------------------------------------------------------
# Polynomial matrices over GF(q)[z]
# ---------------------------------------------------------------------------

def _poly(F: Field, asc) -> galois.Poly:
    values = F.GF(np.asarray(asc, dtype=np.int64).reshape(-1)) if len(asc) else F.GF([0])
    return galois.Poly(values, order="asc")


def _is_zero(p: galois.Poly) -> bool:
    return p.degree == 0 and p.coeffs[0] == 0


def poly_to_ints(p: galois.Poly) -> List[int]:
    if _is_zero(p):
        return []
    return [int(c) for c in p.coeffs[::-1]]


def _const(F: Field, c) -> galois.Poly:
    return galois.Poly([int(c)], field=F.GF)


@dataclass(frozen=True, eq=False)
class PolyMat:
    """
    Matrix over GF(q)[z] stored as a coefficient stack: stack[k] is the
    coefficient matrix of z^k, shape (degree + 1, rows, cols), at least one layer.
    """
    field: Field
    stack: galois.FieldArray

    def __post_init__(self):
        stack = self.stack
        if stack.ndim != 3:
            raise SkewDualError(f"coefficient stack must be 3-dimensional, got shape {stack.shape}")
        top = stack.shape[0]
        while top > 1 and not np.any(stack[top - 1] != 0):
            top -= 1
        if stack.shape[0] == 0:
            stack = self.field.zeros((1,) + stack.shape[1:])
        else:
            stack = stack[:top]
        object.__setattr__(self, "stack", stack)

    @property
    def rows(self) -> int:
        return self.stack.shape[1]

    @property
    def cols(self) -> int:
        return self.stack.shape[2]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def degree(self) -> int:
        return self.stack.shape[0] - 1

    def is_zero(self) -> bool:
        return not np.any(self.stack != 0)

    def coefficient(self, k: int) -> galois.FieldArray:
        if k < self.stack.shape[0]:
            return self.stack[k]
        return self.field.zeros(self.shape)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMat) or self.shape != other.shape:
            return False
        return self.stack.shape == other.stack.shape and bool(np.array_equal(self.stack, other.stack))

    def __add__(self, other: "PolyMat") -> "PolyMat":
        depth = max(self.stack.shape[0], other.stack.shape[0])
        out = self.field.zeros((depth,) + self.shape)
        out[:self.stack.shape[0]] = self.stack
        out[:other.stack.shape[0]] = out[:other.stack.shape[0]] + other.stack
        return PolyMat(self.field, out)

    def __neg__(self) -> "PolyMat":
        return PolyMat(self.field, -self.stack)

    def __sub__(self, other: "PolyMat") -> "PolyMat":
        return self + (-other)

    def __matmul__(self, other: "PolyMat") -> "PolyMat":
        return poly_mat_mul(self, other)

    def transpose(self) -> "PolyMat":
        return PolyMat(self.field, self.field.GF(np.transpose(np.asarray(self.stack), (0, 2, 1)).copy()))

    @property
    def T(self) -> "PolyMat":
        return self.transpose()

    def shift(self, k: int = 1) -> "PolyMat":
        """z^k times the matrix"""
        pad = self.field.zeros((k,) + self.shape)
        return PolyMat(self.field, self.field.GF(np.concatenate([np.asarray(pad), np.asarray(self.stack)])))

    def row_slice(self, start: int, stop: int) -> "PolyMat":
        return PolyMat(self.field, self.stack[:, start:stop, :])

    def entries(self) -> List[List[galois.Poly]]:
        return [[_poly(self.field, self.stack[:, i, j]) for j in range(self.cols)] for i in range(self.rows)]

    def to_json(self) -> List[List[List[int]]]:
        """Rows of entries, each entry ascending z-coefficients"""
        return [[poly_to_ints(p) for p in row] for row in self.entries()]

    def __repr__(self) -> str:
        return f"PolyMat({self.rows}x{self.cols}, deg={self.degree}, {self.to_json()})"


def poly_mat_from_constant(F: Field, M: galois.FieldArray) -> PolyMat:
    return PolyMat(F, F.GF(np.asarray(M)).reshape((1,) + M.shape))


def poly_mat_from_entries(F: Field, grid: Sequence[Sequence[galois.Poly]], rows: int, cols: int) -> PolyMat:
    depth = 1
    for row in grid:
        for p in row:
            depth = max(depth, p.degree + 1)
    stack = F.zeros((depth, rows, cols))
    for i, row in enumerate(grid):
        for j, p in enumerate(row):
            if not _is_zero(p):
                stack[:p.degree + 1, i, j] = p.coeffs[::-1]
    return PolyMat(F, stack)


def poly_mat_from_json(F: Field, rows_json: Sequence[Sequence[Sequence[int]]], cols: int = None) -> PolyMat:
    rows = len(rows_json)
    cols = cols if cols is not None else (len(rows_json[0]) if rows else 0)
    grid = [[_poly(F, entry) for entry in row] for row in rows_json]
    return poly_mat_from_entries(F, grid, rows, cols)


def poly_identity(F: Field, size: int) -> PolyMat:
    return poly_mat_from_constant(F, F.identity(size))


def poly_zeros(F: Field, rows: int, cols: int) -> PolyMat:
    return PolyMat(F, F.zeros((1, rows, cols)))


def poly_mat_mul(A: PolyMat, B: PolyMat) -> PolyMat:
    if A.cols != B.rows:
        raise SkewDualError(f"cannot multiply {A.shape} by {B.shape}")
    F = A.field
    out = F.zeros((A.degree + B.degree + 1, A.rows, B.cols))
    for i in range(A.degree + 1):
        for j in range(B.degree + 1):
            out[i + j] = out[i + j] + A.stack[i] @ B.stack[j]
    return PolyMat(F, out)


def poly_transpose(M: PolyMat) -> PolyMat:
    return M.transpose()


def poly_vstack(F: Field, mats: Sequence[PolyMat]) -> PolyMat:
    depth = max(M.stack.shape[0] for M in mats)
    cols = mats[0].cols
    rows = sum(M.rows for M in mats)
    out = F.zeros((depth, rows, cols))
    r = 0
    for M in mats:
        out[:M.stack.shape[0], r:r + M.rows, :] = M.stack
        r += M.rows
    return PolyMat(F, out)


def _row_combine(grid, target: int, source: int, factor: galois.Poly) -> None:
    """row[target] -= factor * row[source]"""
    grid[target] = [t - factor * s for t, s in zip(grid[target], grid[source])]


def _row_scale(grid, index: int, factor: galois.Poly) -> None:
    grid[index] = [factor * e for e in grid[index]]


def _hnf_grid(F: Field, H, U, rows: int, cols: int) -> List[int]:
    """In-place row Hermite form of H, mirroring every row operation on U; returns pivot columns"""
    r = 0
    pivots = []
    for col in range(cols):
        if r == rows:
            break
        has_pivot = False
        while True:
            candidates = [i for i in range(r, rows) if not _is_zero(H[i][col])]
            if not candidates:
                break
            has_pivot = True
            best = min(candidates, key=lambda i: H[i][col].degree)
            H[r], H[best] = H[best], H[r]
            U[r], U[best] = U[best], U[r]
            cleared = True
            for i in range(r + 1, rows):
                if _is_zero(H[i][col]):
                    continue
                factor = H[i][col] // H[r][col]
                _row_combine(H, i, r, factor)
                _row_combine(U, i, r, factor)
                if not _is_zero(H[i][col]):
                    cleared = False
            if cleared:
                break
        if not has_pivot:
            continue
        lead = H[r][col].coeffs[0]
        inverse = _const(F, lead ** -1)
        _row_scale(H, r, inverse)
        _row_scale(U, r, inverse)
        for i in range(r):
            if _is_zero(H[i][col]):
                continue
            factor = H[i][col] // H[r][col]
            _row_combine(H, i, r, factor)
            _row_combine(U, i, r, factor)
        pivots.append(col)
        r += 1
    return pivots


def poly_hnf(M: PolyMat) -> Tuple[PolyMat, PolyMat]:
    """
    Row Hermite normal form over GF(q)[z].

    Pivots are monic, entries above a pivot have smaller degree, rows are
    ordered by pivot column and zero rows come last.

    Returns:
        (H, U) with U unimodular and U M = H
    """
    F = M.field
    H = M.entries()
    U = poly_identity(F, M.rows).entries()
    _hnf_grid(F, H, U, M.rows, M.cols)
    return poly_mat_from_entries(F, H, M.rows, M.cols), poly_mat_from_entries(F, U, M.rows, M.rows)


def hnf_rank(H: PolyMat) -> int:
    nonzero = np.any(np.asarray(H.stack) != 0, axis=(0, 2))
    return int(np.count_nonzero(nonzero))


def canonical_rows(M: PolyMat) -> PolyMat:
    """The nonzero rows of the Hermite form: a canonical generator matrix of the row module"""
    H, _ = poly_hnf(M)
    return H.row_slice(0, hnf_rank(H))


def poly_row_module_equal(A: PolyMat, B: PolyMat) -> bool:
    if A.cols != B.cols:
        return False
    return canonical_rows(A) == canonical_rows(B)


def poly_in_row_module(M: PolyMat, w: PolyMat) -> bool:
    return poly_row_module_equal(M, poly_vstack(M.field, [M, w]))


def is_unimodular(U: PolyMat) -> bool:
    """Square with Hermite form equal to the identity"""
    if U.rows != U.cols:
        return False
    H, _ = poly_hnf(U)
    return H == poly_identity(U.field, U.rows)


def poly_snf(M: PolyMat) -> List[galois.Poly]:
    """
    Monic invariant factors d_1 | d_2 | ... of M, by elementary row and column
    operations; zero diagonal entries are omitted
    """
    F = M.field
    A = M.entries()
    rows, cols = M.rows, M.cols
    factors = []
    for t in range(min(rows, cols)):
        nonzero = [(i, j) for i in range(t, rows) for j in range(t, cols) if not _is_zero(A[i][j])]
        if not nonzero:
            break
        i0, j0 = min(nonzero, key=lambda ij: A[ij[0]][ij[1]].degree)
        A[t], A[i0] = A[i0], A[t]
        for row in A:
            row[t], row[j0] = row[j0], row[t]

        while True:
            # Bring the lowest-degree entry of row t / column t to the pivot
            line = [(i, t) for i in range(t, rows) if not _is_zero(A[i][t])]
            line += [(t, j) for j in range(t + 1, cols) if not _is_zero(A[t][j])]
            i1, j1 = min(line, key=lambda ij: A[ij[0]][ij[1]].degree)
            if i1 != t:
                A[t], A[i1] = A[i1], A[t]
            elif j1 != t:
                for row in A:
                    row[t], row[j1] = row[j1], row[t]

            pivot = A[t][t]
            for i in range(t + 1, rows):
                if not _is_zero(A[i][t]):
                    _row_combine(A, i, t, A[i][t] // pivot)
            for j in range(t + 1, cols):
                if not _is_zero(A[t][j]):
                    factor = A[t][j] // pivot
                    for row in A:
                        row[j] = row[j] - factor * row[t]
            if any(not _is_zero(A[i][t]) for i in range(t + 1, rows)):
                continue
            if any(not _is_zero(A[t][j]) for j in range(t + 1, cols)):
                continue
            # The pivot must divide the remaining block
            offender = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols)
                 if not _is_zero(A[i][j] % pivot)),
                None,
            )
            if offender is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[offender])]

        pivot = A[t][t]
        factors.append(pivot * _const(F, pivot.coeffs[0] ** -1))
    return factors


def is_direct_summand(M: PolyMat) -> bool:
    """The row module is a direct summand of GF(q)[z]^cols iff every invariant factor is 1"""
    return all(p.degree == 0 for p in poly_snf(M))


def poly_left_kernel(M: PolyMat) -> PolyMat:
    """Rows w with w M = 0 generating the whole (saturated) left kernel, in Hermite form"""
    F = M.field
    H, U = poly_hnf(M)
    r = hnf_rank(H)
    if r == M.rows:
        return poly_zeros(F, 0, M.rows)
    return canonical_rows(U.row_slice(r, M.rows))


def bounded_kernel_search(M: PolyMat, max_degree: int = 3) -> List[PolyMat]:
    """Every nonzero row vector w of z-degree <= max_degree with w M = 0, by exhaustive enumeration"""
    F = M.field
    width = (max_degree + 1) * M.rows
    words = all_vectors(F, width).reshape(-1, max_degree + 1, M.rows)
    residual = F.zeros((len(words), max_degree + M.degree + 1, M.cols))
    for i in range(max_degree + 1):
        for j in range(M.degree + 1):
            residual[:, i + j, :] = residual[:, i + j, :] + words[:, i, :] @ M.stack[j]
    hits = np.flatnonzero(np.all(residual.reshape(len(words), -1) == 0, axis=1))
    found = []
    for h in hits:
        w = words[h]
        if np.any(w != 0):
            found.append(PolyMat(F, w.reshape(max_degree + 1, 1, M.rows)))
    logger.debug(f"Bounded kernel search found {len(found)} nonzero syzygies")
    return found
