"""Exact linear algebra over the Gaussian rationals.

Three matrix flavours:

* Matrix    -- dense, entries GaussianRational; used for intertwiners.
* Monomial  -- one nonzero per row/column; every representation matrix in
               this package (gamma products, permutation images) is monomial,
               which keeps intertwiner systems sparse.
* ScaledMatrix -- a Matrix together with a power of sqrt(2); the only
               irrationals in the theory are sqrt(2^k) normalization factors.

Nullspaces are computed by exact Gaussian elimination on sparse rows; no
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import GaussianRational, ZERO, ONE, gr


class Matrix:
    """Dense matrix with GaussianRational entries (immutable by convention)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    @staticmethod
    def zero(nrows, ncols):
        return Matrix([[ZERO] * ncols for _ in range(nrows)])

    @staticmethod
    def identity(n):
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other):
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, s):
        return Matrix([[a * s for a in r] for r in self.rows])

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("matrix shape mismatch")
        ot = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out.append(
                [
                    sum((a * b for a, b in zip(r, col) if a and b), ZERO)
                    for col in ot
                ]
            )
        return Matrix(out)

    def conj_transpose(self):
        return Matrix(
            [
                [self.rows[i][j].conjugate() for i in range(self.nrows)]
                for j in range(self.ncols)
            ]
        )

    def trace(self):
        return sum((self.rows[i][i] for i in range(min(self.nrows, self.ncols))), ZERO)

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def kron(self, other):
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([a * b for a in ra for b in rb])
        return Matrix(out)

    def flatten(self):
        return [a for r in self.rows for a in r]

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def hs_inner(t1: Matrix, t2: Matrix) -> GaussianRational:
    """Normalized Hilbert-Schmidt product (1/ncols) tr(t2* t1)."""
    if t1.ncols != t2.ncols or t1.nrows != t2.nrows:
        raise ValueError("shape mismatch in Hilbert-Schmidt product")
    total = ZERO
    for r1, r2 in zip(t1.rows, t2.rows):
        for a, b in zip(r1, r2):
            if a and b:
                total = total + a * b.conjugate()
    return total / t1.ncols


@dataclass(frozen=True)
class Monomial:
    """Generalized permutation matrix: column j carries phase[j] at row perm[j]."""

    size: int
    perm: tuple
    phase: tuple

    @staticmethod
    def identity(size):
        return Monomial(size, tuple(range(size)), (ONE,) * size)

    def __matmul__(self, other: "Monomial") -> "Monomial":
        if self.size != other.size:
            raise ValueError("monomial size mismatch")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.size))
        phase = tuple(
            other.phase[j] * self.phase[other.perm[j]] for j in range(self.size)
        )
        return Monomial(self.size, perm, phase)

    def scale(self, s) -> "Monomial":
        return Monomial(self.size, self.perm, tuple(p * s for p in self.phase))

    def conj(self) -> "Monomial":
        """Entrywise conjugate (same support)."""
        return Monomial(self.size, self.perm, tuple(p.conjugate() for p in self.phase))

    def conj_transpose(self) -> "Monomial":
        inv = [0] * self.size
        for j, i in enumerate(self.perm):
            inv[i] = j
        phase = tuple(self.phase[inv[j]].conjugate() for j in range(self.size))
        return Monomial(self.size, tuple(inv), phase)

    def kron(self, other: "Monomial") -> "Monomial":
        sz = self.size * other.size
        perm = [0] * sz
        phase = [ONE] * sz
        for j1 in range(self.size):
            for j2 in range(other.size):
                col = j1 * other.size + j2
                perm[col] = self.perm[j1] * other.size + other.perm[j2]
                phase[col] = self.phase[j1] * other.phase[j2]
        return Monomial(sz, tuple(perm), tuple(phase))

    def trace(self) -> GaussianRational:
        return sum(
            (self.phase[j] for j in range(self.size) if self.perm[j] == j), ZERO
        )

    def dense(self) -> Matrix:
        rows = [[ZERO] * self.size for _ in range(self.size)]
        for j in range(self.size):
            rows[self.perm[j]][j] = self.phase[j]
        return Matrix(rows)

    def apply_left(self, mat: Matrix) -> Matrix:
        """self @ mat without densifying self."""
        out = [None] * self.size
        for j in range(self.size):
            out[self.perm[j]] = [self.phase[j] * a for a in mat.rows[j]]
        return Matrix(out)

    def apply_right(self, mat: Matrix) -> Matrix:
        """mat @ self without densifying self."""
        out = []
        for r in mat.rows:
            out.append([r[self.perm[j]] * self.phase[j] for j in range(self.size)])
        return Matrix(out)


@dataclass(frozen=True)
class ScaledMatrix:
    """2^(half/2) * matrix; keeps sqrt(2) factors exact.

    half is an integer exponent of sqrt(2).  The canonical form keeps
    half in {0, 1} by absorbing whole powers of two into the matrix.
    """

    half: int
    matrix: Matrix

    def canonical(self) -> "ScaledMatrix":
        r = self.half & 1
        k = (self.half - r) // 2
        if k == 0:
            return self
        factor = gr(Fraction(2) ** k)
        return ScaledMatrix(r, self.matrix.scale(factor))

    def __eq__(self, other):
        a, b = self.canonical(), other.canonical()
        if a.half != b.half:
            # one of them may be zero
            return a.matrix.is_zero() and b.matrix.is_zero()
        return a.matrix == b.matrix

    def __hash__(self):
        return hash((self.canonical().half,))

    def is_zero(self):
        return self.matrix.is_zero()

    def scale_half(self, dhalf: int) -> "ScaledMatrix":
        return ScaledMatrix(self.half + dhalf, self.matrix)


def scaled_hs_inner(t1: ScaledMatrix, t2: ScaledMatrix) -> GaussianRational:
    """Normalized Hilbert-Schmidt product of two scaled matrices.

    Requires the combined sqrt(2) exponent to be even (always the case in
    the isometry checks); raises otherwise.
    """
    h = t1.half + t2.half
    base = hs_inner(t1.matrix, t2.matrix)
    if h & 1 and base:
        raise ValueError("inner product leaves the Gaussian rationals")
    return base * gr(Fraction(2) ** (h // 2)) if base else ZERO


# -- exact sparse nullspace -------------------------------------------------


def sparse_nullspace(rows, ncols):
    """Nullspace basis of a sparse system.

    rows: iterable of dict {col: GaussianRational} (zero-free).
    Returns a list of dense vectors (lists of GaussianRational), one per
    free column, in ascending free-column order.
    """
    pivots = {}  # pivot col -> reduced row dict (pivot coefficient 1)
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row)
            if lead not in pivots:
                coeff = row[lead]
                row = {c: v / coeff for c, v in row.items()}
                pivots[lead] = row
                break
            factor = row[lead]
            for c, v in pivots[lead].items():
                acc = row.get(c, ZERO) - factor * v
                if acc:
                    row[c] = acc
                elif c in row:
                    del row[c]
    # back-substitute to reduced echelon form
    for p in sorted(pivots, reverse=True):
        row = pivots[p]
        for q in [c for c in row if c != p and c in pivots]:
            factor = row[q]
            for c, v in pivots[q].items():
                acc = row.get(c, ZERO) - factor * v
                if acc:
                    row[c] = acc
                elif c in row:
                    del row[c]
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for p, row in pivots.items():
            coeff = row.get(free)
            if coeff:
                vec[p] = -coeff
        basis.append(vec)
    return basis


def gram_schmidt(mats):
    """Orthogonalize matrices w.r.t. the normalized Hilbert-Schmidt product.

    Returns an orthogonal (not normalized) basis; norms are rational and
    generally not perfect squares, so unit normalization would leave Q(i).
    """
    basis = []
    for m in mats:
        v = m
        for b in basis:
            coeff = hs_inner(v, b) / hs_inner(b, b)
            if coeff:
                v = v - b.scale(coeff)
        if not v.is_zero():
            basis.append(v)
    return basis
