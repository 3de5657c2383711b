"""Exact dense linear algebra over the rationals.

Everything here works with `fractions.Fraction` entries and is fully
deterministic: the same input always produces the same reduced row echelon
form, the same pivot choices, the same basis. That determinism is load
bearing, because canonical RREF bases are compared verbatim in golden
outputs.

Matrices are immutable; all operations return new objects. Dimensions in
this package stay small (<= 60), so O(n^3) dense algorithms are fine and
much easier to audit than anything clever.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SingularGram

Scalar = Fraction


def qof(x) -> Fraction:
    """Coerce an int / Fraction / "p/q" string to Fraction.

    Floats are refused on purpose: a float that has survived this far is
    already a rounding bug, and Fraction(0.1) would silently bless it.
    """
    if isinstance(x, float):
        raise TypeError(f"refusing to coerce float {x!r} to an exact rational")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


def _freeze(rows: Iterable[Iterable]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(qof(x) for x in row) for row in rows)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions."""

    entries: tuple[tuple[Fraction, ...], ...]

    # -- construction -------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        frozen = _freeze(rows)
        if frozen:
            w = len(frozen[0])
            if any(len(r) != w for r in frozen):
                raise ValueError("ragged rows")
        return Matrix(frozen)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n))
            for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return Matrix(tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def diag(values: Sequence) -> "Matrix":
        vals = [qof(v) for v in values]
        n = len(vals)
        return Matrix(tuple(
            tuple(vals[i] if i == j else Fraction(0) for j in range(n))
            for i in range(n)))

    # -- shape / access ------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(
            tuple(a - b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, c) -> "Matrix":
        c = qof(c)
        return Matrix(tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ "
                             f"{other.nrows}x{other.ncols}")
        cols = list(zip(*other.entries)) if other.entries else []
        return Matrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries))

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        """Matrix times column vector."""
        v = [qof(x) for x in vec]
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries)) if self.entries else ())

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.nrows)),
                   Fraction(0))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_skew(self) -> bool:
        return self == -self.transpose()

    # -- elimination ---------------------------------------------------

    def rref(self) -> tuple["Matrix", int]:
        """Reduced row echelon form and rank.

        Deterministic: pivots are always the first nonzero entry scanning
        columns left to right, rows top to bottom. No pivoting heuristics,
        so equal inputs give byte-equal outputs.
        """
        m = [list(r) for r in self.entries]
        nr, nc = self.nrows, self.ncols
        rank = 0
        for col in range(nc):
            pivot = None
            for r in range(rank, nr):
                if m[r][col] != 0:
                    pivot = r
                    break
            if pivot is None:
                continue
            m[rank], m[pivot] = m[pivot], m[rank]
            pv = m[rank][col]
            m[rank] = [x / pv for x in m[rank]]
            for r in range(nr):
                if r != rank and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            rank += 1
            if rank == nr:
                break
        return Matrix(tuple(tuple(r) for r in m)), rank

    def rank(self) -> int:
        return self.rref()[1]

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        """Basis of the right kernel, in deterministic RREF-derived form."""
        red, rank = self.rref()
        nc = self.ncols
        pivots = []
        for r in range(rank):
            for c in range(nc):
                if red.entries[r][c] != 0:
                    pivots.append(c)
                    break
        free = [c for c in range(nc) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * nc
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red.entries[r][fc]
            basis.append(tuple(v))
        return basis

    def det(self) -> Fraction:
        """Determinant by fraction-free Bareiss elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return Fraction(1)
        m = [list(r) for r in self.entries]
        sign = 1
        prev = Fraction(1)
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
                if swap is None:
                    return Fraction(0)
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
                m[i][k] = Fraction(0)
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = Matrix.from_rows([
            list(self.entries[i]) + [Fraction(1 if i == j else 0)
                                     for j in range(n)]
            for i in range(n)])
        red, rank = aug.rref()
        # the identity block keeps the augmented rank at n even when the
        # left block is singular, so test the left block itself
        for i in range(n):
            for j in range(n):
                if red.entries[i][j] != (1 if i == j else 0):
                    raise ValueError("matrix is singular")
        return Matrix(tuple(r[n:] for r in red.entries))

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...]:
        """Solve A x = rhs for square invertible A."""
        return self.inverse().apply(rhs)

    def leading_minors_positive(self) -> tuple[bool, int, Fraction]:
        """Sylvester's criterion for symmetric matrices.

        Returns (ok, k, minor): on failure, k is the size of the first
        non-positive leading principal minor and minor its value.
        """
        for k in range(1, self.nrows + 1):
            sub = Matrix(tuple(r[:k] for r in self.entries[:k]))
            d = sub.det()
            if d <= 0:
                return False, k, d
        return True, 0, Fraction(1)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]"
                         for r in self.entries)


def vec_add(u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
    return tuple(qof(a) + qof(b) for a, b in zip(u, v))


def vec_sub(u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
    return tuple(qof(a) - qof(b) for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> tuple[Fraction, ...]:
    c = qof(c)
    return tuple(c * qof(a) for a in v)


def vec_is_zero(v: Sequence) -> bool:
    return all(qof(a) == 0 for a in v)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n in canonical form: basis rows are the RREF of any
    spanning set, so two equal subspaces compare equal as dataclasses."""

    ambient_dim: int
    basis: Matrix  # RREF, one row per basis vector, no zero rows

    @staticmethod
    def span(ambient_dim: int, vectors: Sequence[Sequence]) -> "Subspace":
        vecs = [tuple(qof(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length != ambient dimension")
        if not vecs:
            return Subspace(ambient_dim, Matrix(()))
        red, rank = Matrix.from_rows(vecs).rref()
        return Subspace(ambient_dim, Matrix(red.entries[:rank]))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix(()))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return [tuple(r) for r in self.basis.entries]

    def contains(self, vec: Sequence) -> bool:
        v = tuple(qof(x) for x in vec)
        if vec_is_zero(v):
            return True
        stacked = Matrix.from_rows(list(self.basis.entries) + [v])
        return stacked.rank() == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.ambient_dim,
                             self.vectors() + other.vectors())

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked coefficient map."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # columns: coefficients on self.basis then other.basis;
        # rows: ambient coordinates of (sum self - sum other)
        a = self.basis.transpose()
        b = other.basis.transpose()
        stacked = Matrix.from_rows([
            list(a.entries[i]) + [-x for x in b.entries[i]]
            for i in range(self.ambient_dim)])
        vecs = []
        for ker in stacked.nullspace():
            coeffs = ker[:self.dim]
            vecs.append(tuple(
                sum(c * bv for c, bv in zip(coeffs, col))
                for col in zip(*self.basis.entries)))
        return Subspace.span(self.ambient_dim, vecs)

    def image_under(self, mat: Matrix) -> "Subspace":
        return Subspace.span(mat.nrows,
                             [mat.apply(v) for v in self.vectors()])


def complement(s: Subspace, gram: Matrix) -> Subspace:
    """Orthogonal complement of `s` with respect to a bilinear form.

    `gram` is the form's matrix in ambient coordinates; a vector v is in
    the complement iff (basis of s) @ gram @ v = 0. The form must be
    nondegenerate on s (dim complement must come out right), otherwise
    SingularGram.
    """
    if s.dim == 0:
        return Subspace.full(s.ambient_dim)
    constraints = s.basis @ gram
    kernel = constraints.nullspace()
    comp = Subspace.span(s.ambient_dim, kernel)
    if comp.dim != s.ambient_dim - s.dim:
        raise SingularGram(
            f"form degenerate on subspace: complement dim {comp.dim}, "
            f"expected {s.ambient_dim - s.dim}")
    # right dimension is not enough: a degenerate restriction leaves a
    # radical, which shows up as a nonzero intersection with s
    rad = s.intersect(comp)
    if rad.dim != 0:
        raise SingularGram(
            f"form degenerate on subspace: radical has dim {rad.dim}")
    return comp
