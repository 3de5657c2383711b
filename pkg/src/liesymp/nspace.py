"""Dimension of the space of "algebraic Nijenhuis tensors".

Fix a symplectic vector space with a compatible J. The vector valued
2-tensors sharing the three pointwise identities of an actual Nijenhuis
tensor, i.e.

    antisymmetry       t(x, y) = -t(y, x)
    anti-linearity     t(Jx, y) = -J t(x, y)
    cyclic coupling    omega(t(x,y), z) + omega(t(y,z), x)
                                        + omega(t(z,x), y) = 0

form a linear subspace of (R^{2n})* ^ (R^{2n})* (x) R^{2n}. Its dimension
is 2n(n^2 - 1)/3; `nullity` computes it as the corank of the explicit
constraint system, which doubles as a membership test for concrete
tensors against a triple's own (omega, J).

Unknowns are the (2n)^3 coefficients t[i][j][k] (k-th coordinate of
t(e_i, e_j)) in the flat order (i*dim + j)*dim + k. Rows are kept as
sparse {column: value} dicts; with the standard (omega, J) nearly every
row has at most two entries, so plain exact Gaussian elimination on the
dicts handles n = 5 (1000 unknowns) in well under a second.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .linalg import Matrix
from .nijenhuis import Tensor3
from .symp import SymplecticTriple, standard_j, standard_omega

Row = dict[int, Fraction]


def _idx(dim: int, i: int, j: int, k: int) -> int:
    return (i * dim + j) * dim + k


def build_constraint_rows(dim: int, omega: Matrix, j: Matrix,
                          ) -> Iterator[Row]:
    """All constraint rows for the given ambient (omega, J)."""
    # antisymmetry (and vanishing on the diagonal)
    for i in range(dim):
        for k in range(dim):
            yield {_idx(dim, i, i, k): Fraction(1)}
    for i in range(dim):
        for jj in range(i + 1, dim):
            for k in range(dim):
                yield {_idx(dim, i, jj, k): Fraction(1),
                       _idx(dim, jj, i, k): Fraction(1)}
    # anti-linearity in the first slot: t(Je_i, e_j) = -J t(e_i, e_j);
    # the second slot follows from antisymmetry and this one.
    for i in range(dim):
        for jj in range(dim):
            for k in range(dim):
                row: Row = {}
                for a in range(dim):
                    c = j.entry(a, i)
                    if c != 0:
                        col = _idx(dim, a, jj, k)
                        row[col] = row.get(col, Fraction(0)) + c
                for b in range(dim):
                    c = j.entry(k, b)
                    if c != 0:
                        col = _idx(dim, i, jj, b)
                        row[col] = row.get(col, Fraction(0)) + c
                row = {c: v for c, v in row.items() if v != 0}
                if row:
                    yield row
    # cyclic coupling against omega
    for i in range(dim):
        for jj in range(i + 1, dim):
            for k in range(jj + 1, dim):
                row = {}
                for (a, b, c) in ((i, jj, k), (jj, k, i), (k, i, jj)):
                    for m in range(dim):
                        w = omega.entry(m, c)
                        if w != 0:
                            col = _idx(dim, a, b, m)
                            row[col] = row.get(col, Fraction(0)) + w
                row = {c: v for c, v in row.items() if v != 0}
                if row:
                    yield row


def _rank(rows: Iterator[Row]) -> int:
    """Rank of a sparse row system by exact elimination; pivots are the
    smallest column index of each reduced row."""
    pivots: dict[int, Row] = {}
    for row in rows:
        row = dict(row)
        while row:
            p = min(row)
            if p in pivots:
                f = row[p]
                for c, v in pivots[p].items():
                    nv = row.get(c, Fraction(0)) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                inv = 1 / row[p]
                pivots[p] = {c: v * inv for c, v in row.items()}
                break
    return len(pivots)


def nullity(dim: int, omega: Matrix, j: Matrix) -> int:
    return dim ** 3 - _rank(build_constraint_rows(dim, omega, j))


def nijenhuis_space_dim(n: int) -> int:
    """Corank of the constraint system for the standard structures on
    R^{2n}."""
    dim = 2 * n
    return nullity(dim, standard_omega(dim), standard_j(dim))


def expected_dimension(n: int) -> int:
    """Closed form 2n(n^2 - 1)/3 (always an integer: three consecutive
    integers contain a multiple of 3)."""
    num = 2 * n * (n * n - 1)
    assert num % 3 == 0
    return num // 3


def contains_tensor(t: SymplecticTriple, tensor: Tensor3) -> bool:
    """Membership of a concrete tensor in the constraint space built from
    the triple's own (omega, J); an independent route to the pointwise
    identity checks."""
    dim = t.dim
    coords: Row = {}
    for i in range(dim):
        for jj in range(dim):
            for k, v in enumerate(tensor.vals[i][jj]):
                if v != 0:
                    coords[_idx(dim, i, jj, k)] = v
    for row in build_constraint_rows(dim, t.omega, t.j):
        acc = Fraction(0)
        for c, v in row.items():
            x = coords.get(c)
            if x is not None:
                acc += v * x
        if acc != 0:
            return False
    return True
