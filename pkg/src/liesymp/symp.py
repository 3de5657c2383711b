"""Symplectic Lie algebras with a compatible invariant almost complex
structure.

A triple bundles:
  * a Lie algebra g,
  * a 2-form omega (matrix of omega(e_i, e_j)) that is skew, nondegenerate
    and a Chevalley-Eilenberg 2-cocycle,
  * an endomorphism J with J^2 = -Id, omega(J., J.) = omega(., .), and
    omega(., J.) positive definite.

The induced inner product is g(u, v) = omega(u, Jv); its matrix in the
basis is  G = omega_mat @ J_mat  (G_uv = sum_k omega_uk J_kv). Validation
is all-or-nothing: `build_triple` either returns a fully checked triple or
raises the first failing axiom, in a fixed order so error reporting is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import (CocycleViolation, DegenerateForm, DimensionMismatch,
                     NotAlmostComplex, NotCompatible, NotPositive,
                     NotSkewSymmetric)
from .lie import LieAlgebra
from .linalg import Matrix, qof


@dataclass(frozen=True)
class SymplecticTriple:
    algebra: LieAlgebra
    omega: Matrix
    j: Matrix
    metric: Matrix = field(repr=False)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def metric_inv(self) -> Matrix:
        return self.metric.inverse()

    def omega_of(self, u: Sequence, v: Sequence) -> Fraction:
        u = [qof(x) for x in u]
        return sum((a * b for a, b in zip(u, self.omega.apply(v))), Fraction(0))

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        u = [qof(x) for x in u]
        return sum((a * b for a, b in zip(u, self.metric.apply(v))), Fraction(0))

    def j_apply(self, v: Sequence) -> tuple[Fraction, ...]:
        return self.j.apply(v)


def _check_cocycle(g: LieAlgebra, omega: Matrix) -> None:
    """d(omega)(x,y,z) = -omega([x,y],z) + omega([x,z],y) - omega([y,z],x).

    Sparse in the same way as the Jacobi check: a triple can only fail if
    one of its three brackets is nonzero.
    """
    def om_bracket(i: int, j: int, k: int) -> Fraction:
        # omega([e_i, e_j], e_k)
        out = Fraction(0)
        for m, c in g.bracket_basis(i, j).items():
            out += c * omega.entry(m, k)
        return out

    seen = set()
    for (a, b) in sorted(g._table):
        for c in range(g.dim):
            tri = tuple(sorted({a, b, c}))
            if len(tri) < 3 or tri in seen:
                continue
            seen.add(tri)
            i, j, k = tri
            val = (-om_bracket(i, j, k)
                   + om_bracket(i, k, j)
                   - om_bracket(j, k, i))
            if val != 0:
                raise CocycleViolation(i, j, k, str(val),
                                       names=g.basis_names)


def build_triple(g: LieAlgebra, omega: Matrix, j: Matrix) -> SymplecticTriple:
    n = g.dim
    if omega.nrows != n or omega.ncols != n:
        raise DimensionMismatch("omega shape != algebra dimension")
    if j.nrows != n or j.ncols != n:
        raise DimensionMismatch("J shape != algebra dimension")
    if not omega.is_skew():
        raise NotSkewSymmetric("omega is not skew symmetric")
    if omega.det() == 0:
        raise DegenerateForm("omega is degenerate")
    _check_cocycle(g, omega)
    if not (j @ j + Matrix.identity(n)).is_zero():
        raise NotAlmostComplex("J^2 != -Id")
    # omega(Ju, Jv) = omega(u, v)  <=>  J^T omega J = omega
    if j.transpose() @ omega @ j != omega:
        raise NotCompatible("omega(J., J.) != omega(., .)")
    metric = omega @ j
    if not metric.is_symmetric():
        # cannot happen once compatibility holds, but belt and braces
        raise NotCompatible("induced form is not symmetric")
    ok, k, minor = metric.leading_minors_positive()
    if not ok:
        raise NotPositive(k, minor)
    return SymplecticTriple(g, omega, j, metric)


def standard_omega(n2: int) -> Matrix:
    """Standard form on basis (X_1..X_n, Y_1..Y_n): omega(X_i, Y_i) = 1."""
    if n2 % 2:
        raise DimensionMismatch("standard omega needs even dimension")
    n = n2 // 2
    rows = [[Fraction(0)] * n2 for _ in range(n2)]
    for i in range(n):
        rows[i][n + i] = Fraction(1)
        rows[n + i][i] = Fraction(-1)
    return Matrix.from_rows(rows)


def standard_j(n2: int) -> Matrix:
    """J X_i = Y_i, J Y_i = -X_i on basis (X_1..X_n, Y_1..Y_n)."""
    if n2 % 2:
        raise DimensionMismatch("standard J needs even dimension")
    n = n2 // 2
    rows = [[Fraction(0)] * n2 for _ in range(n2)]
    for i in range(n):
        rows[n + i][i] = Fraction(1)   # column i is J X_i = Y_i
        rows[i][n + i] = Fraction(-1)  # column n+i is J Y_i = -X_i
    return Matrix.from_rows(rows)
