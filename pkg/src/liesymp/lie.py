"""Finite dimensional Lie algebras over Q, given by structure constants.

Storage is sparse: only brackets [e_i, e_j] with i < j and a nonzero
result are kept, as {(i, j): {k: coefficient}}. For the algebras handled
here (nilpotent / solvable, dim <= 60, few nonzero brackets) this makes
the exhaustive Jacobi check cheap.

Conventions:
  * bases are 0-indexed internally; names are whatever the caller says.
  * [e_i, e_i] = 0 and [e_j, e_i] = -[e_i, e_j] are implied, never stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionMismatch, JacobiViolation
from .linalg import Matrix, Subspace, qof

BracketTable = dict[tuple[int, int], dict[int, Fraction]]


def _clean(d: Mapping[int, Fraction]) -> dict[int, Fraction]:
    return {k: v for k, v in d.items() if v != 0}


@dataclass(frozen=True)
class LieAlgebra:
    name: str
    dim: int
    basis_names: tuple[str, ...]
    _table: BracketTable = field(repr=False)

    # -- bracket evaluation ---------------------------------------------

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[e_i, e_j] as a sparse coordinate dict."""
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        return {k: -v for k, v in self._table.get((j, i), {}).items()}

    def bracket_vec(self, u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
        """[u, v] for dense coordinate vectors."""
        u = [qof(x) for x in u]
        v = [qof(x) for x in v]
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch("vector length != algebra dimension")
        out = [Fraction(0)] * self.dim
        for (i, j), res in self._table.items():
            c = u[i] * v[j] - u[j] * v[i]
            if c == 0:
                continue
            for k, coeff in res.items():
                out[k] += c * coeff
        return tuple(out)

    def ad(self, u: Sequence) -> Matrix:
        """Matrix of ad_u = [u, .] in the given basis."""
        cols = []
        for j in range(self.dim):
            e = [Fraction(0)] * self.dim
            e[j] = Fraction(1)
            cols.append(self.bracket_vec(u, e))
        return Matrix.from_rows(list(zip(*cols)))

    def nonzero_brackets(self) -> list[tuple[int, int, dict[int, Fraction]]]:
        return [(i, j, dict(res)) for (i, j), res in sorted(self._table.items())]

    # -- structure ------------------------------------------------------

    def derived_subalgebra(self) -> Subspace:
        vecs = []
        for (i, j), res in self._table.items():
            v = [Fraction(0)] * self.dim
            for k, c in res.items():
                v[k] = c
            vecs.append(v)
        return Subspace.span(self.dim, vecs)

    def bracket_of_subspaces(self, a: Subspace, b: Subspace) -> Subspace:
        vecs = [self.bracket_vec(u, v)
                for u in a.vectors() for v in b.vectors()]
        return Subspace.span(self.dim, vecs)

    def lower_central_series(self) -> list[Subspace]:
        """g = g^1 >= g^2 = [g, g^1] >= ... until stable."""
        series = [Subspace.full(self.dim)]
        whole = series[0]
        while True:
            nxt = self.bracket_of_subspaces(whole, series[-1])
            if nxt.dim == series[-1].dim:
                break
            series.append(nxt)
            if nxt.dim == 0:
                break
        return series

    def is_nilpotent(self) -> tuple[bool, list[int]]:
        series = self.lower_central_series()
        return series[-1].dim == 0, [s.dim for s in series]

    def is_abelian(self) -> bool:
        return not self._table

    def characters(self) -> list[tuple[Fraction, ...]]:
        """Basis of the space of linear functionals vanishing on [g, g].

        Returned as coordinate rows in the dual basis, in canonical RREF
        order, so the "first character" is deterministic.
        """
        der = self.derived_subalgebra()
        if der.dim == 0:
            return [tuple(r) for r in Matrix.identity(self.dim).entries]
        return der.basis.nullspace()

    def has_rational_basis(self) -> bool:
        # structure constants are Fractions by construction, so the given
        # basis is already a rational one.
        return True

    def admits_lattice(self) -> bool:
        """Criterion for a cocompact lattice in the simply connected group:
        nilpotent with rational structure constants."""
        return self.is_nilpotent()[0] and self.has_rational_basis()

    # -- naming helpers ---------------------------------------------------

    def name_of_vector(self, vec: Sequence) -> str:
        """Render a coordinate vector as a combination of basis names."""
        terms = []
        for c, nm in zip((qof(x) for x in vec), self.basis_names):
            if c == 0:
                continue
            if c == 1:
                terms.append(("+", nm))
            elif c == -1:
                terms.append(("-", nm))
            elif c > 0:
                terms.append(("+", f"{c}*{nm}"))
            else:
                terms.append(("-", f"{-c}*{nm}"))
        if not terms:
            return "0"
        sign, first = terms[0]
        out = (("-" if sign == "-" else "") + first)
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


def validate(name: str, dim: int, basis_names: Sequence[str],
             brackets: Mapping[tuple[int, int], Mapping[int, object]],
             ) -> LieAlgebra:
    """Build a LieAlgebra after checking indices, antisymmetry bookkeeping
    and the full Jacobi identity on all basis triples."""
    names = tuple(basis_names)
    if len(names) != dim:
        raise DimensionMismatch(f"{len(names)} basis names for dim {dim}")
    table: BracketTable = {}
    for (i, j), res in brackets.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise DimensionMismatch(f"bracket index ({i}, {j}) out of range")
        if i >= j:
            raise ValueError(f"store brackets with i < j only, got ({i}, {j})")
        coeffs = _clean({k: qof(v) for k, v in res.items()})
        for k in coeffs:
            if not 0 <= k < dim:
                raise DimensionMismatch(f"bracket result index {k} out of range")
        if coeffs:
            table[(i, j)] = coeffs
    g = LieAlgebra(name, dim, names, table)
    _check_jacobi(g)
    return g


def _check_jacobi(g: LieAlgebra) -> None:
    """[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0 for i<j<k.

    Exploits sparsity: a triple contributes only if at least one inner
    bracket is nonzero, so only indices touching the table are scanned.
    """
    touched = sorted({x for ij in g._table for x in ij} |
                     {k for res in g._table.values() for k in res})
    others = range(g.dim)

    def inner(i: int, d: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for m, c in d.items():
            for k, v in g.bracket_basis(i, m).items():
                out[k] = out.get(k, Fraction(0)) + c * v
        return _clean(out)

    seen = set()
    for (a, b) in sorted(g._table):
        for c in others:
            tri = tuple(sorted({a, b, c}))
            if len(tri) < 3 or tri in seen:
                continue
            seen.add(tri)
            i, j, k = tri
            acc: dict[int, Fraction] = {}
            for x, d in ((i, g.bracket_basis(j, k)),
                         (j, g.bracket_basis(k, i)),
                         (k, g.bracket_basis(i, j))):
                for m, v in inner(x, d).items():
                    acc[m] = acc.get(m, Fraction(0)) + v
            acc = _clean(acc)
            if acc:
                resid = {g.basis_names[m]: str(v) for m, v in sorted(acc.items())}
                raise JacobiViolation(i, j, k, resid, names=g.basis_names)
    # triples not touching the table bracket to zero trivially
    _ = touched
