"""The hyperbolic twistor model: so(1, 2n) with its two canonical almost
complex structures on the tangent space of SO(1,2n)/U(n).

Matrices act on R^{1,2n} with the Lorentz form G = diag(-1, I_2n); the
algebra is {A : A^t G + G A = 0}. With j0 the standard complex structure
on the spacelike R^{2n}, the algebra splits as

    so(1,2n) = u(n) (+) q (+) p

where u(n) is the centralizer of j'0 = diag(0, j0) inside so(2n), q the
j0-anticommuting part of so(2n), and p the boosts E_{0i} + E_{i0}. The
reductive tangent space is m = q (+) p. Basis order (and the coordinate
order of everything this module returns):

    u: UX_ab (a<b), UY_ab (a<=b)   with X skew / Y symmetric in
                                   [[X, Y], [-Y, X]]
    q: QX_ab (a<b), QY_ab (a<b)    with X, Y skew in [[X, Y], [Y, -X]]
    p: P_1 .. P_2n                 with P_i = E_{0i} + E_{i0}

The invariant structures on m: both signs rotate the fibre directions the
same way (QX_ab -> QY_ab -> -QX_ab = half the adjoint action of j'0),
and differ on the horizontal part: J^{+-} P_i = +-P_{n+i}, i <= n.

The orbit 2-form is omega(A, B) = -Tr(j'0 [A, B]); its potential
phi = -Tr(j'0 . ) vanishes on q and p, so omega kills u(n) and restricts
to an invariant symplectic form on m (block diagonal across q and p).

The integrability tensor of either J is computed definitionally from the
structure constants, extending J by zero on u(n) and projecting values
back to m. The plus structure is integrable; the minus one has image all
of m once n >= 2, with its p x p values filling the fibre directions q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .errors import InternalInvariantViolation
from .lie import LieAlgebra, validate
from .linalg import Matrix, Subspace, qof

Sign = Literal["+", "-"]

Sparse = dict[tuple[int, int], Fraction]  # (row, col) -> value, matrix entries


def _mat_mul(a: Sparse, b: Sparse) -> Sparse:
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (r, c), v in b.items():
        by_row.setdefault(r, []).append((c, v))
    out: Sparse = {}
    for (r, c), v in a.items():
        for c2, v2 in by_row.get(c, ()):
            key = (r, c2)
            nv = out.get(key, Fraction(0)) + v * v2
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


def _mat_sub(a: Sparse, b: Sparse) -> Sparse:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, Fraction(0)) - v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


@dataclass(frozen=True)
class TwistorModel:
    n: int
    algebra: LieAlgebra
    u_indices: tuple[int, ...]
    q_indices: tuple[int, ...]
    p_indices: tuple[int, ...]
    mats: tuple[Sparse, ...] = field(repr=False)  # basis as Lorentz matrices
    phi: tuple[Fraction, ...] = field(repr=False)

    @property
    def m_indices(self) -> tuple[int, ...]:
        return self.q_indices + self.p_indices

    @property
    def m_dim(self) -> int:
        return len(self.q_indices) + len(self.p_indices)

    def omega_basis(self, x: int, y: int) -> Fraction:
        """omega(e_x, e_y) = phi([e_x, e_y])."""
        out = Fraction(0)
        for k, c in self.algebra.bracket_basis(x, y).items():
            if self.phi[k] != 0:
                out += c * self.phi[k]
        return out

    def j_perm(self, sign: Sign) -> dict[int, tuple[int, Fraction]]:
        """J as a signed permutation of the m-part basis indices."""
        n = self.n
        nq = len(self.q_indices)
        half = nq // 2
        perm: dict[int, tuple[int, Fraction]] = {}
        for t in range(half):  # QX_ab -> QY_ab -> -QX_ab
            qx = self.q_indices[t]
            qy = self.q_indices[half + t]
            perm[qx] = (qy, Fraction(1))
            perm[qy] = (qx, Fraction(-1))
        s = Fraction(1 if sign == "+" else -1)
        for i in range(n):  # P_i -> +-P_{n+i}, P_{n+i} -> -+P_i
            pi = self.p_indices[i]
            pni = self.p_indices[n + i]
            perm[pi] = (pni, s)
            perm[pni] = (pi, -s)
        return perm


def _names_and_mats(n: int) -> tuple[list[str], list[Sparse],
                                     list[int], list[int], list[int]]:
    names: list[str] = []
    mats: list[Sparse] = []
    u_idx: list[int] = []
    q_idx: list[int] = []
    p_idx: list[int] = []

    def add(name: str, m: Sparse, bucket: list[int]) -> None:
        bucket.append(len(names))
        names.append(name)
        mats.append(m)

    one = Fraction(1)
    # u(n): UX_ab = [[E_ab - E_ba, 0], [0, E_ab - E_ba]]
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            add(f"UX_{a}_{b}", {(a, b): one, (b, a): -one,
                                (n + a, n + b): one, (n + b, n + a): -one},
                u_idx)
    # u(n): UY_ab = [[0, E_ab + E_ba], [-(E_ab + E_ba), 0]]  (Y symmetric)
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a == b:
                m = {(a, n + a): one, (n + a, a): -one}
            else:
                m = {(a, n + b): one, (b, n + a): one,
                     (n + a, b): -one, (n + b, a): -one}
            add(f"UY_{a}_{b}", m, u_idx)
    # q: QX_ab = [[E_ab - E_ba, 0], [0, -(E_ab - E_ba)]]
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            add(f"QX_{a}_{b}", {(a, b): one, (b, a): -one,
                                (n + a, n + b): -one, (n + b, n + a): one},
                q_idx)
    # q: QY_ab = [[0, E_ab - E_ba], [E_ab - E_ba, 0]]  (Y skew)
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            add(f"QY_{a}_{b}", {(a, n + b): one, (b, n + a): -one,
                                (n + a, b): one, (n + b, a): -one},
                q_idx)
    # p: P_i = E_{0i} + E_{i0}
    for i in range(1, 2 * n + 1):
        add(f"P_{i}", {(0, i): one, (i, 0): one}, p_idx)
    return names, mats, u_idx, q_idx, p_idx


def _expand_in_basis(m: Sparse, n: int, names: list[str]) -> dict[int, Fraction]:
    """Coordinates of a Lorentz-algebra matrix in the basis above.

    Uses the entry layout directly: the p part is read off row 0, the
    so(2n) block decomposes by symmetry type. Exactness of the expansion
    is asserted by reconstruction."""
    coords: dict[int, Fraction] = {}
    name_pos = {nm: i for i, nm in enumerate(names)}

    def put(nm: str, v: Fraction) -> None:
        if v:
            coords[name_pos[nm]] = coords.get(name_pos[nm], Fraction(0)) + v

    for i in range(1, 2 * n + 1):
        v = m.get((0, i), Fraction(0))
        put(f"P_{i}", v)
    # so(2n) block entries, 1-indexed a, b within each n-half
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            tl = m.get((a, b), Fraction(0))           # X-type, top-left
            br = m.get((n + a, n + b), Fraction(0))   # X-type, bottom-right
            tr = m.get((a, n + b), Fraction(0))       # Y-type, top-right
            trb = m.get((b, n + a), Fraction(0))
            if a < b and (tl or br):
                # split into UX (equal diagonal blocks) and QX (opposite)
                put(f"UX_{a}_{b}", (tl + br) / 2)
                put(f"QX_{a}_{b}", (tl - br) / 2)
            if a == b and tr:
                put(f"UY_{a}_{a}", tr)
            if a < b and (tr or trb):
                put(f"UY_{a}_{b}", (tr + trb) / 2)
                put(f"QY_{a}_{b}", (tr - trb) / 2)
    return {k: v for k, v in coords.items() if v != 0}


def build_twistor_model(n: int) -> TwistorModel:
    """Construct so(1, 2n) with validated structure constants and the
    split bookkeeping. The basis expansion of every bracket is verified
    by exact reconstruction before the algebra is assembled."""
    if n < 1:
        raise ValueError("n >= 1 required")
    names, mats, u_idx, q_idx, p_idx = _names_and_mats(n)
    dim = len(names)
    assert dim == n * (2 * n + 1)  # (2n+1)(2n)/2
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for x in range(dim):
        for y in range(x + 1, dim):
            br = _mat_sub(_mat_mul(mats[x], mats[y]),
                          _mat_mul(mats[y], mats[x]))
            if not br:
                continue
            coords = _expand_in_basis(br, n, names)
            recon: Sparse = {}
            for k, c in coords.items():
                for key, v in mats[k].items():
                    nv = recon.get(key, Fraction(0)) + c * v
                    if nv:
                        recon[key] = nv
                    else:
                        recon.pop(key, None)
            if recon != br:
                raise InternalInvariantViolation(
                    f"bracket of {names[x]}, {names[y]} leaves the span")
            if coords:
                table[(x, y)] = coords
    g = validate(f"so(1,{2*n})", dim, names, table)
    # phi(A) = -Tr(j'0 A): supported on the UY diagonal only
    phi = [Fraction(0)] * dim
    name_pos = {nm: i for i, nm in enumerate(names)}
    for a in range(1, n + 1):
        phi[name_pos[f"UY_{a}_{a}"]] = Fraction(-2)
    return TwistorModel(n, g, tuple(u_idx), tuple(q_idx), tuple(p_idx),
                        tuple(mats), tuple(phi))


# -- the integrability tensor on m --------------------------------------


def twistor_nijenhuis(model: TwistorModel, sign: Sign,
                      ) -> dict[tuple[int, int], dict[int, Fraction]]:
    """N(e_a, e_b) for all m-basis pairs a < b, values projected to m.

    Definitional formula with J extended by zero on u(n):
    N(A, B) = [JA, JB] - J[JA, B] - J[A, JB] - [A, B], then drop the
    u-components of the value."""
    g = model.algebra
    perm = model.j_perm(sign)
    uset = set(model.u_indices)

    def j_apply(d: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for k, c in d.items():
            hit = perm.get(k)
            if hit is None:
                continue  # u-component: J extends by zero
            t, s = hit
            nv = out.get(t, Fraction(0)) + s * c
            if nv:
                out[t] = nv
            else:
                out.pop(t, None)
        return out

    out: dict[tuple[int, int], dict[int, Fraction]] = {}
    m_idx = model.m_indices
    for ia, a in enumerate(m_idx):
        sa_idx, sa = perm[a]
        for b in m_idx[ia + 1:]:
            sb_idx, sb = perm[b]
            acc: dict[int, Fraction] = {}

            def add(d: dict[int, Fraction], c: Fraction) -> None:
                for k, v in d.items():
                    nv = acc.get(k, Fraction(0)) + c * v
                    if nv:
                        acc[k] = nv
                    else:
                        acc.pop(k, None)

            add(g.bracket_basis(sa_idx, sb_idx), sa * sb)
            add(j_apply(g.bracket_basis(sa_idx, b)), -sa)
            add(j_apply(g.bracket_basis(a, sb_idx)), -sb)
            add(g.bracket_basis(a, b), Fraction(-1))
            proj = {k: v for k, v in acc.items() if k not in uset}
            if proj:
                out[(a, b)] = proj
    return out


def _m_coords(model: TwistorModel, d: dict[int, Fraction],
              ) -> tuple[Fraction, ...]:
    pos = {k: i for i, k in enumerate(model.m_indices)}
    v = [Fraction(0)] * model.m_dim
    for k, c in d.items():
        v[pos[k]] = c
    return tuple(v)


def nijenhuis_image(model: TwistorModel, sign: Sign) -> Subspace:
    """Projected image span, as a subspace of m (coordinates ordered
    q then p)."""
    nvals = twistor_nijenhuis(model, sign)
    return Subspace.span(model.m_dim,
                         [_m_coords(model, d) for d in nvals.values()])


def p_pairs_span_q(model: TwistorModel, sign: Sign) -> bool:
    """Do the p x p values of N fill the fibre directions q exactly?"""
    nvals = twistor_nijenhuis(model, sign)
    qset = set(model.q_indices)
    vecs = []
    for (a, b), d in nvals.items():
        if a in qset or b in qset:
            continue
        if any(k not in qset for k in d):
            return False  # a p x p value escaping q would refute the claim
    # rebuild the q-span of p x p values
    pstart = len(model.q_indices)
    for (a, b), d in nvals.items():
        if a in qset or b in qset:
            continue
        vecs.append(_m_coords(model, d))
    span = Subspace.span(model.m_dim, vecs)
    want = Subspace.span(model.m_dim, [
        tuple(Fraction(1 if i == t else 0) for i in range(model.m_dim))
        for t in range(pstart)])
    return span == want


def kks_matrix_m(model: TwistorModel) -> Matrix:
    """omega restricted to m, in m-coordinates."""
    m_idx = model.m_indices
    return Matrix.from_rows([
        [model.omega_basis(x, y) for y in m_idx] for x in m_idx])


def kks_j_invariant(model: TwistorModel, sign: Sign) -> bool:
    """omega(J A, J B) = omega(A, B) on all m-basis pairs."""
    perm = model.j_perm(sign)
    for a in model.m_indices:
        ja, sa = perm[a]
        for b in model.m_indices:
            jb, sb = perm[b]
            if sa * sb * model.omega_basis(ja, jb) != model.omega_basis(a, b):
                return False
    return True


@dataclass(frozen=True)
class PositivityReport:
    minus_positive: bool
    plus_positive: bool
    plus_witness: Optional[tuple[str, Fraction]]
    q_diag: Fraction
    p_diag_minus: Fraction


def positivity_report(model: TwistorModel) -> PositivityReport:
    """Definiteness of g_{+-}(A, B) = omega(A, J_{+-} B) on m.

    The minus form is checked positive definite by Sylvester minors; for
    the plus form a concrete non-positive direction is exhibited (the
    first boost, unless q is empty in which case the form on q would be
    the only difference and there is none for n = 1 ... the witness is
    always found on p)."""
    kks = kks_matrix_m(model)
    grams = {}
    for sign in ("+", "-"):
        perm = model.j_perm(sign)
        pos = {k: i for i, k in enumerate(model.m_indices)}
        cols = []
        for b in model.m_indices:
            jb, sb = perm[b]
            col = [Fraction(0)] * model.m_dim
            col[pos[jb]] = sb
            cols.append(col)
        jm = Matrix.from_rows(list(zip(*cols)))
        gram = kks @ jm
        if not gram.is_symmetric():
            raise InternalInvariantViolation(
                f"omega(., J{sign} .) not symmetric on m")
        grams[sign] = gram
    ok_minus, _, _ = grams["-"].leading_minors_positive()
    ok_plus, _, _ = grams["+"].leading_minors_positive()
    witness = None
    if not ok_plus:
        for i, k in enumerate(model.m_indices):
            v = grams["+"].entry(i, i)
            if v <= 0:
                witness = (model.algebra.basis_names[k], v)
                break
    nq = len(model.q_indices)
    q_diag = grams["-"].entry(0, 0) if nq else Fraction(0)
    p_diag = grams["-"].entry(nq, nq)
    return PositivityReport(ok_minus, ok_plus, witness, q_diag, p_diag)


# -- closed-form helpers (used by tests and the CLI claims) -------------


def p_element(model: TwistorModel, u: Sequence) -> dict[int, Fraction]:
    """P(u) = sum u_i P_i as basis coordinates (u has length 2n)."""
    u = [qof(x) for x in u]
    if len(u) != 2 * model.n:
        raise ValueError("boost vector has wrong length")
    return {model.p_indices[i]: u[i] for i in range(2 * model.n) if u[i]}


def q_element(model: TwistorModel, d2n: Matrix) -> dict[int, Fraction]:
    """Coordinates of a q-matrix given as its 2n x 2n spacelike block
    [[X, Y], [Y, -X]] with X, Y skew; raises if the matrix is not in q."""
    n = model.n
    m: Sparse = {}
    for r in range(2 * n):
        for c in range(2 * n):
            v = d2n.entry(r, c)
            if v:
                m[(r + 1, c + 1)] = v
    coords = _expand_in_basis(m, n, list(model.algebra.basis_names))
    qset = set(model.q_indices)
    if any(k not in qset for k in coords):
        raise ValueError("matrix is not in the j0-anticommuting part")
    return coords


def j0_matrix(n: int) -> Matrix:
    rows = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        rows[n + i][i] = Fraction(1)
        rows[i][n + i] = Fraction(-1)
    return Matrix.from_rows(rows)


def q_block_matrix(model: TwistorModel, coords: dict[int, Fraction]) -> Matrix:
    """The 2n x 2n spacelike block of a q-element given by coordinates."""
    n = model.n
    rows = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for k, c in coords.items():
        for (r, col), v in model.mats[k].items():
            if r == 0 or col == 0:
                raise ValueError("element has a boost component")
            rows[r - 1][col - 1] += c * v
    return Matrix.from_rows(rows)


# -- claim bundle --------------------------------------------------------


@dataclass(frozen=True)
class TwistorClaims:
    n: int
    plus_integrable: bool
    minus_image_dim: int
    m_dim: int
    p_pairs_fill_q: bool
    kks_invariant_plus: bool
    kks_invariant_minus: bool
    minus_positive: bool
    plus_positive: bool
    plus_witness: Optional[tuple[str, Fraction]]


def twistor_claims(n: int, model: Optional[TwistorModel] = None,
                   ) -> TwistorClaims:
    if model is None:
        model = build_twistor_model(n)
    nplus = twistor_nijenhuis(model, "+")
    img = nijenhuis_image(model, "-")
    pos = positivity_report(model)
    return TwistorClaims(
        n=n,
        plus_integrable=(not nplus),
        minus_image_dim=img.dim,
        m_dim=model.m_dim,
        p_pairs_fill_q=p_pairs_span_q(model, "-"),
        kks_invariant_plus=kks_j_invariant(model, "+"),
        kks_invariant_minus=kks_j_invariant(model, "-"),
        minus_positive=pos.minus_positive,
        plus_positive=pos.plus_positive,
        plus_witness=pos.plus_witness,
    )
