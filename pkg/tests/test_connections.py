import random
from fractions import Fraction

from liesymp import (Matrix, chern_connection, covariant_derivative_n,
                     curvature_summary, levi_civita, nabla_j_checks,
                     nijenhuis_tensor, norm_sq, symplectic_connection,
                     torsion, torsion_recovers_nijenhuis)
from liesymp.connections import Connection, nabla_j_endos
from support import conjugated_triple

F = Fraction


def _metric_compatible(t, conn):
    g = t.metric
    for i in range(t.dim):
        m = conn.endo(i)
        if not (g @ m + m.transpose() @ g).is_zero():
            return False
    return True


def _omega_parallel(t, conn):
    om = t.omega
    for i in range(t.dim):
        m = conn.endo(i)
        if not (om @ m + m.transpose() @ om).is_zero():
            return False
    return True


def test_levi_civita_axioms(extended_catalog):
    for name, t in extended_catalog.items():
        lc = levi_civita(t)
        assert _metric_compatible(t, lc), name
        assert torsion(t, lc).is_zero(), name


def test_wrong_sign_convention_loses_metric_compatibility(catalog):
    # same structure solved with all plus signs on the right-hand side:
    # still torsion free, no longer metric compatible. Pins down why the
    # two minus signs in the invariant formula matter.
    t = catalog["thurston(1)"]
    d, g = t.dim, t.metric
    ginv = t.metric_inv
    basis = [[F(1) if a == b else F(0) for a in range(d)] for b in range(d)]

    def ip(u, v):
        w = g.apply(u)
        return sum(w[k] * v[k] for k in range(d))

    rows = []
    for i in range(d):
        row = []
        for b in range(d):
            rhs = []
            for c in range(d):
                val = (ip(t.algebra.bracket_vec(basis[i], basis[b]), basis[c])
                       + ip(t.algebra.bracket_vec(basis[b], basis[c]), basis[i])
                       + ip(t.algebra.bracket_vec(basis[i], basis[c]), basis[b]))
                rhs.append(val / 2)
            row.append(ginv.apply(rhs))
        rows.append(tuple(row))
    variant = Connection("allplus", d, tuple(rows))
    assert torsion(t, variant).is_zero()
    assert not _metric_compatible(t, variant)


def test_symplectic_connection_axioms(extended_catalog):
    for name, t in extended_catalog.items():
        sc = symplectic_connection(t)
        assert _omega_parallel(t, sc), name
        assert torsion(t, sc).is_zero(), name


def test_chern_connection_axioms(extended_catalog):
    for name, t in extended_catalog.items():
        ch = chern_connection(t)
        assert _omega_parallel(t, ch), name
        # J parallel: each endomorphism commutes with J
        for i in range(t.dim):
            m = ch.endo(i)
            assert m @ t.j == t.j @ m, name


def test_chern_torsion_is_quarter_nijenhuis(extended_catalog):
    for name, t in extended_catalog.items():
        n = nijenhuis_tensor(t)
        tor = torsion(t, chern_connection(t))
        for b in range(t.dim):
            for c in range(b + 1, t.dim):
                quarter = [x / 4 for x in n.of_basis(b, c)]
                assert list(tor.of_basis(b, c)) == quarter, name


def test_torsion_of_j_parallel_connection_recovers_n(extended_catalog):
    for name, t in extended_catalog.items():
        assert torsion_recovers_nijenhuis(t, chern_connection(t)), name


def test_nabla_j_identities(extended_catalog):
    for name, t in extended_catalog.items():
        checks = nabla_j_checks(t)
        assert all(checks.values()), (name, checks)


def test_nabla_j_anticommutes_with_j_pointwise(catalog):
    t = catalog["ex3"]
    for m in nabla_j_endos(t):
        assert (t.j @ m) == (m @ t.j).scale(-1)


_SCALARS = {
    # name -> (riemannian scalar, hermitian scalar)
    "ex1": (F(-1), F(0)),
    "ex2": (F(-1, 2), F(0)),
    "ex3": (F(-49, 8), F(-6)),
    "ex4": (F(-29, 2), F(-2)),
    "dim6": (F(-5), F(0)),
}


def test_frozen_scalar_curvatures(catalog):
    for name, (sg, sc) in _SCALARS.items():
        summary = curvature_summary(catalog[name])
        assert summary.scalar == sg, name
        assert summary.hermitian_scalar == sc, name


def test_thurston_curvature_profile(catalog):
    for alpha in ("1/2", "1", "2"):
        t = catalog[f"thurston({alpha})"]
        summary = curvature_summary(t)
        a = F(alpha)
        assert summary.scalar == -a / 2
        assert summary.hermitian_scalar == 0
        assert summary.chern_ricci.is_zero()
        assert not summary.ricci_j_invariant
    s1 = curvature_summary(catalog["thurston(1)"])
    assert s1.ricci == Matrix.diag([0, F(1, 2), F(-1, 2), F(-1, 2)])


def test_abelian_curvature_vanishes(catalog):
    summary = curvature_summary(catalog["abelian(2)"])
    assert summary.scalar == 0 and summary.hermitian_scalar == 0
    assert summary.ricci.is_zero() and summary.chern_ricci.is_zero()
    assert summary.ricci_j_invariant


def test_ricci_j_invariance_tracks_integrability(catalog):
    for name, t in catalog.items():
        summary = curvature_summary(t)
        integrable = nijenhuis_tensor(t).is_zero()
        if integrable:
            assert summary.ricci_j_invariant, name
        else:
            assert not summary.ricci_j_invariant, name


def test_scalar_gap_is_sixteenth_of_norm(extended_catalog):
    # measured exact law across every triple in the suite: the defect of
    # the hermitian scalar against the riemannian one is |N|^2 / 16
    for name, t in extended_catalog.items():
        summary = curvature_summary(t)
        nsq = norm_sq(nijenhuis_tensor(t), t)
        assert summary.hermitian_scalar - summary.scalar == nsq / 16, name


def test_scalar_gap_law_survives_symplectic_conjugation(catalog):
    rng = random.Random(20250819)
    for base in ("ex1", "ex2", "ex4", "thurston(2)"):
        t = conjugated_triple(catalog[base], rng)
        summary = curvature_summary(t)
        nsq = norm_sq(nijenhuis_tensor(t), t)
        assert summary.hermitian_scalar - summary.scalar == nsq / 16, base


_PARALLELISM = {
    # nabla N under the metric connection: zero iff N itself vanishes
    "ex1": (False, False),
    "ex2": (False, False),
    "dim6": (False, True),   # whole-algebra image is trivially parallel
    "thurston(1)": (False, False),
    "abelian(2)": (True, True),
}


def test_covariant_derivative_of_n(catalog):
    for name, (nz, im_par) in _PARALLELISM.items():
        rep = covariant_derivative_n(catalog[name])
        assert rep.nabla_n_zero == nz, name
        assert rep.image_parallel == im_par, name
        assert rep.local_product == (rep.image_parallel and rep.perp_parallel)


def test_nonvanishing_n_is_never_parallel(extended_catalog):
    for name, t in extended_catalog.items():
        n = nijenhuis_tensor(t)
        rep = covariant_derivative_n(t, n=n)
        assert rep.nabla_n_zero == n.is_zero(), name
