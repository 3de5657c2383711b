"""Analysis reports and the golden-claim runner.

`build_report` aggregates everything the library can say about one
triple into a plain JSON-ready dict: validation outcomes, the image and
kernel distributions with involutivity flags, curvature scalars, the
predicate flags, and (on request) the raw tensor values. All numbers are
rational strings; re-running on the same input yields byte-identical
JSON. Wall-clock timings are therefore opt-in: they are the one field
that would break determinism, so they only appear when explicitly
requested.

`run_goldens` replays the frozen expected values for the whole catalog
(spans, flags, norms, nilpotency, twistor claims) and reports PASS/FAIL
per claim. The `overrides` hook swaps expected values so the test suite
can verify the runner actually fails when it should.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional

from . import catalog
from .connections import (chern_connection, covariant_derivative_n,
                          curvature_summary, levi_civita, nabla_j_checks)
from .lie import LieAlgebra
from .linalg import Matrix, Subspace
from .nijenhuis import (DistributionReport, check_tensor_identities,
                        classify, nijenhuis_tensor)
from .nspace import contains_tensor
from .serialization import matrix_to_rows, triple_hash
from .symp import SymplecticTriple
from .twistor import twistor_claims


def subspace_payload(s: Subspace, g: LieAlgebra) -> dict:
    return {
        "dim": s.dim,
        "basis": [{
            "coords": [str(x) for x in v],
            "combo": g.name_of_vector(v),
        } for v in s.vectors()],
    }


def _proportional_to(m: Matrix, ref: Matrix) -> tuple[bool, Optional[str]]:
    """Is m = c * ref for a single rational c (ref != 0)?"""
    c = None
    for i in range(ref.nrows):
        for j in range(ref.ncols):
            r = ref.entry(i, j)
            if r != 0:
                c = m.entry(i, j) / r
                break
        if c is not None:
            break
    if c is None:
        return m.is_zero(), None
    return (m == ref.scale(c)), str(c)


def build_report(t: SymplecticTriple, name: Optional[str] = None,
                 full: bool = False, timings: bool = False) -> dict:
    t0 = time.monotonic()
    g = t.algebra
    n = nijenhuis_tensor(t)
    rep: DistributionReport = classify(t, n)
    lc = levi_civita(t)
    ch = chern_connection(t, lc)
    cs = curvature_summary(t, lc, ch)
    par = covariant_derivative_n(t, lc, n)
    ident = dict(check_tensor_identities(t, n))
    ident.update(nabla_j_checks(t, lc))
    ident["constraint_membership"] = contains_tensor(t, n)
    nil, lcs_dims = g.is_nilpotent()
    prop, factor = _proportional_to(cs.chern_ricci, t.omega)
    gap = cs.hermitian_scalar - cs.scalar

    out: dict[str, Any] = {
        "name": name if name is not None else g.name,
        "dim": t.dim,
        "hash": triple_hash(t),
        "validation": {
            # build_triple re-raises on any failure, so reaching this
            # point certifies every axiom below
            "jacobi": True,
            "omega_skew": True,
            "omega_nondegenerate": True,
            "omega_cocycle": True,
            "j_squares_to_minus_id": True,
            "j_compatible": True,
            "metric_positive": True,
        },
        "algebra": {
            "abelian": g.is_abelian(),
            "nilpotent": nil,
            "lower_central_dims": lcs_dims,
            "derived_dim": g.derived_subalgebra().dim,
            "character_space_dim": len(g.characters()),
        },
        "nijenhuis": {
            "integrable": rep.integrable,
            "norm_sq": str(rep.norm_sq),
            "image": subspace_payload(rep.image, g),
            "image_involutive": rep.image_involutive,
            "perp": subspace_payload(rep.perp, g),
            "perp_involutive": rep.perp_involutive,
            "kernel": subspace_payload(rep.kernel, g),
        },
        "identities": {k: bool(v) for k, v in sorted(ident.items())},
        "flags": {
            "kahler": rep.integrable,
            "maximally_non_integrable": rep.image.dim == t.dim,
            "ricci_j_invariant": cs.ricci_j_invariant,
            "chern_ricci_proportional_to_omega": prop,
            "lattice_criterion": g.admits_lattice(),
        },
        "curvature": {
            "scalar": str(cs.scalar),
            "hermitian_scalar": str(cs.hermitian_scalar),
            "scalar_gap": str(gap),
            "norm_sq_over_16": str(rep.norm_sq / 16),
            "ricci": matrix_to_rows(cs.ricci),
            "chern_ricci": matrix_to_rows(cs.chern_ricci),
            "chern_ricci_factor": factor if prop else None,
        },
        "parallelism": {
            "nabla_n_zero": par.nabla_n_zero,
            "image_parallel": par.image_parallel,
            "perp_parallel": par.perp_parallel,
            "local_product": par.local_product,
        },
    }
    if full:
        tensor = []
        for i in range(t.dim):
            for j in range(i + 1, t.dim):
                v = n.of_basis(i, j)
                if any(x != 0 for x in v):
                    tensor.append({
                        "pair": f"{g.basis_names[i]},{g.basis_names[j]}",
                        "coords": [str(x) for x in v],
                        "combo": g.name_of_vector(v),
                    })
        out["tensor"] = tensor
    if timings:
        out["timings"] = {"total_ms": int((time.monotonic() - t0) * 1000)}
    return out


def render_text(report: dict) -> str:
    """Human-oriented rendering of a report."""
    lines = []
    lines.append(f"{report['name']}  (dim {report['dim']}, "
                 f"hash {report['hash'][:12]})")
    alg = report["algebra"]
    lines.append(f"  algebra: nilpotent={alg['nilpotent']} "
                 f"lower_central_dims={alg['lower_central_dims']} "
                 f"abelian={alg['abelian']}")
    nj = report["nijenhuis"]
    lines.append(f"  |N|^2 = {nj['norm_sq']}   integrable={nj['integrable']}")

    def span_lines(tag: str, sub: dict, inv: bool) -> None:
        combos = ", ".join(b["combo"] for b in sub["basis"]) or "0"
        lines.append(f"  {tag}: dim {sub['dim']}, involutive={inv}")
        lines.append(f"      span: {combos}")
        for b in sub["basis"]:
            lines.append(f"      [{', '.join(b['coords'])}]")

    span_lines("im N", nj["image"], nj["image_involutive"])
    span_lines("im N^perp", nj["perp"], nj["perp_involutive"])
    lines.append(f"  ker N: dim {nj['kernel']['dim']}")
    fl = report["flags"]
    lines.append("  flags: " + ", ".join(f"{k}={v}" for k, v in fl.items()))
    cur = report["curvature"]
    lines.append(f"  scalar = {cur['scalar']}   "
                 f"hermitian scalar = {cur['hermitian_scalar']}   "
                 f"gap = {cur['scalar_gap']} (|N|^2/16 = "
                 f"{cur['norm_sq_over_16']})")
    par = report["parallelism"]
    lines.append("  parallelism: " + ", ".join(
        f"{k}={v}" for k, v in par.items()))
    idents = report["identities"]
    bad = [k for k, v in idents.items() if not v]
    lines.append("  identities: all hold" if not bad
                 else f"  identities FAILING: {', '.join(bad)}")
    if "tensor" in report:
        lines.append("  N values:")
        for ent in report["tensor"]:
            lines.append(f"      N({ent['pair']}) = {ent['combo']}")
    if "timings" in report:
        lines.append(f"  timings: {report['timings']['total_ms']} ms")
    return "\n".join(lines)


# -- goldens -------------------------------------------------------------


@dataclass(frozen=True)
class GoldenRow:
    name: str
    claim: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def _span_rows(s: Subspace) -> list[list[str]]:
    return [[str(x) for x in v] for v in s.vectors()]


# frozen expected values for the catalog table; spans are canonical RREF
# rows in the entry's own basis order
_TABLE_EXPECT: dict[str, dict[str, Any]] = {
    "ex1": {
        "image_span": [["1", "0", "0", "-1"], ["0", "1", "1", "0"]],
        "perp_span": [["1", "0", "0", "1"], ["0", "1", "-1", "0"]],
        "image_involutive": False,
        "perp_involutive": False,
        "norm_sq": "16",
        "nilpotent": True,
    },
    "ex2": {
        "image_span": [["0", "1", "0", "0"], ["0", "0", "0", "1"]],
        "perp_span": [["1", "0", "0", "0"], ["0", "0", "1", "0"]],
        "image_involutive": True,
        "perp_involutive": True,
        "norm_sq": "8",
        "nilpotent": True,
    },
    "ex3": {
        "image_span": [["0", "1", "0", "0"], ["0", "0", "0", "1"]],
        "perp_span": [["1", "0", "0", "0"], ["0", "0", "1", "0"]],
        "image_involutive": False,
        "perp_involutive": True,
        "norm_sq": "2",
        "nilpotent": False,
    },
    "ex4": {
        "image_span": [["1", "2", "0", "0"], ["0", "0", "1", "2"]],
        "perp_span": [["1", "-1/2", "0", "0"], ["0", "0", "1", "-1/2"]],
        "image_involutive": True,
        "perp_involutive": False,
        "norm_sq": "200",
        "nilpotent": False,
    },
    "dim6": {
        "image_dim": 6,
        "maximally_non_integrable": True,
        "norm_sq": "80",
        "nilpotent": True,
    },
    "thurston(1)": {"norm_sq": "8", "image_involutive": True,
                    "perp_involutive": True},
    "thurston(2)": {"norm_sq": "16", "image_involutive": True,
                    "perp_involutive": True},
    "abelian(2)": {"norm_sq": "0", "integrable": True},
}

_TWISTOR_EXPECT: dict[int, dict[str, Any]] = {
    1: {"plus_integrable": True, "minus_image_dim": 0,
        "minus_form_positive": True, "plus_form_positive": False},
    2: {"plus_integrable": True, "minus_image_dim": 6,
        "minus_form_positive": True, "plus_form_positive": False},
    3: {"plus_integrable": True, "minus_image_dim": 12,
        "minus_form_positive": True, "plus_form_positive": False},
}


def _catalog_actual(name: str, claim: str) -> Any:
    t = catalog.builtin(name)
    rep = classify(t)
    if claim == "image_span":
        return _span_rows(rep.image)
    if claim == "perp_span":
        return _span_rows(rep.perp)
    if claim == "image_involutive":
        return rep.image_involutive
    if claim == "perp_involutive":
        return rep.perp_involutive
    if claim == "norm_sq":
        return str(rep.norm_sq)
    if claim == "nilpotent":
        return t.algebra.is_nilpotent()[0]
    if claim == "image_dim":
        return rep.image.dim
    if claim == "maximally_non_integrable":
        return rep.image.dim == t.dim
    if claim == "integrable":
        return rep.integrable
    raise KeyError(claim)


def golden_rows(filter_substr: Optional[str] = None,
                overrides: Optional[dict[tuple[str, str], Any]] = None,
                ) -> list[GoldenRow]:
    overrides = overrides or {}
    rows: list[GoldenRow] = []

    def want(name: str, claim: str, default: Any) -> Any:
        return overrides.get((name, claim), default)

    for name, claims in _TABLE_EXPECT.items():
        if filter_substr and filter_substr not in name:
            continue
        for claim, expected in claims.items():
            rows.append(GoldenRow(name, claim,
                                  want(name, claim, expected),
                                  _catalog_actual(name, claim)))
    for n, claims in _TWISTOR_EXPECT.items():
        name = f"twistor(n={n})"
        if filter_substr and filter_substr not in name:
            continue
        tc = twistor_claims(n)
        actuals = {
            "plus_integrable": tc.plus_integrable,
            "minus_image_dim": tc.minus_image_dim,
            "minus_form_positive": tc.minus_positive,
            "plus_form_positive": tc.plus_positive,
        }
        for claim, expected in claims.items():
            rows.append(GoldenRow(name, claim,
                                  want(name, claim, expected),
                                  actuals[claim]))
    return rows


def run_goldens(filter_substr: Optional[str] = None,
                overrides: Optional[dict[tuple[str, str], Any]] = None,
                ) -> tuple[list[str], bool]:
    rows = golden_rows(filter_substr, overrides)
    lines = []
    ok = True
    for r in rows:
        if r.ok:
            lines.append(f"PASS  {r.name} :: {r.claim}")
        else:
            ok = False
            lines.append(f"FAIL  {r.name} :: {r.claim} "
                         f"(expected {r.expected!r}, got {r.actual!r})")
    n_fail = sum(1 for r in rows if not r.ok)
    lines.append(f"{len(rows) - n_fail}/{len(rows)} golden claims hold")
    return lines, ok
