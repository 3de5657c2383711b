"""Built-in catalog of symplectic Lie algebras with compatible J, plus the
two constructions (trivial product extension, central character extension)
and a synthesizer that hits any admissible (dimension, image-dimension,
involutivity) signature.

Basis conventions for the dim-4 and abelian entries: (X_1..X_n, Y_1..Y_n)
with omega(X_i, Y_i) = 1 and J X_i = Y_i. The four dim-4 entries realize
the four involutivity patterns of (im N, im N^perp):

    ex1  both non-involutive        ex2  both involutive
    ex3  only the complement        ex4  only the image

`thurston(a)` is the classical dim-4 nilpotent example carrying a one
parameter family of compatible J (a > 0); `dim6` is nilpotent with im N
equal to the whole algebra, the smallest dimension where that happens.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .errors import (NotACharacter, PerfectAlgebra, Unsatisfiable,
                     ZeroCharacter)
from .lie import LieAlgebra, validate
from .linalg import Matrix, qof, vec_is_zero
from .symp import SymplecticTriple, build_triple, standard_j, standard_omega


def _xy_names(n: int) -> list[str]:
    return [f"X{i+1}" for i in range(n)] + [f"Y{i+1}" for i in range(n)]


def abelian(n: int) -> SymplecticTriple:
    """R^{2n} with the standard structures; Kaehler, N = 0."""
    if n < 1:
        raise Unsatisfiable("abelian factor needs n >= 1")
    g = validate(f"abelian({n})", 2 * n, _xy_names(n), {})
    return build_triple(g, standard_omega(2 * n), standard_j(2 * n))


def ex1() -> SymplecticTriple:
    # [X1, X2] = Y2, [X1, Y2] = Y1; nilpotent, neither distribution involutive
    g = validate("ex1", 4, _xy_names(2), {(0, 1): {3: 1}, (0, 3): {2: 1}})
    return build_triple(g, standard_omega(4), standard_j(4))


def ex2() -> SymplecticTriple:
    # [Y1, Y2] = X2; nilpotent, both distributions involutive
    g = validate("ex2", 4, _xy_names(2), {(2, 3): {1: 1}})
    return build_triple(g, standard_omega(4), standard_j(4))


def ex3() -> SymplecticTriple:
    # [X1,X2] = (X2+Y2)/2, [X1,Y1] = Y1, [X1,Y2] = Y2/2, [X2,Y2] = Y1
    # solvable not nilpotent; only the complement of im N is involutive
    h = Fraction(1, 2)
    g = validate("ex3", 4, _xy_names(2), {
        (0, 1): {1: h, 3: h},
        (0, 2): {2: 1},
        (0, 3): {3: h},
        (1, 3): {2: 1},
    })
    return build_triple(g, standard_omega(4), standard_j(4))


def ex4() -> SymplecticTriple:
    # [X1,X2] = -X2+2Y1+4Y2, [X1,Y1] = -Y1, [X1,Y2] = Y1+Y2
    # not nilpotent; only im N is involutive
    g = validate("ex4", 4, _xy_names(2), {
        (0, 1): {1: -1, 2: 2, 3: 4},
        (0, 2): {2: -1},
        (0, 3): {2: 1, 3: 1},
    })
    return build_triple(g, standard_omega(4), standard_j(4))


def dim6() -> SymplecticTriple:
    # 6-dimensional nilpotent with im N = the whole algebra
    g = validate("dim6", 6, _xy_names(3), {
        (0, 1): {1: 1, 2: 1},
        (0, 2): {1: -1, 2: -1, 4: 1},
        (0, 4): {4: -1, 5: 1},
        (0, 5): {4: -1, 5: 1},
        (1, 2): {3: 1},
    })
    return build_triple(g, standard_omega(6), standard_j(6))


def thurston(alpha=1) -> SymplecticTriple:
    """Kodaira-Thurston algebra [E3, E4] = E2 with the compatible family
    J E1 = a E3, J E2 = E4 (a > 0). |N|^2 = 8a, both distributions
    involutive, never integrable."""
    a = qof(alpha)
    if a <= 0:
        raise Unsatisfiable("parameter must be positive")
    g = validate(f"thurston({a})", 4, ("E1", "E2", "E3", "E4"),
                 {(2, 3): {1: 1}})
    omega = Matrix.from_rows([
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [-1, 0, 0, 0],
        [0, -1, 0, 0],
    ])
    j = Matrix.from_rows([
        [0, 0, -1 / a, 0],
        [0, 0, 0, -1],
        [a, 0, 0, 0],
        [0, 1, 0, 0],
    ])
    return build_triple(g, omega, j)


_PLAIN = {"ex1": ex1, "ex2": ex2, "ex3": ex3, "ex4": ex4, "dim6": dim6}


def catalog_names() -> list[str]:
    return ["ex1", "ex2", "ex3", "ex4", "dim6", "thurston(a)", "abelian(n)"]


def builtin(name: str, alpha=None) -> SymplecticTriple:
    """Look up a catalog entry by name.

    Accepts "ex1".."ex4", "dim6", "thurston", "thurston(1/2)", "abelian(3)".
    A separate `alpha` argument overrides any parenthesized parameter.
    """
    name = name.strip()
    m = re.fullmatch(r"(\w+)\s*\(\s*([^)]+)\s*\)", name)
    param: Optional[str] = None
    if m:
        name, param = m.group(1), m.group(2)
    if alpha is not None:
        param = str(alpha)
    if name in _PLAIN:
        if param is not None:
            raise KeyError(f"{name} takes no parameter")
        return _PLAIN[name]()
    if name == "thurston":
        return thurston(param if param is not None else 1)
    if name == "abelian":
        n = int(param) if param is not None else 2
        return abelian(n)
    raise KeyError(f"unknown catalog entry {name!r}; known: "
                   + ", ".join(catalog_names()))


# -- constructions -----------------------------------------------------


def _fresh_pair(names: tuple[str, ...], stem1: str, stem2: str) -> tuple[str, str]:
    pat = re.compile(rf"^{stem1}\d+$")
    m = sum(1 for nm in names if pat.match(nm)) + 1
    return f"{stem1}{m}", f"{stem2}{m}"


def product_extension(t: SymplecticTriple) -> SymplecticTriple:
    """Direct sum with the standard plane: dim grows by 2, N is unchanged
    on the old part and zero on the new, so im N is preserved and its
    complement gains the new plane."""
    g = t.algebra
    n = g.dim
    p, q = _fresh_pair(g.basis_names, "p", "q")
    names = g.basis_names + (p, q)
    table = {k: dict(v) for k, v in g._table.items()}
    g2 = validate(f"{g.name}_xR2", n + 2, names, table)
    omega2 = _block2(t.omega, Matrix.from_rows([[0, 1], [-1, 0]]))
    j2 = _block2(t.j, Matrix.from_rows([[0, -1], [1, 0]]))
    return build_triple(g2, omega2, j2)


def character_extension(t: SymplecticTriple, xi=None) -> SymplecticTriple:
    """Central extension by a character xi of the algebra: two new basis
    vectors c, d with [u, c] = -xi(u) d, omega(c, d) = 1, J c = d.

    Both new directions land in im N (N(u, c) = -xi(Ju) c + xi(u) d), so
    this bumps dim and dim im N by 2 each and keeps the involutivity
    pattern. With xi omitted, the canonical character (first RREF basis
    vector of the annihilator of [g, g]) is used.
    """
    g = t.algebra
    n = g.dim
    if xi is None:
        chars = g.characters()
        if not chars:
            raise PerfectAlgebra(f"{g.name} has no nonzero characters")
        xi = chars[0]
    xi = tuple(qof(x) for x in xi)
    if len(xi) != n:
        raise ValueError("character has wrong length")
    if vec_is_zero(xi):
        raise ZeroCharacter("character must be nonzero")
    for v in g.derived_subalgebra().vectors():
        if sum(a * b for a, b in zip(xi, v)) != 0:
            raise NotACharacter("functional does not vanish on [g, g]")
    c, d = _fresh_pair(g.basis_names, "c", "d")
    names = g.basis_names + (c, d)
    table = {k: {kk: Fraction(vv) for kk, vv in v.items()}
             for k, v in g._table.items()}
    for i in range(n):
        if xi[i] != 0:
            table[(i, n)] = {n + 1: -xi[i]}
    g2 = validate(f"{g.name}_ext", n + 2, names, table)
    omega2 = _block2(t.omega, Matrix.from_rows([[0, 1], [-1, 0]]))
    j2 = _block2(t.j, Matrix.from_rows([[0, -1], [1, 0]]))
    return build_triple(g2, omega2, j2)


def _block2(a: Matrix, b: Matrix) -> Matrix:
    n, m = a.nrows, b.nrows
    z = Fraction(0)
    rows = [list(a.entries[i]) + [z] * m for i in range(n)]
    rows += [[z] * n + list(b.entries[i]) for i in range(m)]
    return Matrix.from_rows(rows)


# -- synthesis ---------------------------------------------------------

_SEEDS = {
    (False, False): ex1,
    (True, True): ex2,
    (False, True): ex3,
    (True, False): ex4,
}


def build_rank_example(n: int, k: int,
                       inv_image: Optional[bool] = None,
                       inv_perp: Optional[bool] = None) -> SymplecticTriple:
    """A triple of dimension 2n with dim im N = 2k and the requested
    involutivity flags for im N and its orthogonal complement.

    Admissible signatures:
      k = 0           : only the trivially-involutive flags (N = 0);
      0 < k < n       : every flag combination (unset flags default True);
      k = n and n >= 3: only the trivially-involutive flags;
      k = n < 3       : nothing (impossible: a nonzero N on dim 2 cannot
                        exist and on dim 4 its image is at most half).
    """
    if n < 1 or k < 0 or k > n:
        raise Unsatisfiable(f"no model with half-dim {n}, half-image {k}")

    def trivial_flags_ok() -> bool:
        return inv_image in (None, True) and inv_perp in (None, True)

    if k == 0:
        if not trivial_flags_ok():
            raise Unsatisfiable(
                "N = 0: the empty image and full complement are involutive")
        return abelian(n)
    if k == n:
        if n < 3:
            raise Unsatisfiable(
                f"im N cannot be all of a {2*n}-dimensional algebra")
        if not trivial_flags_ok():
            raise Unsatisfiable(
                "im N = g is a subalgebra and its complement is zero")
        t = dim6()
        for _ in range(n - 3):
            t = character_extension(t)
        return t
    flags = (True if inv_image is None else bool(inv_image),
             True if inv_perp is None else bool(inv_perp))
    t = _SEEDS[flags]()
    for _ in range(k - 1):
        t = character_extension(t)
    for _ in range(n - k - 1):
        t = product_extension(t)
    return t
