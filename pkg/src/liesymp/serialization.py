"""JSON schemas and exact round-tripping.

Every number is serialized as the string str(Fraction) produces ("3",
"-1/2") and parsed back through Fraction. Floats are rejected at the
JSON layer (parse_float hook) and at the coercion layer, so a rounding
artifact cannot enter silently from any direction.

Algebra payload:
    {"name": str, "dim": int, "basis": [str, ...],
     "brackets": [{"i": int, "j": int, "coeffs": {"k": "p/q", ...}}, ...]}
with 0-based indices and i < j (the antisymmetric partner is implied).

Triple payload: the algebra fields plus row-major "omega" and "J"
matrices of rational strings.

`triple_hash` is the sha256 of the canonical (sorted-key, no-whitespace)
triple JSON; it identifies inputs in reports.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any

from .errors import SerializationError
from .lie import LieAlgebra, validate
from .linalg import Matrix, qof
from .symp import SymplecticTriple, build_triple


def _num(x: Any) -> Fraction:
    try:
        return qof(x)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise SerializationError(f"bad rational value {x!r}: {e}") from None


def _refuse_float(s: str) -> None:
    raise SerializationError(
        f"float literal {s!r} in input; use rational strings like \"1/3\"")


def loads_json(text: str) -> Any:
    try:
        return json.loads(text, parse_float=_refuse_float,
                          parse_constant=_refuse_float)
    except json.JSONDecodeError as e:
        raise SerializationError(
            f"JSON parse error at line {e.lineno}, column {e.colno}: "
            f"{e.msg}") from None


def load_json_file(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return loads_json(fh.read())
    except OSError as e:
        raise SerializationError(f"cannot read {path}: {e}") from None


def matrix_to_rows(m: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.entries]


def matrix_from_rows(rows: Any, what: str) -> Matrix:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SerializationError(f"{what} must be a list of rows")
    return Matrix.from_rows([[_num(x) for x in row] for row in rows])


def algebra_to_dict(g: LieAlgebra) -> dict:
    brackets = []
    for (i, j), coeffs in sorted(g._table.items()):
        brackets.append({
            "i": i, "j": j,
            "coeffs": {str(k): str(v) for k, v in sorted(coeffs.items())},
        })
    return {"name": g.name, "dim": g.dim, "basis": list(g.basis_names),
            "brackets": brackets}


def _field(d: dict, key: str) -> Any:
    if key not in d:
        raise SerializationError(f"missing field {key!r}")
    return d[key]


def algebra_from_dict(d: dict) -> LieAlgebra:
    if not isinstance(d, dict):
        raise SerializationError("algebra payload must be an object")
    name = _field(d, "name")
    dim = _field(d, "dim")
    basis = _field(d, "basis")
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise SerializationError("dim must be an integer")
    if not isinstance(basis, list) or not all(isinstance(x, str) for x in basis):
        raise SerializationError("basis must be a list of names")
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for ent in _field(d, "brackets"):
        if not isinstance(ent, dict):
            raise SerializationError("each bracket must be an object")
        i, j = _field(ent, "i"), _field(ent, "j")
        if not isinstance(i, int) or not isinstance(j, int):
            raise SerializationError("bracket indices must be integers")
        coeffs = {}
        for k, v in _field(ent, "coeffs").items():
            try:
                ki = int(k)
            except ValueError:
                raise SerializationError(
                    f"bracket coefficient key {k!r} is not an index") from None
            coeffs[ki] = _num(v)
        key = (i, j)
        if key in table:
            raise SerializationError(f"duplicate bracket entry ({i}, {j})")
        table[key] = coeffs
    return validate(name, dim, basis, table)


def triple_to_dict(t: SymplecticTriple) -> dict:
    d = algebra_to_dict(t.algebra)
    d["omega"] = matrix_to_rows(t.omega)
    d["J"] = matrix_to_rows(t.j)
    return d


def triple_from_dict(d: dict) -> SymplecticTriple:
    g = algebra_from_dict(d)
    omega = matrix_from_rows(_field(d, "omega"), "omega")
    j = matrix_from_rows(_field(d, "J"), "J")
    return build_triple(g, omega, j)


def is_triple_payload(d: Any) -> bool:
    return isinstance(d, dict) and "omega" in d


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def pretty_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def triple_hash(t: SymplecticTriple) -> str:
    return hashlib.sha256(
        canonical_json(triple_to_dict(t)).encode("utf-8")).hexdigest()
