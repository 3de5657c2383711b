"""Command line front end.

Exit codes: 0 all checks pass, 1 usage error, 2 validation failure
(including malformed input files), 3 golden or property failure.

All numeric output is exact rational text. Reports are deterministic:
identical inputs give byte-identical JSON (timings only appear under
--timings, which deliberately breaks that guarantee for that run).
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional

from . import catalog
from .errors import LiesympError, SerializationError, ValidationError
from .linalg import qof
from .nspace import expected_dimension, nijenhuis_space_dim
from .report import build_report, render_text, run_goldens
from .serialization import (algebra_from_dict, is_triple_payload,
                            load_json_file, pretty_json, triple_from_dict,
                            triple_to_dict)
from .symp import SymplecticTriple
from .twistor import twistor_claims

_DESCRIPTIONS = {
    "ex1": "dim 4, nilpotent, neither distribution involutive",
    "ex2": "dim 4, nilpotent, both distributions involutive",
    "ex3": "dim 4, solvable, only the complement involutive",
    "ex4": "dim 4, not nilpotent, only the image involutive",
    "dim6": "dim 6, nilpotent, im N is the whole algebra",
    "thurston(a)": "dim 4 family, |N|^2 = 8a (a > 0 rational)",
    "abelian(n)": "dim 2n abelian, Kaehler (N = 0)",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad usage; our contract reserves 2
    # for validation failures, so route usage problems to exit code 1.
    def error(self, message):
        raise _UsageError(message)


def _load_triple(target: str, alpha=None) -> tuple[SymplecticTriple, str]:
    """File path or builtin name -> (triple, display name)."""
    if os.path.exists(target):
        payload = load_json_file(target)
        if not is_triple_payload(payload):
            raise SerializationError(
                f"{target} is not a triple payload (no \"omega\" field)")
        t = triple_from_dict(payload)
        return t, payload.get("name", os.path.basename(target))
    t = catalog.builtin(target, alpha=alpha)
    return t, t.algebra.name


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _cmd_validate(args) -> int:
    payload = load_json_file(args.path)
    kind = args.kind
    if kind == "auto":
        kind = "triple" if is_triple_payload(payload) else "algebra"
    if kind == "triple":
        t = triple_from_dict(payload)
        name, dim = t.algebra.name, t.dim
    else:
        g = algebra_from_dict(payload)
        name, dim = g.name, g.dim
    print(f"OK: valid {kind} '{name}' (dim {dim})")
    return 0


def _cmd_analyze(args) -> int:
    t, name = _load_triple(args.target, alpha=args.alpha)
    rep = build_report(t, name=name, full=args.full, timings=args.timings)
    if args.report == "text":
        _emit(render_text(rep), args.output)
    else:
        _emit(pretty_json(rep), args.output)
    return 0


def _cmd_goldens(args) -> int:
    t0 = time.monotonic()
    lines, ok = run_goldens(filter_substr=args.filter)
    print("\n".join(lines))
    if args.timings:
        print(f"elapsed: {int((time.monotonic() - t0) * 1000)} ms")
    return 0 if ok else 3


def _cmd_examples(args) -> int:
    # two spellings: `examples [--name X]` and `examples list|show X`
    name = args.name
    if args.action == "show":
        if not args.pos_name:
            raise _UsageError("examples show needs an entry name")
        name = args.pos_name
    elif args.action == "list":
        name = None
    elif args.action is not None:
        raise _UsageError(f"unknown examples action {args.action!r}")
    if not name:
        for entry, desc in _DESCRIPTIONS.items():
            print(f"{entry:14} {desc}")
        return 0
    t, name = _load_triple(name, alpha=None)
    _emit(pretty_json(triple_to_dict(t)), args.output)
    return 0


def _cmd_construct(args) -> int:
    kind = args.kind or args.op
    target = args.target or args.base
    if kind is None or target is None:
        raise _UsageError("construct needs an operation (product|character) "
                          "and a base triple (file or catalog name)")
    t, _ = _load_triple(target, alpha=None)
    if kind == "product":
        t2 = catalog.product_extension(t)
    else:
        xi = None
        if args.xi:
            xi = [qof(tok.strip()) for tok in args.xi.split(",")]
        t2 = catalog.character_extension(t, xi)
    _emit(pretty_json(triple_to_dict(t2)), args.output)
    return 0


def _parse_flag(v: Optional[str]) -> Optional[bool]:
    if v is None:
        return None
    return {"true": True, "false": False, "y": True, "n": False}[v]


def _cmd_synthesize(args) -> int:
    inv_image = args.image_involutive if args.image_involutive is not None \
        else args.inv_image
    inv_perp = args.perp_involutive if args.perp_involutive is not None \
        else args.inv_perp
    t = catalog.build_rank_example(args.n, args.k,
                                   _parse_flag(inv_image),
                                   _parse_flag(inv_perp))
    _emit(pretty_json(triple_to_dict(t)), args.output)
    return 0


def _parse_ns(spec: str) -> list[int]:
    return [int(tok) for tok in spec.split(",") if tok.strip()]


def _cmd_nspace_dim(args) -> int:
    ok = True
    t0 = time.monotonic()
    for n in _parse_ns(args.n):
        got = nijenhuis_space_dim(n)
        want = expected_dimension(n)
        match = got == want
        ok = ok and match
        print(f"n={n}: nullity={got} formula={want} "
              f"{'MATCH' if match else 'MISMATCH'}")
    if args.timings:
        print(f"elapsed: {int((time.monotonic() - t0) * 1000)} ms")
    return 0 if ok else 3


def _cmd_twistor(args) -> int:
    ok = True
    t0 = time.monotonic()
    payloads = []
    for n in _parse_ns(args.n):
        c = twistor_claims(n)
        checks = [
            ("+", "plus structure integrable", c.plus_integrable),
            ("-", "minus image = q+p" if n >= 2 else "minus image = 0",
             c.minus_image_dim == (c.m_dim if n >= 2 else 0)),
            ("-", "p x p values fill q", c.p_pairs_fill_q),
            ("+", "orbit form J+ invariant", c.kks_invariant_plus),
            ("-", "orbit form J- invariant", c.kks_invariant_minus),
            ("-", "minus metric positive definite", c.minus_positive),
            ("+", "plus form not positive", not c.plus_positive),
        ]
        if args.sign:
            checks = [row for row in checks if row[0] == args.sign]
        if args.report == "json":
            witness = None
            if c.plus_witness:
                witness = [c.plus_witness[0], str(c.plus_witness[1])]
            payloads.append({
                "n": n,
                "dim": n * (2 * n + 1),
                "m_dim": c.m_dim,
                "plus_integrable": c.plus_integrable,
                "minus_image_dim": c.minus_image_dim,
                "p_pairs_fill_q": c.p_pairs_fill_q,
                "kks_invariant_plus": c.kks_invariant_plus,
                "kks_invariant_minus": c.kks_invariant_minus,
                "minus_positive": c.minus_positive,
                "plus_positive": c.plus_positive,
                "plus_witness": witness,
                "checks_pass": all(good for _, _, good in checks),
            })
        for _, label, good in checks:
            ok = ok and good
            if args.report != "json":
                print(f"{'PASS' if good else 'FAIL'}  "
                      f"twistor(n={n}) :: {label}")
        if args.report != "json" and c.plus_witness and args.sign != "-":
            nm, val = c.plus_witness
            print(f"      non-positivity witness: "
                  f"form({nm}, {nm}) = {val}")
    if args.report == "json":
        print(pretty_json(payloads))
    if args.timings:
        print(f"elapsed: {int((time.monotonic() - t0) * 1000)} ms")
    return 0 if ok else 3


def _build_parser() -> _Parser:
    p = _Parser(prog="liesymp",
                description="Exact analysis of invariant compatible almost "
                            "complex structures on symplectic Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--timings", action="store_true",
                        help="append wall-clock timings (breaks "
                             "byte-identical output)")

    sp = sub.add_parser("validate", help="validate an algebra or triple file")
    sp.add_argument("path")
    sp.add_argument("--kind", choices=("auto", "algebra", "triple"),
                    default="auto")

    sp = sub.add_parser("analyze",
                        help="full report for a triple file or builtin name")
    sp.add_argument("target", help="path to a triple JSON or a catalog name")
    sp.add_argument("--alpha", default=None,
                    help="parameter for the parametric family")
    sp.add_argument("--report", choices=("json", "text"), default="json")
    sp.add_argument("--full", action="store_true",
                    help="include raw tensor values")
    sp.add_argument("-o", "--output", default=None)
    common(sp)

    sp = sub.add_parser("goldens", help="replay all frozen catalog claims")
    sp.add_argument("--filter", default=None,
                    help="only claims whose entry name contains this")
    common(sp)

    sp = sub.add_parser("examples", help="list catalog entries or dump one")
    sp.add_argument("action", nargs="?", default=None,
                    help="'list' or 'show <name>'")
    sp.add_argument("pos_name", nargs="?", default=None)
    sp.add_argument("--name", default=None)
    sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("construct",
                        help="apply a construction to a triple")
    sp.add_argument("kind", nargs="?", choices=("product", "character"),
                    default=None)
    sp.add_argument("target", nargs="?", default=None)
    sp.add_argument("--op", choices=("product", "character"), default=None,
                    help="alternative spelling of the operation")
    sp.add_argument("--base", default=None,
                    help="alternative spelling of the base triple")
    sp.add_argument("--xi", default=None,
                    help="comma separated rational coefficients of the "
                         "character (character construction only)")
    sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("synthesize",
                        help="build a triple with prescribed invariants")
    sp.add_argument("--n", type=int, required=True,
                    help="half the dimension")
    sp.add_argument("--k", type=int, required=True,
                    help="half the image dimension")
    sp.add_argument("--image-involutive", choices=("true", "false"),
                    default=None)
    sp.add_argument("--perp-involutive", choices=("true", "false"),
                    default=None)
    sp.add_argument("--inv-image", choices=("y", "n"), default=None,
                    help="short spelling of --image-involutive")
    sp.add_argument("--inv-perp", choices=("y", "n"), default=None,
                    help="short spelling of --perp-involutive")
    sp.add_argument("-o", "--output", default=None)

    sp = sub.add_parser("nspace-dim",
                        help="corank of the tensor-identity constraint "
                             "system vs the closed form")
    sp.add_argument("--n", default="1,2,3,4,5",
                    help="comma separated list of n values")
    common(sp)

    sp = sub.add_parser("twistor", help="verify the twistor model claims")
    sp.add_argument("--n", default="1,2,3",
                    help="comma separated list of n values")
    sp.add_argument("--sign", choices=("+", "-"), default=None,
                    help="restrict to the claims of one structure")
    sp.add_argument("--report", choices=("json", "text"), default="text")
    common(sp)
    return p


_HANDLERS = {
    "validate": _cmd_validate,
    "analyze": _cmd_analyze,
    "goldens": _cmd_goldens,
    "examples": _cmd_examples,
    "construct": _cmd_construct,
    "synthesize": _cmd_synthesize,
    "nspace-dim": _cmd_nspace_dim,
    "twistor": _cmd_twistor,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except (ValidationError, SerializationError) as e:
        print(f"INVALID ({type(e).__name__}): {e}", file=sys.stderr)
        return 2
    except KeyError as e:
        # unknown catalog name and similar lookup misses are usage errors
        print(f"usage error: {e.args[0] if e.args else e}", file=sys.stderr)
        return 1
    except LiesympError as e:
        print(f"ERROR ({type(e).__name__}): {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
