"""Command-line interface.

Every command prints a JSON envelope ``{"config", "result", "diagnostics"}``
(or a plain-text summary with ``--format text``).  Laurent polynomials are
maps from exponent strings to coefficients, highest exponent first; complex
numbers are ``[re, im]`` pairs.

Exit codes: 0 success, 2 parse error, 3 domain or regime error, 4 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import numpy as np

from .braids import BraidParseError, BraidWord, format_braid, parse_braid
from .bracket import (
    SizeCapError,
    bracket_state_sum,
    bracket_tl,
    colored_bracket_bruteforce,
    format_jones,
    jones_polynomial,
    normalized_invariant,
)
from .fibmodel import FIB, fib_braid_rep
from .networks import NetworkError
from .qsim import RegimeError, colored_bracket_plat, hadamard_test, hadamard_trace, three_strand_rep, wrt_invariant
from .recoupling import AdmissibilityError, RecouplingContext, pentagon_hexagon_check
from .scalars import LaurentPoly, Quaternion
from .su2reps import density_probe, fibonacci_b3_quaternions, rotate
from .tl import SingularProjectorError

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_CAP = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _emit({"config": {"argv": sys.argv[1:]}, "result": None,
               "diagnostics": {"error": message, "kind": "usage"}}, "json")
        sys.exit(EXIT_PARSE)


def _cplx(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _matrix(m) -> list:
    return [[_cplx(x) for x in row] for row in np.asarray(m)]


def _poly(p) -> dict:
    return LaurentPoly.coerce(p).to_json()


def _braid(args, strands_required=None) -> BraidWord:
    text = args.word
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    if text is None:
        if args.strands is None:
            raise BraidParseError("no braid word given")
        text = ""  # identity braid
    return parse_braid(text, args.strands if args.strands is not None else strands_required)


# ------------------------------------------------------------------ commands


def cmd_bracket(args):
    b = _braid(args)
    closure = b.check_closure(args.closure)
    if args.method == "state-sum":
        value = bracket_state_sum(b, closure, args.max_crossings)
    else:
        value = bracket_tl(b, closure)
    diag = {}
    if args.method == "both":
        other = bracket_state_sum(b, closure, args.max_crossings)
        diag["engines_agree"] = other == value
    result = {"bracket": _poly(value), "text": LaurentPoly.coerce(value).format()}
    if closure.value == "trace":
        f = normalized_invariant(b)
        result["f"] = _poly(f)
        result["f_text"] = f.format()
    return {"braid": format_braid(b), "closure": closure.value, "method": args.method}, result, diag


def cmd_jones(args):
    b = _braid(args)
    v = jones_polynomial(b)
    return ({"braid": format_braid(b), "exponent_unit": "t^(1/4)"},
            {"jones": v.to_json(), "text": format_jones(v)}, {})


def _model(args):
    if args.fib:
        return FIB
    if args.level is None:
        raise AdmissibilityError("choose --level r or --fib")
    return RecouplingContext(args.level)


def cmd_colored(args):
    b = _braid(args)
    b.check_closure(args.closure)
    model = _model(args)
    A = model.A
    config = {"braid": format_braid(b), "color": args.color, "closure": args.closure,
              "model": "fibonacci" if args.fib else {"level": args.level}, "method": args.method}
    result, diag = {}, {}
    if args.method in ("rep", "both"):
        if args.closure != "plat":
            raise AdmissibilityError("the representation formula needs a plat closure")
        result["value"] = _cplx(colored_bracket_plat(b, args.color, model))
    if args.method in ("bruteforce", "both"):
        result["bruteforce"] = _cplx(colored_bracket_bruteforce(b, args.color, args.closure, A=A, max_size=args.max_size))
    if args.method == "both":
        diag["difference"] = abs(complex(*result["value"]) - complex(*result["bruteforce"]))
    return config, result, diag


def cmd_wrt(args):
    b = _braid(args)
    b.check_closure("plat")
    value = wrt_invariant(b, args.level)
    return {"braid": format_braid(b), "level": args.level, "closure": "plat"}, {"wrt": _cplx(value)}, {}


def cmd_fib_rep(args):
    rep = fib_braid_rep(args.n, args.charge)
    config = {"n": args.n, "charge": args.charge, "word": args.word}
    diag = {"dimension": rep.dim, "unitarity_residual": rep.unitarity_residual(),
            "braid_relation_residual": rep.braid_relation_residual()}
    result = {"basis": [list(s) for s in rep.states]}
    if args.word is not None:
        b = parse_braid(args.word, args.n)
        config["word"] = format_braid(b)
        m = rep.word_image(b)
        result["matrix"] = _matrix(m)
        diag["word_unitarity_residual"] = float(np.max(np.abs(m.conj().T @ m - np.eye(rep.dim)))) if rep.dim else 0.0
    else:
        result["generators"] = [_matrix(g) for g in rep.generators]
    return config, result, diag


def cmd_su2_check(args):
    pair = fibonacci_b3_quaternions()
    rng = np.random.default_rng(args.seed)
    worst = 0.0
    for _ in range(50):
        q = Quaternion(*rng.standard_normal(4)).normalized()
        P = Quaternion.pure(rng.standard_normal(3))
        worst = max(worst, (rotate(q, P) - q * P * q.conj()).norm())
    radii = {str(L): density_probe(pair, L, args.samples, args.seed) for L in sorted(set(args.lengths))}
    return ({"seed": args.seed, "samples": args.samples, "lengths": sorted(set(args.lengths))},
            {"g": list(pair.g.as_tuple()), "h": list(pair.h.as_tuple()), "covering_radius": radii},
            {"braid_residual": pair.braid_residual(), "rotate_residual": worst})


def cmd_recoupling_table(args):
    ctx = RecouplingContext(args.level)
    table = ctx.table(args.max_label)
    diag = {"max_orthogonality_residual": max((m.orthogonality_residual() for m in ctx.all_matrices(args.max_label)), default=0.0)}
    if args.check:
        labels = sorted(set(args.check))
        diag["identities"] = pentagon_hexagon_check(ctx, labels)
    return {"level": args.level, "max_label": args.max_label}, table, diag


def cmd_hadamard(args):
    b = _braid(args, 3)
    A = complex(math.cos(args.theta), math.sin(args.theta))
    rep = three_strand_rep(A)
    U = rep.word_image(b)
    config = {"braid": format_braid(b), "theta": args.theta, "shots": args.shots,
              "seed": args.seed, "part": args.part, "index": args.index, "trace": args.trace}
    if args.trace:
        est, err = hadamard_trace(U, args.shots, args.seed)
        result = {"estimate": _cplx(est), "stderr": err, "exact": _cplx(np.trace(U))}
        return config, result, {}
    if not 0 <= args.index < U.shape[0]:
        raise AdmissibilityError(f"basis index {args.index} out of range")
    psi = np.zeros(U.shape[0])
    psi[args.index] = 1
    h = hadamard_test(U, psi, args.shots, args.part, args.seed)
    return config, h.to_dict(), {}


# ------------------------------------------------------------------ plumbing


def _add_braid_args(p, word_required=True):
    p.add_argument("word", nargs=None if word_required else "?", help="braid word, e.g. '1 -2 1' or 'n=4 1 2'")
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--file", default=None, help="read the braid word from a file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qknots", description="Knot invariants and their quantum evaluation.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bracket", help="bracket polynomial and normalized invariant")
    _add_braid_args(p, word_required=False)
    p.add_argument("--closure", choices=("trace", "plat"), default="trace")
    p.add_argument("--method", choices=("tl", "state-sum", "both"), default="tl")
    p.add_argument("--max-crossings", type=int, default=24)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("jones", help="Jones polynomial of the trace closure")
    _add_braid_args(p, word_required=False)
    p.set_defaults(func=cmd_jones)

    p = sub.add_parser("colored", help="colored bracket of a closure")
    _add_braid_args(p, word_required=False)
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--closure", choices=("trace", "plat"), default="plat")
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--fib", action="store_true", help="use the Fibonacci model")
    p.add_argument("--method", choices=("rep", "bruteforce", "both"), default="rep")
    p.add_argument("--max-size", type=int, default=8, help="cap on cabled strand count")
    p.set_defaults(func=cmd_colored)

    p = sub.add_parser("wrt", help="unnormalized WRT sum of a plat closure")
    _add_braid_args(p, word_required=False)
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_wrt)

    p = sub.add_parser("fib-rep", help="Fibonacci braid group representation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", default=None)
    p.add_argument("--charge", type=int, choices=(0, 1), default=0)
    p.set_defaults(func=cmd_fib_rep)

    p = sub.add_parser("su2-check", help="quaternionic Fibonacci pair diagnostics")
    p.add_argument("--lengths", type=int, nargs="+", default=[2, 4, 6, 8])
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_su2_check)

    p = sub.add_parser("recoupling-table", help="theta, tet and recoupling matrices at level r")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--max-label", type=int, default=None)
    p.add_argument("--check", type=int, nargs="*", default=None, help="labels for the pentagon/hexagon check")
    p.set_defaults(func=cmd_recoupling_table)

    p = sub.add_parser("hadamard", help="Hadamard test on the three-strand representation")
    p.add_argument("--word", required=True)
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--theta", type=float, required=True, help="A = exp(i theta)")
    p.add_argument("--shots", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--part", choices=("re", "im"), default="re")
    p.add_argument("--index", type=int, default=0, help="basis vector for the diagonal element")
    p.add_argument("--trace", action="store_true", help="estimate the full trace")
    p.set_defaults(func=cmd_hadamard)
    return parser


def _text(doc) -> str:
    lines = []
    for section in ("config", "result", "diagnostics"):
        body = doc.get(section)
        if body in (None, {}):
            continue
        lines.append(f"[{section}]")
        if isinstance(body, dict):
            for k, v in body.items():
                lines.append(f"{k}: {json.dumps(v) if not isinstance(v, str) else v}")
        else:
            lines.append(json.dumps(body))
    return "\n".join(lines)


def _emit(doc, fmt: str) -> None:
    if fmt == "text":
        print(_text(doc))
    else:
        print(json.dumps(doc, indent=2, ensure_ascii=False))


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config, result, diag = args.func(args)
    except BraidParseError as exc:
        return _fail(args, exc, "parse", EXIT_PARSE, position=exc.position)
    except (SizeCapError, NetworkError) as exc:
        return _fail(args, exc, "resource", EXIT_CAP)
    except (RegimeError, AdmissibilityError, SingularProjectorError, ValueError, OSError) as exc:
        return _fail(args, exc, "domain", EXIT_DOMAIN)
    config = {"command": args.command, **config}
    _emit({"config": config, "result": result, "diagnostics": diag}, args.format)
    return EXIT_OK


def _fail(args, exc, kind, code, position=None) -> int:
    diag = {"error": str(exc), "kind": kind}
    if position is not None:
        diag["position"] = position
    _emit({"config": {"command": args.command}, "result": None, "diagnostics": diag}, args.format)
    print(f"qknots: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
