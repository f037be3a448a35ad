"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a counterexample, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .arith import Coord, Poly, poly_from_json, poly_to_json, shift_coordinates
from .automorphism import Automorphism, act_on_poly, in_E_k
from .graded import basis, dim_gr
from .ideal import is_in_ideal, normal_form, weight
from .suites import DEFAULT_SEED, SUITES, run_suite
from .words import char_abelian, char_abelian_shifted, parse_word


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _read_poly(path: str) -> Poly:
    try:
        raw = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return poly_from_json(json.loads(raw))
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON in {path}: {exc.msg} at position {exc.pos}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad polynomial in {path}: {exc}") from None


def _parse_matrix(text: str) -> Automorphism:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad --matrix: {exc.msg} at position {exc.pos}") from None
    try:
        return Automorphism(tuple(tuple(r) for r in rows))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad --matrix: {exc}") from None


def _weight_json(w):
    return "inf" if w == float("inf") else int(w)


def cmd_char(args) -> int:
    try:
        w = parse_word(args.word, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    p = char_abelian_shifted(w) if args.shifted else char_abelian(w)
    if args.normalize:
        p = normal_form(shift_coordinates(p, Coord.TPRIME)).poly
    _emit(args, str(p), poly_to_json(p))
    return 0


def cmd_normalform(args) -> int:
    nf = normal_form(shift_coordinates(_read_poly(args.input), Coord.TPRIME))
    _emit(args, str(nf.poly), poly_to_json(nf.poly))
    return 0


def cmd_weight(args) -> int:
    w = weight(_read_poly(args.input))
    _emit(args, str(_weight_json(w)), {"schema": 1, "weight": _weight_json(w)})
    return 0


def cmd_member(args) -> int:
    member = is_in_ideal(_read_poly(args.input))
    _emit(args, str(member).lower(), {"schema": 1, "member": member})
    return 0


def cmd_basis(args) -> int:
    elems = basis(args.n, args.k)
    names = [str(b) for b in elems]
    payload = {"schema": 1, "n": args.n, "k": args.k,
               "basis": [{"pairs": [list(p) for p in b.pairs], "singles": list(b.singles)}
                         for b in elems]}
    _emit(args, "\n".join(f"{i:4d}  {name}" for i, name in enumerate(names)), payload)
    return 0


def cmd_dim(args) -> int:
    d = dim_gr(args.n, args.k)
    _emit(args, str(d), {"schema": 1, "n": args.n, "k": args.k, "dim": d,
                         "enumerated": len(basis(args.n, args.k))})
    return 0


def cmd_verify(args) -> int:
    options = {"order": args.order}
    if args.n is not None:
        options["n"] = args.n
    report = run_suite(args.suite, seed=args.seed, trials=args.trials, **options)
    lines = [f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}" for c in report["checks"]]
    lines.append(f"suite {args.suite}: {'passed' if report['passed'] else 'FAILED'}")
    _emit(args, "\n".join(lines), report)
    return 0 if report["passed"] else 1


def cmd_act(args) -> int:
    sigma = _parse_matrix(args.matrix)
    p = _read_poly(args.input)
    try:
        image = act_on_poly(sigma, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.normalize:
        image = normal_form(image).poly
    _emit(args, str(image), poly_to_json(image))
    return 0


def cmd_ek(args) -> int:
    sigma = _parse_matrix(args.matrix)
    result = in_E_k(sigma, args.k)
    _emit(args, str(result).lower(), {"schema": 1, "k": args.k, "in_E_k": result})
    return 0


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fricke", description="Exact computations in rings of Fricke characters of Z^n.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", parents=[common], help="trace polynomial of a word")
    p.add_argument("word", help="e.g. 'x1^3*x2^-2' or '[3,-2,0]'")
    p.add_argument("--n", type=_positive, help="ambient rank (default: inferred)")
    p.add_argument("--shifted", action="store_true", help="output tr' in t' coordinates")
    p.add_argument("--normalize", action="store_true", help="reduce to the normal form")
    p.set_defaults(func=cmd_char)

    for name, func, help_ in (("normalform", cmd_normalform, "normal form modulo I"),
                              ("weight", cmd_weight, "weight of a polynomial"),
                              ("member", cmd_member, "membership in I")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--input", default="-", help="polynomial JSON file ('-' for stdin)")
        p.set_defaults(func=func)

    for name, func, help_ in (("basis", cmd_basis, "basis of gr^k(J)"),
                              ("dim", cmd_dim, "dimension of gr^k(J)")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--n", type=_positive, required=True)
        p.add_argument("--k", type=_positive, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--order", type=_positive, default=6, help="series truncation order")
    p.add_argument("--n", type=_positive, default=None, help="largest rank to test")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("act", parents=[common], help="apply an automorphism to a polynomial")
    p.add_argument("--matrix", required=True, help="integer matrix, e.g. '[[1,1],[0,1]]'")
    p.add_argument("--input", default="-")
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("ek", parents=[common], help="test membership in E_H(k)")
    p.add_argument("--matrix", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.set_defaults(func=cmd_ek)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fricke {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
