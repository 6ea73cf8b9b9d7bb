"""Command-line front end.

Exit codes: 0 success or affirmative answer, 1 well-posed negative answer,
2 usage or input error. Matrices are read and written in the plain-text
format of :mod:`detdio.matrix`; ``-`` reads a matrix from stdin. Diagnostic
lines on stdout start with ``#``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import __version__
from .divisor import greatest_divisor_ltf, greatest_divisor_minors
from .errors import DetdioError, InternalError, RankDeficient, Unsolvable
from .linearform import complete_to_form, solve_linear
from .ltf import is_ltf, ltf_reduce
from .matrix import IntMat, determinant, determinant_cofactor, format_matrix, parse_matrix
from .solver import EquationInstance, Orientation, is_solvable, solve, verify_solution
from .unimodular import AddMultiple, ElementaryOp, Negate, Swap, is_unimodular

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _read_matrix(path: str) -> IntMat:
    if path == "-":
        return parse_matrix(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_matrix(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise UsageError(f"expected whitespace-separated integers, got {text!r}") from None


def _json_matrix(m: IntMat) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.rows]


def format_op(op: ElementaryOp) -> str:
    if isinstance(op, Negate):
        return f"op kind=negate args={op.col}"
    if isinstance(op, AddMultiple):
        return f"op kind=addmul args={op.dest},{op.src},{op.factor}"
    if isinstance(op, Swap):
        return f"op kind=swap args={op.a},{op.b}"
    raise TypeError(op)


def _normalize_d(d: int, out: TextIO) -> int:
    if d < 0:
        out.write(f"# note: d = {d} normalized to {-d}\n")
        return -d
    return d


def cmd_det(args, out):
    m = _read_matrix(args.matrix)
    value = determinant_cofactor(m) if args.method == "cofactor" else determinant(m)
    if args.json:
        json.dump({"det": str(value)}, out)
        out.write("\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_ltf(args, out):
    m = _read_matrix(args.matrix)
    try:
        dec = ltf_reduce(m)
    except RankDeficient as exc:
        out.write(f"# not full row rank: {exc}\n")
        return EXIT_NO
    for path, mat in ((args.emit_transform, dec.transform.forward), (args.emit_inverse, dec.transform.inverse)):
        if path:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(format_matrix(mat))
    if args.json:
        payload = {"ltf": _json_matrix(dec.ltf), "transform": _json_matrix(dec.transform.forward)}
        if args.trace:
            payload["trace"] = [format_op(op) for op in dec.ops]
        json.dump(payload, out)
        out.write("\n")
        return EXIT_OK
    if args.trace:
        for op in dec.ops:
            out.write(f"# {format_op(op)}\n")
    out.write(format_matrix(dec.ltf))
    return EXIT_OK


def cmd_gd(args, out):
    m = _read_matrix(args.matrix)
    try:
        values = {}
        if args.method in ("ltf", "both"):
            values["ltf"] = greatest_divisor_ltf(m)
        if args.method in ("minors", "both"):
            values["minors"] = greatest_divisor_minors(m)
    except RankDeficient:
        out.write("# greatest divisor undefined: matrix is not of full row rank\n")
        return EXIT_NO
    agree = len(set(values.values())) == 1
    if args.json:
        json.dump({k: str(v) for k, v in values.items()}, out)
        out.write("\n")
    elif args.method == "both":
        for k, v in values.items():
            out.write(f"{k}: {v}\n")
        if not agree:
            out.write("# mismatch between ltf and minors\n")
    else:
        out.write(f"{values[args.method]}\n")
    return EXIT_OK if agree else EXIT_NO


def _instance(args, out) -> EquationInstance:
    known = _read_matrix(args.matrix)
    cols = getattr(args, "cols", None)
    if known.nrows == 0 and cols is not None:
        known = IntMat.zeros(0, cols)
    orientation = Orientation(getattr(args, "orientation", "top"))
    return EquationInstance(known, _normalize_d(args.d, out), orientation)


def cmd_solvable(args, out):
    inst = _instance(args, out)
    ok = is_solvable(inst)
    out.write("solvable\n" if ok else "unsolvable\n")
    return EXIT_OK if ok else EXIT_NO


def cmd_solve(args, out):
    inst = _instance(args, out)
    try:
        x = solve(inst)
    except Unsolvable as exc:
        out.write(f"# unsolvable: {exc}\n")
        return EXIT_NO
    value = determinant(inst.assemble(x))
    if args.json:
        json.dump({"unknown": _json_matrix(x), "det": str(value)}, out)
        out.write("\n")
    else:
        out.write(format_matrix(x))
        out.write(f"# det = {value}\n")
    return EXIT_OK


def cmd_complete(args, out):
    a = complete_to_form(_parse_ints(args.a)).matrix
    if args.json:
        json.dump({"matrix": _json_matrix(a)}, out)
        out.write("\n")
    else:
        out.write(format_matrix(a))
    return EXIT_OK


def cmd_solve_linear(args, out):
    try:
        x = solve_linear(_parse_ints(args.a), args.d)
    except Unsolvable as exc:
        out.write(f"# {exc}\n")
        return EXIT_NO
    if args.json:
        json.dump({"x": [str(v) for v in x]}, out)
        out.write("\n")
    else:
        out.write(" ".join(map(str, x)) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    first = _read_matrix(args.first)
    second = _read_matrix(args.second)
    if args.d is not None:
        if args.third:
            raise UsageError("a third matrix cannot be combined with -d")
        inst = _instance(argparse.Namespace(matrix=args.first, d=args.d, orientation=args.orientation, cols=second.ncols), out)
        ok = verify_solution(inst, second)
    else:
        if first.ncols != second.nrows:
            raise UsageError(f"cannot multiply {first.nrows}x{first.ncols} by {second.nrows}x{second.ncols}")
        product = first @ second
        ok = is_unimodular(second)
        if not ok:
            out.write("# transform is not unimodular\n")
        if args.third:
            expected = _read_matrix(args.third)
            if product != expected:
                out.write("# product differs from expected matrix\n")
                ok = False
        elif not is_ltf(product):
            out.write("# product is not in lower triangular form\n")
            ok = False
    out.write("PASS\n" if ok else "FAIL\n")
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detdio",
        description="Exact integer-matrix tools for det([A; X]) = +-d.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="wrap numeric output as JSON decimal strings")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("det", help="exact determinant of a square matrix")
    p.add_argument("matrix")
    p.add_argument("--method", choices=["bareiss", "cofactor"], default="bareiss")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("ltf", help="reduce to lower triangular form by column operations")
    p.add_argument("matrix")
    p.add_argument("--emit-transform", metavar="FILE")
    p.add_argument("--emit-inverse", metavar="FILE")
    p.add_argument("--trace", action="store_true", help="print each elementary operation")
    p.set_defaults(func=cmd_ltf)

    p = sub.add_parser("gd", help="greatest divisor (gcd of maximal minors)")
    p.add_argument("matrix")
    p.add_argument("--method", choices=["ltf", "minors", "both"], default="ltf")
    p.set_defaults(func=cmd_gd)

    p = sub.add_parser("solvable", help="decide whether det([A; X]) = +-d has a solution")
    p.add_argument("matrix")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--cols", type=int, help="column count when the known block is empty")
    p.set_defaults(func=cmd_solvable)

    p = sub.add_parser("solve", help="construct X with det([A; X]) = d")
    p.add_argument("matrix")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--orientation", choices=["top", "bottom"], default="top")
    p.add_argument("--cols", type=int, help="column count when the known block is empty")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("complete", help="matrix A with det([A; x]) equal to the linear form")
    p.add_argument("-a", required=True, help='coefficients, e.g. "3 5"')
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("solve-linear", help="solve a1*x1 + ... + an*xn = d")
    p.add_argument("-a", required=True, help='coefficients, e.g. "6 10 15"')
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_solve_linear)

    p = sub.add_parser(
        "verify",
        help="check M @ U (== L, or in LTF), or with -d check a solution block",
    )
    p.add_argument("first", help="M, or the known block A with -d")
    p.add_argument("second", help="U, or the solution block X with -d")
    p.add_argument("third", nargs="?", help="expected product L")
    p.add_argument("-d", type=int)
    p.add_argument("--orientation", choices=["top", "bottom"], default="top")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except InternalError:
        raise
    except (UsageError, DetdioError, ValueError) as exc:
        sys.stderr.write(f"detdio {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
