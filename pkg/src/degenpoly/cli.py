"""Command-line front end: ``degenpoly {eval,table,verify,padic}``.

Exit codes: 0 success / all identities pass, 1 some identity failed,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import formats
from .bernstein import bernstein, bernstein2
from .core import MPoly
from .degenerate import euler_polynomial, falling_factorial, higher_order_euler
from .expr import parse_binding, parse_poly
from .identities import DomainError, UnknownIdentity, lookup, verify_all
from .padic import (
    PadicContext,
    PadicDomainError,
    double_integral_check,
    euler_integral_check,
    eval_poly,
    functional_equation_check,
    valuation,
)

FAMILIES = ("euler", "euler-higher", "bernstein", "bernstein2", "fallfact")


class UsageError(Exception):
    pass


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for family {args.family}")
        if getattr(args, name) < 0:
            raise UsageError(f"--{name} must be >= 0")


def build_family(args, n=None) -> MPoly:
    family = args.family
    n = args.n if n is None else n
    if family == "euler":
        return euler_polynomial(n, parse_poly(args.arg))
    if family == "euler-higher":
        if args.k is None or args.k < 1:
            raise UsageError("euler-higher needs --k >= 1")
        return higher_order_euler(args.k, n, parse_poly(args.arg))
    if family == "fallfact":
        if args.sign not in (1, -1):
            raise UsageError("--sign must be 1 or -1")
        return falling_factorial(parse_poly(args.arg), n, args.sign)
    if args.k is None or args.k < 0:
        raise UsageError(f"{family} needs --k >= 0")
    if family == "bernstein":
        return bernstein(args.k, n).value
    return bernstein2(args.k, n).value


def _bindings(args) -> dict:
    out = {}
    for text in args.set or ():
        try:
            name, value = parse_binding(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out[name] = value
    return out


def _indices(args, n) -> dict:
    idx = {}
    if args.family in ("euler-higher", "bernstein", "bernstein2"):
        idx["k"] = args.k
    idx["n"] = n
    return idx


def cmd_eval(args) -> int:
    _require(args, "n")
    poly = build_family(args)
    bindings = _bindings(args)
    if bindings:
        poly = poly.substitute(bindings)
    if args.format == "json":
        doc = {
            "family": args.family,
            "indices": _indices(args, args.n),
            "substitutions": {k: str(v) for k, v in bindings.items()},
            "polynomial": formats.poly_to_json(poly),
        }
        sys.stdout.write(formats.dumps(doc))
    elif args.format == "csv":
        sys.stdout.write(formats.poly_csv(poly))
    else:
        sys.stdout.write(formats.latex_poly(poly) + "\n")
    return 0


def cmd_table(args) -> int:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    bindings = _bindings(args)
    entries = []
    for n in range(args.nmax + 1):
        poly = build_family(args, n)
        if bindings:
            poly = poly.substitute(bindings)
        entries.append((_indices(args, n), poly))
    if args.format == "json":
        doc = {
            "family": args.family,
            "substitutions": {k: str(v) for k, v in bindings.items()},
            "rows": [{"indices": idx, "polynomial": formats.poly_to_json(p)} for idx, p in entries],
        }
        sys.stdout.write(formats.dumps(doc))
        return 0
    keys = list(entries[0][0]) if entries else ["n"]
    if args.format == "csv":
        rows = [[*map(str, idx.values()), str(p)] for idx, p in entries]
        sys.stdout.write(formats.csv_text([*keys, "polynomial"], rows))
    else:
        rows = [[*map(str, idx.values()), f"${formats.latex_poly(p)}$"] for idx, p in entries]
        sys.stdout.write(formats.latex_table([*keys, "polynomial"], rows))
    return 0


def cmd_verify(args) -> int:
    ids = None if args.all or not args.id else args.id
    if ids:
        for case_id in ids:
            lookup(case_id)
    kmax = args.kmax if args.kmax is not None else args.nmax
    reports = verify_all(args.nmax, kmax, ids=ids, workers=args.threads)
    if args.format == "json":
        sys.stdout.write(formats.reports_json(reports, args.nmax, kmax, args.timings))
    elif args.format == "csv":
        sys.stdout.write(formats.reports_csv(reports, args.timings))
    else:
        sys.stdout.write(formats.reports_latex(reports, args.timings))
    failed = [r for r in reports if r.verdict == "fail"]
    for r in failed:
        print(f"FAIL {r.id} {r.params_text()}: {r.residual}", file=sys.stderr)
    return 1 if failed else 0


def _functional_eq_doc(args):
    f = parse_poly(args.f, t_as="x")
    if set(f.variables()) - {"x"}:
        raise UsageError("--f must be a polynomial in t only")
    ctx = PadicContext(args.p, args.Nmax)
    parts = f.collect("x")
    coeffs = [parts[m].constant_value() if m in parts else Fraction(0) for m in range(max(parts, default=0) + 1)]
    f0 = eval_poly(coeffs, 0)
    rows = []
    for N in ctx.levels():
        lhs, rhs = functional_equation_check(coeffs, ctx.p, N)
        rows.append({
            "N": N,
            "lhs": formats.rational_str(lhs),
            "rhs": formats.rational_str(rhs),
            "equal": lhs == rhs,
            "valuation": formats.valuation_str(valuation(rhs - 2 * f0, ctx.p)),
        })
    return {"check": "functional-eq", "p": ctx.p, "params": {"f": args.f}, "rows": rows}


def cmd_padic(args) -> int:
    if args.check == "functional-eq":
        if args.f is None:
            raise UsageError("functional-eq needs --f")
        doc = _functional_eq_doc(args)
        header = ["N", "lhs", "rhs", "equal", "valuation"]
        rows = [[str(r["N"]), r["lhs"], r["rhs"], str(r["equal"]).lower(), r["valuation"]] for r in doc["rows"]]
        if args.format == "json":
            sys.stdout.write(formats.dumps(doc))
        elif args.format == "csv":
            sys.stdout.write(formats.csv_text(header, rows))
        else:
            sys.stdout.write(formats.latex_table(header, rows))
        return 0
    if args.n is None:
        raise UsageError(f"{args.check} needs --n")
    ctx = PadicContext(args.p, args.Nmax)
    lam = parse_poly(args.lam)
    if not lam.is_constant():
        raise UsageError("--lambda must be a rational number")
    if args.check == "euler-integral":
        x0 = parse_poly(args.x)
        if not x0.is_constant():
            raise UsageError("--x must be a rational number")
        report = euler_integral_check(args.n, x0.constant_value(), lam.constant_value(), ctx)
    else:
        if args.k is None:
            raise UsageError("double-integral needs --k")
        report = double_integral_check(args.k, args.n, lam.constant_value(), ctx)
    if args.format == "json":
        sys.stdout.write(formats.valuation_json(report))
    elif args.format == "csv":
        sys.stdout.write(formats.csv_text(formats.VALUATION_HEADER, formats.valuation_rows(report)))
    else:
        sys.stdout.write(formats.latex_table(formats.VALUATION_HEADER, formats.valuation_rows(report)))
    return 0


def _positive_threads(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("threads must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenpoly",
        description="Exact degenerate Euler and Bernstein polynomials, identity checks and p-adic sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("family", choices=FAMILIES)
        p.add_argument("--k", type=int)
        p.add_argument("--arg", default="x", help="argument expression for euler, euler-higher, fallfact")
        p.add_argument("--sign", type=int, default=1, help="fallfact only: 1 for lambda, -1 for -lambda")
        p.add_argument("--set", action="append", metavar="VAR=VALUE", help="substitute after building")

    p_eval = sub.add_parser("eval", help="print one polynomial")
    family_args(p_eval)
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--format", choices=("latex", "json", "csv"), default="latex")
    p_eval.set_defaults(func=cmd_eval)

    p_table = sub.add_parser("table", help="tabulate a family for n = 0..nmax")
    family_args(p_table)
    p_table.add_argument("--nmax", type=int, required=True)
    p_table.add_argument("--format", choices=("latex", "json", "csv"), default="csv")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--all", action="store_true")
    p_verify.add_argument("--id", action="append")
    p_verify.add_argument("--nmax", type=int, default=6)
    p_verify.add_argument("--kmax", type=int)
    p_verify.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p_verify.add_argument("--timings", action="store_true", help="include elapsed times (output no longer reproducible)")
    p_verify.add_argument("--threads", type=_positive_threads, help="worker threads (default: $DEGENPOLY_THREADS or 1)")
    p_verify.set_defaults(func=cmd_verify)

    p_padic = sub.add_parser("padic", help="p-adic convergence of truncated fermionic sums")
    p_padic.add_argument("check", choices=("euler-integral", "functional-eq", "double-integral"))
    p_padic.add_argument("--p", type=int, required=True)
    p_padic.add_argument("--Nmax", type=int, default=3)
    p_padic.add_argument("--n", type=int)
    p_padic.add_argument("--k", type=int)
    p_padic.add_argument("--x", default="0")
    p_padic.add_argument("--lambda", dest="lam", default="0")
    p_padic.add_argument("--f", help="integrand polynomial in t (functional-eq)")
    p_padic.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    p_padic.set_defaults(func=cmd_padic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, PadicDomainError, UnknownIdentity, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownIdentity) and exc.args else exc
        print(f"degenpoly: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
