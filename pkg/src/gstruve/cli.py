"""Command-line surface: point evaluation, table reproduction, coefficient
dumps, and the reflection-identity check.

Examples:
    gstruve eval --a 0.5 --nu 0.25 --z 15 --asym
    gstruve table 2 --format json
    gstruve coeffs --a 0.5 --nu 0.25 -M 11 --prec 60 --rational
    gstruve verify-appendix --sigma 0.2 --nu 0.3333333333333333 -M 6
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from mpmath import mp, mpf
import mpmath

from . import __version__
from .asym import TruncationPolicy, asymptotic_estimate
from .coeffs import closed_form_c123, rational_reconstruct, solve_coeffs, \
    verify_appendix_identity
from .errors import PrecisionExhausted, StruveError, TruncationUnstable
from .precision import DEFAULT_PRECISION, matched_digits, working
from .series import eval_series
from .tables import (ReportRow, _row, compute_table, parse_q, parse_z)
from .wright import StruveParams


def _policy(trunc: str, P: int) -> TruncationPolicy:
    if trunc == "opt":
        return TruncationPolicy.optimal(converge_rtol=mpf(10) ** (-(P + 5)))
    return TruncationPolicy.fixed(int(trunc))


def _emit(payload: dict, rows: list, fmt: str, out=sys.stdout):
    if fmt == "json":
        doc = {"params": payload, "rows": rows,
               "meta": {"precision": payload.get("precision"),
                        "version": __version__}}
        print(json.dumps(doc, indent=2), file=out)
        return
    if fmt == "csv":
        if not rows:
            return
        keys = list(rows[0].keys())
        w = csv.DictWriter(out, fieldnames=keys)
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v)
                        for k, v in r.items()})
        return
    # text
    for r in rows:
        for k, v in r.items():
            if v in (None, [], ""):
                continue
            print(f"  {k:22s} {v}", file=out)
        print(file=out)


def cmd_eval(args) -> int:
    P = args.prec
    with working(P):
        a = parse_q(args.a)
        nu = parse_q(args.nu)
        z = parse_z(args.z)
        p = StruveParams(a, nu)
    res = eval_series(z, p, P)
    unstable = []
    est = None
    if args.asym and abs(z) > 0:
        try:
            est = asymptotic_estimate(z, p, P, policy=_policy(args.trunc, P))
        except (TruncationUnstable, PrecisionExhausted) as e:
            unstable.append(str(e))
    with working(P):
        row = _row(z, a, nu, res.value, est.value if est else None,
                   estimate=est)
    d = row.to_dict()
    d["terms_used"] = res.terms_used
    d["error_estimate"] = mpmath.nstr(res.error_estimate, 5)
    d["precision_used"] = res.precision_used
    if unstable:
        d["warnings"] = d.get("warnings", []) + unstable
    _emit({"a": args.a, "nu": args.nu, "z": args.z, "precision": P},
          [d], args.format)
    if args.strict and (unstable or any("Stokes" in w for w in d.get("warnings", []))):
        return 2
    return 0


def cmd_table(args) -> int:
    P = args.prec
    rows = compute_table(args.id, P)
    rows = [r.to_dict() if isinstance(r, ReportRow) else r for r in rows]
    _emit({"table": args.id, "precision": P or (60 if args.id == 1 else 50)},
          rows, args.format)
    if args.strict:
        for r in rows:
            for w in r.get("warnings", []):
                if "unstable" in w.lower() or "exhaust" in w.lower():
                    return 2
    return 0


def cmd_coeffs(args) -> int:
    P = args.prec
    with working(P):
        p = StruveParams(parse_q(args.a), parse_q(args.nu))
    table = solve_coeffs(p, args.M, P)
    rows = []
    with working(P):
        closed = closed_form_c123(p, P) if args.closed_form else None
        for j in range(args.M):
            d = {"j": j, "c": mpmath.nstr(table.c[j], min(P, 40))}
            if args.rational:
                rec = rational_reconstruct(table.c[j])
                d["rational"] = f"{rec.numerator}/{rec.denominator}" if rec else None
            if closed and 1 <= j <= 3:
                d["closed_form"] = mpmath.nstr(closed[j - 1], min(P, 40))
                d["closed_form_digits"] = matched_digits(closed[j - 1], table.c[j])
            rows.append(d)
    _emit({"a": args.a, "nu": args.nu, "M": args.M, "precision": P,
           "residual": mpmath.nstr(table.residual, 5)}, rows, args.format)
    return 0


def cmd_verify_appendix(args) -> int:
    rep = verify_appendix_identity(parse_q(args.sigma), parse_q(args.nu),
                                   args.M, args.prec)
    rows = []
    with working(args.prec):
        for j in range(args.M):
            rows.append({"j": j,
                         "d": mpmath.nstr(rep.d.c[j], 30),
                         "c_continued": mpmath.nstr(rep.c_continued.c[j], 30),
                         "abs_diff": mpmath.nstr(abs(rep.d.c[j] - rep.c_continued.c[j]), 4)})
        payload = {"sigma": args.sigma, "nu": args.nu, "M": args.M,
                   "precision": args.prec,
                   "max_discrepancy": mpmath.nstr(rep.max_discrepancy, 4),
                   "passed": rep.passed}
    _emit(payload, rows, args.format)
    return 0 if rep.passed else 2


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gstruve",
        description="Generalized Struve function: series and asymptotics")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(sp, prec_default=DEFAULT_PRECISION):
        sp.add_argument("--prec", type=int, default=prec_default,
                        help="working precision in decimal digits")
        sp.add_argument("--format", choices=("text", "csv", "json"),
                        default="text")
        sp.add_argument("--strict", action="store_true",
                        help="nonzero exit on truncation/precision warnings")

    sp = sub.add_parser("eval", help="evaluate at one point")
    sp.add_argument("--a", required=True)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--z", required=True,
                    help="real '15', imaginary '20i', or 're,im'")
    sp.add_argument("--asym", action="store_true",
                    help="also run the matching asymptotic assembly")
    sp.add_argument("--trunc", default="opt",
                    help="'opt' or a fixed truncation index j_max")
    common(sp)
    sp.set_defaults(fn=cmd_eval)

    sp = sub.add_parser("table", help="reproduce a verification table")
    sp.add_argument("id", type=int, choices=(1, 2, 3, 4))
    common(sp)
    # None -> per-table default (60 digits for table 1, 50 otherwise)
    sp.set_defaults(fn=cmd_table, prec=None)

    sp = sub.add_parser("coeffs", help="solve for normalized coefficients")
    sp.add_argument("--a", required=True)
    sp.add_argument("--nu", required=True)
    sp.add_argument("-M", type=int, default=11)
    sp.add_argument("--rational", action="store_true",
                    help="also print reconstructed rationals")
    sp.add_argument("--closed-form", action="store_true", dest="closed_form",
                    help="cross-check c1..c3 against the closed forms")
    common(sp, prec_default=60)
    sp.set_defaults(fn=cmd_coeffs)

    sp = sub.add_parser("verify-appendix",
                        help="check d_j = c_j(-sigma, nu)")
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--nu", required=True)
    sp.add_argument("-M", type=int, default=6)
    common(sp, prec_default=60)
    sp.set_defaults(fn=cmd_verify_appendix)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except StruveError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
