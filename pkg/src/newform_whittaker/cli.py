"""Command-line front end.

Exit status: 0 on success, 1 when a requested verification fails, 2 on usage errors.
"""

import argparse
import csv
import io
import json
import sys

from .cosets import CosetSpec, verify_coset_transversal
from .scalars import format_poly, format_rational, numeric_eval, parse_rational, poly_from_inverse_roots
from .symfunc import dominant_signatures, schur
from .whittaker import (
    eigen_from_satake,
    lfactor_den_from_eigen,
    modulus_exponent,
    solve_recursion_linear,
    verify_recursion,
    whittaker_value,
)
from .zeta import lfactor_series, zeta_equals_lfactor

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _is_prime_power(q):
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def parse_alpha(text, n):
    try:
        alphas = [parse_rational(part) for part in text.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(alphas) != n:
        raise UsageError(f"--alpha has {len(alphas)} entries, expected n = {n}")
    return tuple(alphas)


def parse_signature(text, n):
    try:
        f = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"malformed signature: {text!r}") from None
    if len(f) != n - 1:
        raise UsageError(f"--f has {len(f)} entries, expected n - 1 = {n - 1}")
    return f


def _emit(out, fmt, text_lines, payload, csv_rows=None):
    if fmt == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        for row in csv_rows if csv_rows is not None else [[line] for line in text_lines]:
            writer.writerow(row)
    else:
        for line in text_lines:
            out.write(line + "\n")


def _numeric(value, q):
    return None if q is None else numeric_eval(value, q)


def cmd_eval(args, out):
    alpha = parse_alpha(args.alpha, args.n)
    f = parse_signature(args.f, args.n)
    value = whittaker_value(f, alpha)
    num = _numeric(value, args.q)
    payload = {"n": args.n, "signature": list(f), "value": str(value), "value_terms": value.to_json()}
    line = str(value)
    if num is not None:
        payload["numeric"] = num
        line += f"  (~{num:.12g} at q={args.q})"
    _emit(out, args.format, [line], payload, [["signature", "value"], [",".join(map(str, f)), str(value)]])
    return EXIT_OK


def table_rows(alpha, max_weight, q=None):
    n = len(alpha)
    rows = []
    for f in dominant_signatures(n - 1, max_weight):
        value = whittaker_value(f, alpha)
        row = {
            "signature": list(f),
            "schur": format_rational(schur(f + (0,), alpha)),
            "delta_exponent": modulus_exponent(f),
            "value": str(value),
            "value_terms": value.to_json(),
        }
        if q is not None:
            row["numeric"] = numeric_eval(value, q)
        rows.append(row)
    return rows


def cmd_table(args, out):
    alpha = parse_alpha(args.alpha, args.n)
    if args.max_weight < 0:
        raise UsageError("--max-weight must be non-negative")
    rows = table_rows(alpha, args.max_weight, args.q)
    header = ["signature", "schur", "delta_exponent", "value"] + (["numeric"] if args.q is not None else [])
    flat = [
        [",".join(map(str, r["signature"])), r["schur"], str(r["delta_exponent"]), r["value"]]
        + ([repr(r["numeric"])] if args.q is not None else [])
        for r in rows
    ]
    widths = [max(len(h), *(len(row[k]) for row in flat)) for k, h in enumerate(header)]
    text = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [header] + flat]
    payload = {
        "n": args.n,
        "alpha": [format_rational(a) for a in alpha],
        "max_weight": args.max_weight,
        "rows": rows,
    }
    if args.q is not None:
        payload["q"] = args.q
    _emit(out, args.format, text, payload, [header] + flat)
    return EXIT_OK


def cmd_eigen(args, out):
    alpha = parse_alpha(args.alpha, args.n)
    lambdas = eigen_from_satake(alpha)
    text = [f"lambda_{i} = {lam}" for i, lam in enumerate(lambdas, start=1)]
    payload = {"n": args.n, "lambdas": [str(lam) for lam in lambdas]}
    if args.q is not None:
        payload["numeric"] = [numeric_eval(lam, args.q) for lam in lambdas]
        text = [f"{t}  (~{x:.12g})" for t, x in zip(text, payload["numeric"])]
    rows = [["i", "lambda"]] + [[str(i), str(lam)] for i, lam in enumerate(lambdas, start=1)]
    _emit(out, args.format, text, payload, rows)
    return EXIT_OK


def cmd_lfactor(args, out):
    alpha = parse_alpha(args.alpha, args.n)
    if args.terms < 0:
        raise UsageError("--terms must be non-negative")
    den = poly_from_inverse_roots(alpha)
    # positive conductor: the Hecke eigenvalues must give the same denominator
    if any(a == 0 for a in alpha) and lfactor_den_from_eigen(eigen_from_satake(alpha)) != den:
        out.write("FAIL: Hecke eigenvalues do not reproduce prod(1 - alpha_i X)\n")
        return EXIT_FAIL
    series = lfactor_series(alpha, args.terms)
    payload = {
        "n": args.n,
        "denominator": [format_rational(c) for c in den],
        "series": [format_rational(c) for c in series.coeffs],
    }
    text = [
        f"denominator: {format_poly(den)}",
        f"series: {format_poly(series.coeffs)} + O(X^{args.terms + 1})",
    ]
    rows = [["k", "denominator", "series"]] + [
        [str(k), format_rational(den[k]) if k < len(den) else "0", format_rational(c)]
        for k, c in enumerate(series.coeffs)
    ]
    _emit(out, args.format, text, payload, rows)
    return EXIT_OK


def cmd_zeta_check(args, out):
    alpha = parse_alpha(args.alpha, args.n)
    if args.terms < 1:
        raise UsageError("--terms must be at least 1")
    report = zeta_equals_lfactor(alpha, args.terms)
    if report.passed:
        line = f"OK: coefficients agree to order {args.terms}"
    else:
        k = report.first_mismatch
        line = (f"FAIL: first discrepancy at X^{k}: zeta {format_rational(report.zeta[k])} "
                f"vs L-factor {format_rational(report.lfactor[k])}")
    payload = {
        "passed": report.passed,
        "order": args.terms,
        "first_mismatch": report.first_mismatch,
        "zeta": [format_rational(c) for c in report.zeta.coeffs],
        "lfactor": [format_rational(c) for c in report.lfactor.coeffs],
    }
    _emit(out, args.format, [line], payload)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_recursion_check(args, out):
    alpha = parse_alpha(args.alpha, args.n)
    if args.max_weight < 1:
        raise UsageError("--max-weight must be at least 1")
    report = verify_recursion(alpha, args.max_weight)
    if report.passed:
        line = f"OK: recursion holds for {len(report)} (f, i) pairs up to weight {args.max_weight}"
    else:
        bad = report.failures[0]
        line = (f"FAIL: {len(report.failures)} of {len(report)} (f, i) pairs fail; "
                f"first f={bad.f} i={bad.i}: {bad.lhs} != {bad.rhs}")
    payload = {
        "passed": report.passed,
        "checked": len(report),
        "failures": [{"f": list(c.f), "i": c.i, "lhs": str(c.lhs), "rhs": str(c.rhs)} for c in report.failures],
    }
    _emit(out, args.format, [line], payload)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_solve_check(args, out):
    alpha = parse_alpha(args.alpha, args.n)
    if args.max_weight < 1:
        raise UsageError("--max-weight must be at least 1")
    table = solve_recursion_linear(alpha, args.max_weight)
    mismatches = [f for f in table.signatures() if table[f] != whittaker_value(f, alpha)]
    passed = not mismatches
    if passed:
        line = f"OK: linear solve matches closed form on {len(table)} signatures up to weight {args.max_weight}"
    else:
        f = mismatches[0]
        line = f"FAIL: {len(mismatches)} mismatches; first f={f}: {table[f]} != {whittaker_value(f, alpha)}"
    payload = {"passed": passed, "checked": len(table), "mismatches": [list(f) for f in mismatches]}
    _emit(out, args.format, [line], payload)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_coset_verify(args, out):
    try:
        spec = CosetSpec(args.n, args.p, args.m, args.i)
        report = verify_coset_transversal(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    count = len(report.representatives)
    detail = (f"{count} representatives (expected {report.expected_count}), "
              f"distinct={report.distinct}, index sizes {sorted(set(report.index_sizes))}, "
              f"{report.covered}/{report.enumerated} elements of K_{spec.m} mod {spec.p}^{spec.N} covered once")
    line = ("OK: " if report.passed else "FAIL: ") + detail
    payload = {
        "passed": report.passed,
        "representatives": count,
        "expected": report.expected_count,
        "distinct": report.distinct,
        "index_sizes": report.index_sizes,
        "enumerated": report.enumerated,
        "covered": report.covered,
        "uncovered": report.uncovered,
        "multiply_covered": report.multiply_covered,
    }
    _emit(out, args.format, [line], payload)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--q", type=int, default=None, help="residue field size for numeric display")

    rep = argparse.ArgumentParser(add_help=False)
    rep.add_argument("--n", type=int, required=True)
    rep.add_argument("--alpha", required=True, help="comma-separated rationals, exactly n entries")

    parser = argparse.ArgumentParser(prog="newform-whittaker", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common, rep], help="W at one torus point")
    p.add_argument("--f", required=True, help="comma-separated signature of length n-1")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", parents=[common, rep], help="W on all dominant signatures up to a weight")
    p.add_argument("--max-weight", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("eigen", parents=[common, rep], help="Hecke eigenvalues")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("lfactor", parents=[common, rep], help="L-factor denominator and series")
    p.add_argument("--terms", type=int, default=10)
    p.set_defaults(func=cmd_lfactor)

    p = sub.add_parser("zeta-check", parents=[common, rep], help="zeta integral against the L-factor")
    p.add_argument("--terms", type=int, default=30)
    p.set_defaults(func=cmd_zeta_check)

    p = sub.add_parser("recursion-check", parents=[common, rep], help="Hecke recursion against the closed form")
    p.add_argument("--max-weight", type=int, default=4)
    p.set_defaults(func=cmd_recursion_check)

    p = sub.add_parser("solve-check", parents=[common, rep], help="linear solve of the recursion")
    p.add_argument("--max-weight", type=int, default=4)
    p.set_defaults(func=cmd_solve_check)

    p = sub.add_parser("coset-verify", parents=[common], help="exhaustive coset check mod p^(m+1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=cmd_coset_verify)
    return parser


def _bind_values(argv):
    # argparse takes "-3/4,1" for an option; glue list values to their flag
    out, k = [], 0
    while k < len(argv):
        if argv[k] in ("--alpha", "--f") and k + 1 < len(argv):
            out.append(f"{argv[k]}={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_bind_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if getattr(args, "n", 2) < 2:
            raise UsageError("--n must be at least 2")
        if args.q is not None and not _is_prime_power(args.q):
            raise UsageError(f"--q {args.q} is not a prime power")
        return args.func(args, out)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv):
    """Run the CLI in-process; returns (exit status, captured stdout)."""
    buf = io.StringIO()
    status = main(argv, buf)
    return status, buf.getvalue()
