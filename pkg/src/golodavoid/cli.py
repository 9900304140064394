"""Command-line interface: ``golodavoid {analyze,certify,golod,compare,lemma5}``.

Exit codes:
  0  success; for ``certify`` a proved or cited verdict; for ``lemma5`` the inequality holds
  1  ``certify`` verdict is empirical only; ``lemma5`` inequality fails or does not apply
  2  bad input (pattern syntax, flag values)
  3  ``certify`` verdict is inconclusive
  4  the brute-force search exceeded its work budget
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .certifier import (
    CITED,
    EMPIRICAL_VERDICT,
    PROVED,
    analysis_text,
    analyze,
    certify,
    compare,
    comparison_csv,
)
from .errors import AvoidabilityError, BudgetExceeded, NotApplicable
from .oracle import default_budget
from .pattern import Pattern, parse_pattern, zimin
from .series import (
    DEFAULT_ORDER,
    decimal_prefix,
    default_lambda,
    empirical_growth,
    first_negative,
    lemma5_closed_form,
    pattern_golod_series,
)

EXIT_OK, EXIT_WEAK, EXIT_USAGE, EXIT_INCONCLUSIVE, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def pattern_arg(text: str) -> Pattern:
    """A literal pattern such as ``xyxy`` or ``zimin:K``."""
    if text.startswith("zimin:"):
        try:
            k = int(text[len("zimin:"):])
        except ValueError:
            raise UsageError(f"bad Zimin index in {text!r}") from None
        return zimin(k)
    return parse_pattern(text)


def rational_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from None


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _rat(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_analyze(args) -> int:
    report = analyze(pattern_arg(args.pattern))
    if args.format == "json":
        _emit_json(report)
    else:
        sys.stdout.write(analysis_text(report))
    return EXIT_OK


def cmd_certify(args) -> int:
    cert = certify(pattern_arg(args.pattern), args.target, args.order)
    sys.stdout.write(cert.to_json() if args.format == "json" else cert.to_text())
    if cert.verdict in (PROVED, CITED):
        return EXIT_OK
    if cert.verdict == EMPIRICAL_VERDICT:
        return EXIT_WEAK
    return EXIT_INCONCLUSIVE


def cmd_golod(args) -> int:
    p = pattern_arg(args.pattern)
    b = pattern_golod_series(p.occurrence_vector, args.m, args.order)
    neg = first_negative(b)
    try:
        growth = empirical_growth(b)
    except NotApplicable:
        growth = None
    if args.format == "json":
        _emit_json({
            "pattern": p.text,
            "m": args.m,
            "order": b.order,
            "coeffs": list(b.coeffs),
            "first_negative": neg,
            "empirical_growth": None if growth is None else _rat(growth),
        })
    elif args.format == "csv":
        sys.stdout.write("n,coeff\n" + "".join(f"{n},{c}\n" for n, c in enumerate(b)))
    else:
        sys.stdout.write(b.dump(args.m))
        if neg is None:
            print(f"no negative coefficient through order {b.order}")
        else:
            print(f"first negative at n={neg}")
        if growth is not None:
            print(f"empirical growth {growth} (~{decimal_prefix(growth)}, approximate)")
    return EXIT_OK


def cmd_compare(args) -> int:
    p = pattern_arg(args.pattern)
    rows = compare(p, args.m, args.n_max, args.order, args.budget)
    if args.format == "json":
        _emit_json([{"n": r.n, "golod": r.golod_bound, "brute": r.brute_count,
                     "gap": r.gap, "applicable": r.applicable} for r in rows])
    elif args.format == "text":
        print(f"{'n':>3} {'golod':>14} {'brute':>14} {'gap':>14}")
        for r in rows:
            flag = "" if r.applicable else "  method inapplicable"
            print(f"{r.n:>3} {r.golod_bound:>14} {r.brute_count:>14} {r.gap:>14}{flag}")
    else:
        sys.stdout.write(comparison_csv(rows))
    return EXIT_OK


def cmd_lemma5(args) -> int:
    lam = args.lam if args.lam is not None else default_lambda(args.m)
    try:
        res = lemma5_closed_form(args.m, args.mu, lam, args.exponent)
    except NotApplicable as e:
        if args.format == "json":
            _emit_json({"m": args.m, "mu": args.mu, "lambda": _rat(lam),
                        "exponent": args.exponent, "applicable": False})
        else:
            print(f"not applicable: {e}")
        return EXIT_WEAK
    if args.format == "json":
        _emit_json({
            "m": args.m, "mu": args.mu, "lambda": _rat(lam), "exponent": args.exponent,
            "applicable": True, "holds": res.holds, "lhs": _rat(res.lhs), "rhs": _rat(res.rhs),
            "side_condition": res.side_condition,
        })
    else:
        print(f"m={args.m} mu={args.mu} lambda={lam} exponent={args.exponent}")
        print(f"lhs = m - lambda = {res.lhs} (~{decimal_prefix(res.lhs)})")
        print(f"rhs = lambda * (m / (lambda^mu - m))^{args.exponent} = "
              f"{res.rhs} (~{decimal_prefix(res.rhs)})")
        print(f"side condition m / (lambda^mu - m) <= 1: {'yes' if res.side_condition else 'no'}")
        print("holds" if res.holds else "fails")
    return EXIT_OK if res.holds else EXIT_WEAK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="golodavoid",
        description="Certify avoidability of word patterns with Golod power-series bounds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    pat_help = "pattern of ASCII letters (e.g. xyxy) or zimin:K"

    p = sub.add_parser("analyze", help="variable count, length and applicable thresholds")
    p.add_argument("pattern", help=pat_help)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="produce an avoidability certificate")
    p.add_argument("pattern", help=pat_help)
    p.add_argument("--target", type=int, choices=[2, 3, 4], required=True,
                   help="target alphabet size")
    p.add_argument("--order", type=positive_int, default=DEFAULT_ORDER,
                   help="series truncation order (default %(default)s)")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("golod", help="expand the Golod series for a pattern")
    p.add_argument("pattern", help=pat_help)
    p.add_argument("--m", type=positive_int, required=True, help="alphabet size")
    p.add_argument("--order", type=positive_int, default=DEFAULT_ORDER,
                   help="series truncation order (default %(default)s)")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_golod)

    p = sub.add_parser("compare", help="Golod bound against exact avoider counts")
    p.add_argument("pattern", help=pat_help)
    p.add_argument("--m", type=positive_int, required=True, help="alphabet size")
    p.add_argument("--n-max", type=nonneg_int, required=True, help="largest word length")
    p.add_argument("--order", type=positive_int, default=DEFAULT_ORDER,
                   help="series truncation order (default %(default)s)")
    p.add_argument("--budget", type=positive_int, default=default_budget(),
                   help="search node budget (default %(default)s; env GOLOD_BUDGET)")
    p.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("lemma5", help="exact check of the closed-form growth inequality")
    p.add_argument("--m", type=positive_int, required=True, help="alphabet size")
    p.add_argument("--mu", type=positive_int, required=True, help="minimum multiplicity")
    p.add_argument("--lambda", dest="lam", type=rational_arg, default=None,
                   help="growth ratio P/Q (default m - 3/50)")
    p.add_argument("--exponent", type=positive_int, default=2, help="default %(default)s")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_lemma5)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (AvoidabilityError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
