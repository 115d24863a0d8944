"""Command-line surface: Alexander polynomials, Iwasawa invariants,
densities, composition counts, census reports, and verification suites."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import arithstat, verify
from .arithstat import (
    _decimal12,
    _rational_json,
    census_exhaustive,
    census_montecarlo,
    compare_report,
    count_compositions_p_power,
    density_n_closed_paper,
    density_n_sum,
    list_compositions_p_power,
    render_rows_csv,
    render_rows_text,
)
from .braid import FamilyTuple, parse_braid_word
from .burau import (
    alexander_closed_braid,
    alexander_family_burau,
    alexander_family_product,
)
from .errors import BraidstatError, BudgetExceeded, VerificationFailure
from .iwasawa import complete, family_invariants_fast, invariants_exact

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3
EXIT_VERIFICATION = 4


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("BRAIDSTAT_WORKERS", "1")))
    except ValueError:
        return 1


def _parse_family(text: str) -> FamilyTuple:
    try:
        k = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise BraidstatError(f"bad family tuple {text!r}") from e
    if not k:
        raise BraidstatError("family tuple must be non-empty")
    return FamilyTuple.from_exponents(k)


def _input_polynomial(args):
    if args.family is not None:
        t = _parse_family(args.family)
        return alexander_family_product(t), t
    word = parse_braid_word(args.braid, args.n)
    return alexander_closed_braid(word), None


def cmd_alexander(args) -> int:
    if args.method == "both" and args.family is None:
        print("--method both requires --family input", file=sys.stderr)
        return EXIT_VALIDATION
    if args.family is not None:
        t = _parse_family(args.family)
        if args.method == "burau":
            poly = alexander_family_burau(t)
        else:
            poly = alexander_family_product(t)
        if args.method == "both":
            other = alexander_family_burau(t)
            if other != poly:
                print(
                    f"Burau and product formulas disagree: {other} vs {poly}",
                    file=sys.stderr,
                )
                return EXIT_VERIFICATION
    else:
        word = parse_braid_word(args.braid, args.n)
        poly = alexander_closed_braid(word)
    if args.format == "json":
        print(json.dumps(poly.to_json_dict(), sort_keys=True, separators=(",", ":")))
    else:
        print(poly.text())
    return EXIT_OK


def cmd_iwasawa(args) -> int:
    if args.fast:
        if args.family is None:
            print("--fast applies to --family inputs only", file=sys.stderr)
            return EXIT_VALIDATION
        inv = family_invariants_fast(_parse_family(args.family), args.prime)
    else:
        delta, _ = _input_polynomial(args)
        inv = invariants_exact(complete(delta), args.prime)
    if args.format == "json":
        print(json.dumps(inv.to_json_dict(), sort_keys=True, separators=(",", ":")))
    else:
        d = inv.to_json_dict()
        print(f"mu={d['mu']} lambda={d['lambda']}")
    return EXIT_OK


def cmd_density_theory(args) -> int:
    ts = density_n_sum(args.n, args.lam, args.prime)
    tc = density_n_closed_paper(args.n, args.lam, args.prime)
    if args.format == "json":
        obj = {
            "n": args.n,
            "p": args.prime,
            "lambda": args.lam,
            "theory_sum": _rational_json(ts),
            "theory_closed": _rational_json(tc),
        }
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(f"theory_sum    = {ts.numerator}/{ts.denominator} ({_decimal12(ts)})")
        print(f"theory_closed = {tc.numerator}/{tc.denominator} ({_decimal12(tc)})")
        if ts != tc:
            print("note: the two formulas disagree here; run the census to arbitrate")
    return EXIT_OK


def cmd_density_census(args) -> int:
    if args.samples is not None:
        report = census_montecarlo(
            args.n, args.prime, args.max_x, args.samples, seed=args.seed
        )
    else:
        report = census_exhaustive(
            args.n,
            args.prime,
            args.max_x,
            workers=args.workers,
            budget=args.budget,
            verify_slow=args.verify_slow,
            verify_seed=args.seed,
        )
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        sys.stdout.write(render_rows_csv(compare_report(report)))
    else:
        print(
            f"census n={report.n} p={report.p} x={report.x} "
            f"mode={report.mode} total={report.total}"
        )
        sys.stdout.write(render_rows_text(compare_report(report)))
    return EXIT_OK


def cmd_compositions(args) -> int:
    count = count_compositions_p_power(args.length, args.lam, args.prime)
    items = (
        list_compositions_p_power(args.length, args.lam, args.prime)
        if args.list
        else None
    )
    if args.format == "json":
        obj = {"count": count}
        if items is not None:
            obj["compositions"] = [list(c) for c in items]
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(count)
        if items is not None:
            for c in items:
                print(",".join(str(v) for v in c))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        checked, failures = verify.run_suite(args.suite)
    except KeyError:
        known = ", ".join(sorted(verify.SUITES))
        print(f"unknown suite {args.suite!r}; known: {known}", file=sys.stderr)
        return EXIT_VALIDATION
    print(f"{args.suite}: {checked} checks, {len(failures)} failures")
    for f in failures:
        print(f"  FAIL {f}")
    return EXIT_OK if not failures else EXIT_VERIFICATION


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--braid", help='braid word, e.g. "s1^3 s2^-2"')
    p.add_argument("--n", type=int, help="strand count for --braid")
    p.add_argument("--family", help="comma-separated exponents, e.g. 2,3")


def _add_prime_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prime", type=int, required=True, help="odd prime >= 3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidstat",
        description="Alexander polynomials, Iwasawa invariants, and lambda "
        "statistics for closed braids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_alex = sub.add_parser("alex", help="Alexander polynomial of a closed braid")
    _add_input_flags(p_alex)
    p_alex.add_argument(
        "--method", choices=["burau", "product", "both"], default="product"
    )
    p_alex.add_argument("--format", choices=["text", "json"], default="text")
    p_alex.set_defaults(func=cmd_alexander)

    p_iw = sub.add_parser("iwasawa", help="mu/lambda invariants at an odd prime")
    _add_input_flags(p_iw)
    _add_prime_flag(p_iw)
    p_iw.add_argument("--fast", action="store_true", help="closed-form family path")
    p_iw.add_argument("--format", choices=["text", "json"], default="text")
    p_iw.set_defaults(func=cmd_iwasawa)

    p_den = sub.add_parser("density", help="theoretical or empirical lambda density")
    den_sub = p_den.add_subparsers(dest="mode", required=True)

    p_theory = den_sub.add_parser("theory", help="both formula columns, exact")
    p_theory.add_argument("--n", type=int, required=True)
    _add_prime_flag(p_theory)
    p_theory.add_argument("--lambda", dest="lam", type=int, required=True)
    p_theory.add_argument("--format", choices=["text", "json"], default="text")
    p_theory.set_defaults(func=cmd_density_theory)

    p_census = den_sub.add_parser("census", help="empirical census over the family")
    p_census.add_argument("--n", type=int, required=True)
    _add_prime_flag(p_census)
    p_census.add_argument("--max-x", dest="max_x", type=int, required=True)
    p_census.add_argument("--samples", type=int, help="Monte-Carlo sample count")
    p_census.add_argument("--seed", type=int, default=0)
    p_census.add_argument("--workers", type=int, default=_default_workers())
    p_census.add_argument(
        "--budget", type=int, default=arithstat.DEFAULT_TUPLE_BUDGET
    )
    p_census.add_argument("--verify-slow", action="store_true")
    p_census.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p_census.set_defaults(func=cmd_density_census)

    p_comp = sub.add_parser("compositions", help="p-power composition counts")
    _add_prime_flag(p_comp)
    p_comp.add_argument("--lambda", dest="lam", type=int, required=True)
    p_comp.add_argument("--length", type=int, required=True)
    p_comp.add_argument("--list", action="store_true")
    p_comp.add_argument("--format", choices=["text", "json"], default="text")
    p_comp.set_defaults(func=cmd_compositions)

    p_verify = sub.add_parser("verify", help="run a cross-check suite")
    p_verify.add_argument("suite")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "braid", None) is not None and getattr(args, "n", None) is None:
        print("--braid requires --n", file=sys.stderr)
        return EXIT_VALIDATION
    if (
        getattr(args, "braid", "x") is None
        and getattr(args, "family", "x") is None
    ):
        print("need either --braid or --family", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationFailure as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (BraidstatError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
