"""Command-line front end.

Subcommands: count, visible, irred, badset, zeros, exp-a, exp-p, sweep.
Polynomials are given with -f in the c*U^i*V^j grammar; X and Y may be
real.  Output formats: table (default), json, and - for the record-emitting
commands zeros/exp-a/exp-p/sweep - csv.

Exit codes: 0 success, 2 usage error (bad flags, malformed polynomial,
non-prime p, box out of range), 3 hypothesis violated, 4 degenerate
reduction, 5 box too large for the requested T.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import is_prime
from .counting import (
    CountBox,
    LevelCurveSpec,
    count_level_points,
    count_visible_direct,
    count_visible_mobius,
    expected_visible,
)
from .errors import (
    BoxTooLarge,
    DegenerateReduction,
    HypothesisViolated,
    PolynomialParseError,
    UsageError,
)
from .experiments import DEFAULT_DELTAS, SweepPoint
from . import experiments, factor, output
from .poly import parse_poly, reduce_mod

EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_DEGENERATE = 4
EXIT_BOX = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(sub, poly=True, out=True):
    if poly:
        sub.add_argument("-f", "--poly", required=True, help="polynomial, e.g. \"V^2 - U^3 - U - 1\"")
    if out:
        sub.add_argument("--format", choices=("table", "csv", "json"), default="table")
        sub.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> _Parser:
    ap = _Parser(prog="visiblepoints", description=__doc__.splitlines()[0])
    sp = ap.add_subparsers(dest="command", required=True)

    c = sp.add_parser("count", help="level-curve point count in a box")
    _add_common(c)
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-a", type=int, required=True)
    c.add_argument("-X", type=float, required=True)
    c.add_argument("-Y", type=float, required=True)
    c.add_argument("--strategy", choices=("auto", "grid", "rows"), default="auto")

    v = sp.add_parser("visible", help="visible-point count by both routes")
    _add_common(v)
    v.add_argument("-p", type=int, required=True)
    v.add_argument("-a", type=int, required=True)
    v.add_argument("-X", type=float, required=True)
    v.add_argument("-Y", type=float, required=True)

    i = sp.add_parser("irred", help="irreducibility verdict modulo p")
    _add_common(i)
    i.add_argument("-p", type=int, required=True)

    b = sp.add_parser("badset", help="levels a where f - a loses absolute irreducibility")
    _add_common(b)
    b.add_argument("-p", type=int, required=True)

    z = sp.add_parser("zeros", help="exact integer zeros of f in the box")
    _add_common(z)
    z.add_argument("-X", type=float, required=True)
    z.add_argument("-Y", type=float, required=True)

    ea = sp.add_parser("exp-a", help="discrepancy summed over all levels a for one prime")
    _add_common(ea)
    ea.add_argument("-p", type=int, required=True)
    ea.add_argument("-X", type=float, required=True)
    ea.add_argument("-Y", type=float, required=True)
    ea.add_argument("--delta", type=float, action="append", default=None,
                    help="also report concentration fractions (repeatable)")
    ea.add_argument("--workers", type=int, default=1)

    ep = sp.add_parser("exp-p", help="discrepancy summed over primes in [T/2, T] at level 0")
    _add_common(ep)
    ep.add_argument("-T", type=float, required=True)
    ep.add_argument("-X", type=float, required=True)
    ep.add_argument("-Y", type=float, required=True)
    ep.add_argument("--workers", type=int, default=1)

    sw = sp.add_parser("sweep", help="run a series of sweeps, or replay a CSV")
    sw.add_argument("-f", "--poly", required=False, default=None)
    sw.add_argument("--format", choices=("table", "csv", "json"), default="csv")
    sw.add_argument("--out", default=None)
    sw.add_argument("--mode", choices=("levels", "primes"), default=None)
    sw.add_argument("--grid", default=None,
                    help="comma-separated p values (levels) or T values (primes)")
    sw.add_argument("-X", type=float, default=None)
    sw.add_argument("-Y", type=float, default=None)
    sw.add_argument("--box-eq-p", action="store_true",
                    help="levels mode: use X = Y = p for each grid entry")
    sw.add_argument("--from-csv", default=None, help="re-emit records parsed from a CSV file")
    sw.add_argument("--workers", type=int, default=1)
    return ap


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise UsageError(f"p = {p} is not prime")


def _check_box(X: float, Y: float, p: int) -> CountBox:
    if not (1 <= X <= p and 1 <= Y <= p):
        raise UsageError(f"box {X} x {Y} violates 1 <= X, Y <= p = {p}")
    return CountBox(X, Y)


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _emit_records(records, fmt: str, path: str | None) -> None:
    if fmt == "csv":
        _emit(output.records_to_csv(records), path)
    elif fmt == "json":
        _emit(output.records_to_json(records), path)
    else:
        lines = []
        for r in records:
            key = f"p={r.p}" if r.kind == "levels" else f"T={r.T} a={r.a}"
            lines.append(
                f"[{r.kind}] f={r.f_text} {key} X={r.X} (floor {int(r.X)}) "
                f"Y={r.Y} (floor {int(r.Y)})"
            )
            lines.append(
                f"  sum_abs_dev={r.sum_abs_dev!r} bound={r.bound_value!r} "
                f"ratio={r.ratio!r} nontrivial_box={r.box_nontrivial}"
            )
            if r.skipped_primes:
                lines.append("  skipped primes: " + ", ".join(map(str, r.skipped_primes)))
        _emit("\n".join(lines) + "\n", path)


def _cmd_count(args) -> int:
    _check_prime(args.p)
    box = _check_box(args.X, args.Y, args.p)
    spec = LevelCurveSpec(parse_poly(args.poly), args.p, args.a)
    n = count_level_points(spec, box, strategy=args.strategy)
    payload = {
        "f": spec.f.text(), "p": args.p, "a": spec.a,
        "X": args.X, "Y": args.Y, "floor_X": box.nx, "floor_Y": box.ny,
        "count": n, "main_term": box.X * box.Y / args.p,
        "in_theorem_scope": spec.in_theorem_scope,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        raise UsageError("csv format applies to zeros/exp-a/exp-p/sweep")
    else:
        _emit(
            f"count = {n} (X*Y/p = {payload['main_term']!r}) on "
            f"[1,{box.nx}]x[1,{box.ny}], degree-in-scope={spec.in_theorem_scope}",
            args.out,
        )
    return 0


def _cmd_visible(args) -> int:
    _check_prime(args.p)
    box = _check_box(args.X, args.Y, args.p)
    spec = LevelCurveSpec(parse_poly(args.poly), args.p, args.a)
    direct = count_visible_direct(spec, box)
    mobius = count_visible_mobius(spec, box)
    if direct != mobius:
        sys.stderr.write(
            f"internal error: direct={direct} != mobius={mobius} disagree\n"
        )
        return 1
    expected = expected_visible(box, args.p)
    payload = {
        "f": spec.f.text(), "p": args.p, "a": spec.a, "X": args.X, "Y": args.Y,
        "visible_direct": direct, "visible_mobius": mobius, "expected": expected,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        raise UsageError("csv format applies to zeros/exp-a/exp-p/sweep")
    else:
        _emit(f"direct={direct} mobius={mobius} expected={expected:.4f}", args.out)
    return 0


def _cmd_irred(args) -> int:
    _check_prime(args.p)
    fmod = reduce_mod(parse_poly(args.poly), args.p)
    verdict = factor.is_absolutely_irreducible(fmod)
    payload = {
        "f": parse_poly(args.poly).text(), "p": args.p,
        "irreducible_over_base": verdict.irreducible_over_base,
        "absolutely_irreducible": verdict.absolutely_irreducible,
        "witness": verdict.witness,
    }
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        raise UsageError("csv format applies to zeros/exp-a/exp-p/sweep")
    else:
        wtxt = ""
        if isinstance(verdict.witness, int):
            wtxt = f", witness e={verdict.witness}"
        elif verdict.witness:
            wtxt = f", witness factor: {verdict.witness}"
        _emit(
            f"irreducible_over_base={str(verdict.irreducible_over_base).lower()}, "
            f"absolutely_irreducible={str(verdict.absolutely_irreducible).lower()}"
            + wtxt,
            args.out,
        )
    return 0


def _cmd_badset(args) -> int:
    _check_prime(args.p)
    bad = sorted(factor.bad_level_values(parse_poly(args.poly), args.p))
    payload = {"f": parse_poly(args.poly).text(), "p": args.p,
               "bad_levels": bad, "size": len(bad)}
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    elif args.format == "csv":
        raise UsageError("csv format applies to zeros/exp-a/exp-p/sweep")
    else:
        _emit(f"bad levels ({len(bad)}): {bad}", args.out)
    return 0


def _cmd_zeros(args) -> int:
    f = parse_poly(args.poly)
    report = experiments.integer_zero_set(f, CountBox(args.X, args.Y))
    if args.format == "csv":
        _emit(output.zero_reports_to_csv([report]), args.out)
    elif args.format == "json":
        _emit(output.zero_reports_to_json([report]), args.out)
    else:
        pts = " ".join(f"({u},{v})" for u, v in report.points)
        _emit(f"{len(report.points)} integer zeros: {pts}", args.out)
    return 0


def _cmd_exp_a(args) -> int:
    _check_prime(args.p)
    box = _check_box(args.X, args.Y, args.p)
    f = parse_poly(args.poly)
    record = experiments.level_sweep(f, args.p, box, workers=args.workers)
    if args.format == "csv":
        _emit_records([record], "csv", args.out)
        return 0
    deltas = tuple(args.delta) if args.delta else DEFAULT_DELTAS
    profiles = experiments.concentration_profiles(f, args.p, box, deltas)
    if args.format == "json":
        doc = json.loads(output.records_to_json([record]))
        doc["concentration"] = [
            {"delta": pr.delta, "fraction_within": pr.fraction_within}
            for pr in profiles
        ]
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        _emit_records([record], "table", None)
        for pr in profiles:
            print(f"  within {pr.delta:>5}: fraction {pr.fraction_within!r}")
    return 0


def _cmd_exp_p(args) -> int:
    f = parse_poly(args.poly)
    record = experiments.prime_sweep(f, args.T, CountBox(args.X, args.Y), workers=args.workers)
    _emit_records([record], args.format, args.out)
    return 0


def _cmd_sweep(args) -> int:
    if args.from_csv:
        with open(args.from_csv) as fh:
            kind, items = output.read_csv(fh.read())
        if kind == "records":
            _emit_records(items, args.format, args.out)
        else:
            if args.format == "json":
                _emit(output.zero_reports_to_json(items), args.out)
            else:
                _emit(output.zero_reports_to_csv(items), args.out)
        return 0
    if not (args.poly and args.mode and args.grid):
        raise UsageError("sweep needs either --from-csv or -f/--mode/--grid")
    f = parse_poly(args.poly)
    values = [float(v) for v in args.grid.split(",") if v]
    plan = []
    for val in values:
        if args.mode == "levels":
            p = int(val)
            if args.box_eq_p:
                X = Y = float(p)
            else:
                if args.X is None or args.Y is None:
                    raise UsageError("levels sweep needs -X/-Y or --box-eq-p")
                X, Y = args.X, args.Y
            plan.append(SweepPoint(kind="levels", X=X, Y=Y, p=p))
        else:
            if args.X is None or args.Y is None:
                raise UsageError("primes sweep needs -X and -Y")
            plan.append(SweepPoint(kind="primes", X=args.X, Y=args.Y, T=val))
    results = experiments.run_sweep_series(f, plan, workers=args.workers)
    records = [r for r in results if isinstance(r, experiments.DiscrepancyRecord)]
    failures = [r for r in results if isinstance(r, experiments.SweepFailure)]
    for fail in failures:
        sys.stderr.write(f"sweep point {fail.point} failed: {fail.message}\n")
    _emit_records(records, args.format, args.out)
    return 0


_HANDLERS = {
    "count": _cmd_count,
    "visible": _cmd_visible,
    "irred": _cmd_irred,
    "badset": _cmd_badset,
    "zeros": _cmd_zeros,
    "exp-a": _cmd_exp_a,
    "exp-p": _cmd_exp_p,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except (UsageError, PolynomialParseError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except HypothesisViolated as exc:
        sys.stderr.write(f"hypothesis violated: {exc}\n")
        return EXIT_HYPOTHESIS
    except DegenerateReduction as exc:
        sys.stderr.write(f"degenerate reduction: {exc}\n")
        return EXIT_DEGENERATE
    except BoxTooLarge as exc:
        sys.stderr.write(f"box too large: {exc}\n")
        return EXIT_BOX
    except ValueError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
