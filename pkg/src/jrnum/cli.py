"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 verification failure, 3 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import algebra, checks, families, lattice, render
from .field import BadTripleError, check_good, describe, descriptor, iter_good_triples
from .numeth import FactorBudgetError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2
EXIT_RESOURCE = 3


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED, help="seed for all sampling")
    p.add_argument("--tol", type=float, default=1e-9, help="numeric comparison tolerance")
    p.add_argument(
        "--climit",
        type=int,
        default=lattice.DEFAULT_POINT_BUDGET,
        help="lattice enumeration point budget",
    )
    p.add_argument("--digits", type=int, default=10, help="decimal digits in renderings")


def _triple_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("r", type=int)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="jrnum",
        description="Exact Julia Robinson numbers of the field towers built from good triples (a, b, r).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("good", help="validate a triple, listing every violated condition")
    _triple_args(p)
    _common_flags(p)

    p = sub.add_parser("jr", help="exact s^2, s, JR number, minimizers, and bound checks")
    _triple_args(p)
    _common_flags(p)

    p = sub.add_parser("witness", help="algebraic integers with all conjugates in [0, JR]")
    _triple_args(p)
    p.add_argument("--count", type=int, default=5)
    _common_flags(p)

    p = sub.add_parser("verify", help="run the lattice and algebra property suites")
    _triple_args(p)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--nmax", type=int, default=8, help="largest cosine level sampled")
    _common_flags(p)

    p = sub.add_parser("examples", help="generate the explicit JR families")
    p.add_argument("--family", choices=[families.FAMILY_SQRT2T, families.FAMILY_8T], required=True)
    p.add_argument("--t", type=int, required=True, help="square-free odd parameter")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--check", action="store_true", help="recompute each JR number exactly")
    _common_flags(p)

    p = sub.add_parser("scan", help="CSV of every good triple with b <= bmax")
    p.add_argument("--bmax", type=int, required=True)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--plot", help="also render a JR-vs-b figure to this file")
    _common_flags(p)

    p = sub.add_parser("distinct", help="exact distinctness certificate for two triples")
    for name in ("a1", "b1", "r1", "a2", "b2", "r2"):
        p.add_argument(name, type=int)
    _common_flags(p)

    return ap


def cmd_good(args) -> int:
    report = check_good(args.a, args.b, args.r)
    if args.json:
        print(render.dumps({
            "triple": {"a": args.a, "b": args.b, "r": args.r},
            "good": report.ok,
            "violations": list(report.violations),
        }))
    elif report.ok:
        print(f"({args.a}, {args.b}, {args.r}) is good")
    else:
        print(f"({args.a}, {args.b}, {args.r}) is not good; violated conditions:")
        for v in report.violations:
            print(f"  - {v}")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_jr(args) -> int:
    desc = descriptor(args.a, args.b, args.r)
    result = lattice.shortest_vector(desc, budget=args.climit)
    bounds = lattice.verify_bounds(desc, result)
    if args.json:
        print(render.dumps(render.output_record(desc, result, bounds, args.digits)))
    else:
        print(f"triple       (a, b, r) = ({desc.a}, {desc.b}, {desc.r})")
        print(f"descriptor   N = {desc.big_n}, u = {desc.u}, v = {desc.v}, t = {desc.t}")
        print(f"s^2          {result.s_squared}")
        print(f"s            {result.s}  ~ {result.s.decimal(args.digits)}")
        print(f"JR           {result.jr}  ~ {result.jr.decimal(args.digits)}")
        for w in result.witnesses:
            print(f"minimizer    k = {w.k}, (x, y) = ({w.x}, {w.y})")
        status = "pass" if bounds.ok else "FAIL"
        print(f"bounds       {status}")
        for c in bounds.checks:
            if c.applicable:
                mark = "ok" if c.passed else "FAIL"
                print(f"  [{mark}] {c.name}: {c.detail}")
    return EXIT_OK if bounds.ok else EXIT_VERIFY_FAILED


def cmd_witness(args) -> int:
    desc = descriptor(args.a, args.b, args.r)
    result = lattice.shortest_vector(desc, budget=args.climit)
    jr = float(result.jr)
    elements = algebra.jr_witnesses(desc, args.count, result=result)
    rows = []
    all_ok = True
    for e in elements:
        conj = algebra.conjugates(desc, e)
        ok_val = algebra.integrality_valuations(desc, e)
        ok_poly = algebra.integrality_charpoly(desc, e)
        ok_conj = bool(min(conj) >= -args.tol and max(conj) <= jr + args.tol)
        all_ok &= ok_val and ok_poly and ok_conj
        rows.append(
            {
                "element": str(e),
                "level": e.n,
                "coeffs": {str(k): render.frac_str(c) for k, c in e.items()},
                "integral_by_valuations": ok_val,
                "integral_by_charpoly": ok_poly,
                "conjugates_in_range": ok_conj,
                "min_conjugate": float(min(conj)) if len(conj) else 0.0,
                "max_conjugate": float(max(conj)) if len(conj) else 0.0,
            }
        )
    if args.json:
        print(render.dumps({
            "triple": {"a": desc.a, "b": desc.b, "r": desc.r},
            "jr": render.surd_record(result.jr, args.digits),
            "count": len(rows),
            "witnesses": rows,
            "ok": all_ok,
        }))
    else:
        print(f"JR = {result.jr} ~ {result.jr.decimal(args.digits)}; {len(rows)} witnesses")
        for row in rows:
            verdict = (
                "pass"
                if row["integral_by_valuations"]
                and row["integral_by_charpoly"]
                and row["conjugates_in_range"]
                else "FAIL"
            )
            print(
                f"  [{verdict}] {row['element']}"
                f"  conjugates in [{row['min_conjugate']:.6f}, {row['max_conjugate']:.6f}]"
            )
    return EXIT_OK if all_ok else EXIT_VERIFY_FAILED


def cmd_verify(args) -> int:
    desc = descriptor(args.a, args.b, args.r)
    results = checks.run_all(desc, args.samples, args.seed, args.nmax, args.tol)
    ok = all(c.passed for c in results)
    if args.json:
        print(render.dumps({
            "triple": {"a": desc.a, "b": desc.b, "r": desc.r},
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in results
            ],
            "ok": ok,
        }))
    else:
        for c in results:
            print(f"[{'ok' if c.passed else 'FAIL'}] {c.name} ({c.detail})")
        print("all checks passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_examples(args) -> int:
    gen = families.family_sqrt if args.family == families.FAMILY_SQRT2T else families.family_8t
    entries = gen(args.t, args.count)
    rows = []
    ok = True
    for entry in entries:
        row = {
            "a": entry.triple.a,
            "b": entry.triple.b,
            "r": entry.triple.r,
            "family": entry.family,
            "predicted_jr": render.surd_record(entry.predicted_jr, args.digits),
        }
        if args.check:
            desc = describe(entry.triple)
            computed = lattice.jr_number(desc, budget=args.climit)
            row["computed_jr"] = render.surd_record(computed, args.digits)
            row["match"] = computed == entry.predicted_jr
            ok &= row["match"]
        rows.append(row)
    if args.json:
        print(render.dumps({"family": args.family, "t": args.t, "entries": rows, "ok": ok}))
    else:
        for row in rows:
            line = (
                f"({row['a']}, {row['b']}, {row['r']})  "
                f"JR = {row['predicted_jr']['decimal']}"
            )
            if args.check:
                line += "  [confirmed]" if row["match"] else "  [MISMATCH]"
            print(line)
        if not rows:
            print("(no entries)")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_scan(args) -> int:
    lines = [render.CSV_HEADER]
    plot_rows = []
    cache: dict[tuple[int, int], tuple] = {}
    for triple in iter_good_triples(args.bmax):
        key = (triple.a, triple.b)
        if key not in cache:
            desc = describe(triple)
            cache[key] = (desc, lattice.shortest_vector(desc, budget=args.climit))
        desc, result = cache[key]
        desc = describe(triple)  # r-specific descriptor for the output row
        lines.append(render.scan_csv_row(desc, result, args.digits))
        plot_rows.append({"b": triple.b, "t": desc.t, "jr": float(result.jr)})
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import render_scan_plot

        render_scan_plot(plot_rows, args.plot)
    return EXIT_OK


def cmd_distinct(args) -> int:
    rep1 = check_good(args.a1, args.b1, args.r1)
    rep2 = check_good(args.a2, args.b2, args.r2)
    if not (rep1.ok and rep2.ok):
        print("invalid triple(s):")
        for rep in (rep1, rep2):
            for v in rep.violations:
                print(f"  ({rep.a}, {rep.b}, {rep.r}): {v}")
        return EXIT_INVALID
    try:
        distinct = families.fields_distinct(rep1.triple, rep2.triple)
    except ValueError as exc:
        print(f"error: {exc}")
        return EXIT_INVALID
    verdict = "distinct" if distinct else "inconclusive"
    if args.json:
        print(render.dumps({
            "triple1": {"a": args.a1, "b": args.b1, "r": args.r1},
            "triple2": {"a": args.a2, "b": args.b2, "r": args.r2},
            "verdict": verdict,
        }))
    else:
        print(verdict)
    return EXIT_OK


_COMMANDS = {
    "good": cmd_good,
    "jr": cmd_jr,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "examples": cmd_examples,
    "scan": cmd_scan,
    "distinct": cmd_distinct,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BadTripleError as exc:
        print(f"invalid triple: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (lattice.EnumerationBudgetError, algebra.ResourceCapError, FactorBudgetError) as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    raise SystemExit(main())
