"""Command-line driver.

Subcommands:

* ``class``    — the three derivations of the hyperplane-arrangement class
  P(r, n) with an agreement verdict and the residue modulo L.
* ``dual``     — generators of the dual of the model cone, with the
  duality-involution and canonical-generator checks.
* ``resolve``  — the subdivision fan, the blow-up charts, and the
  semistability verdict for the model t*y = z_1*...*z_n.
* ``verify``   — invariant suites (scopes: lemma-arrangement, lemma-toric,
  degeneration, all) as a pass/fail table.
* ``report``   — the end-to-end degeneration certificate for (n, d).

Exit codes: 0 success, 1 usage error, 2 verification failure.  Output goes
to stdout (text or JSON via --format); diagnostics go to stderr.  JSON
output is a single document that re-serializes byte-for-byte under
``json.dumps(..., indent=2)``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .degeneration import (
    DegenerationSpec,
    LocalModelSpec,
    affine_coordinate_arrangement_class,
    full_degeneration_report,
    resolve_local_model,
)
from .grothring import (
    GrothClass,
    L,
    ONE,
    arrangement_class_closed,
    arrangement_class_inclusion_exclusion,
    arrangement_class_recursive,
    binomial_congruence_check,
    reduce_mod_L,
)
from .toriclat import (
    blowup_chart_sequence,
    dual_cone,
    dual_generators,
    fiber_class,
    is_smooth,
    model_cone,
    resolution_fan,
    semistable_fiber_check,
    sigma_subcone,
    unit_vector,
    verify_partition,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems as exit code 1."""

    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sncdegen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default: text)")

    p = sub.add_parser("class", help="arrangement class P(r, n) three ways")
    p.add_argument("--r", type=int, required=True, help="number of hyperplanes")
    p.add_argument("--n", type=int, required=True, help="dimension of each hyperplane")
    add_format(p)

    p = sub.add_parser("dual", help="dual of the model cone")
    p.add_argument("--n", type=int, required=True, help="model dimension")
    add_format(p)

    p = sub.add_parser("resolve", help="fan, charts and semistability of the model")
    p.add_argument("--n", type=int, required=True, help="model dimension")
    add_format(p)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--scope",
                   choices=("lemma-arrangement", "lemma-toric", "degeneration", "all"),
                   default="all")
    p.add_argument("--max-n", type=int, default=12, dest="max_n",
                   help="largest n to sweep (default: 12)")
    p.add_argument("--bound", type=int, default=4,
                   help="partition-sweep coordinate bound (default: 4)")
    add_format(p)

    p = sub.add_parser("report", help="end-to-end degeneration certificate")
    p.add_argument("--n", type=int, required=True, help="fiber dimension")
    p.add_argument("--d", type=int, required=True, help="degree")
    p.add_argument("--bound", type=int, default=4,
                   help="partition-sweep coordinate bound (default: 4)")
    add_format(p)

    return parser


def _emit(payload, fmt: str, text_lines: Sequence[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


# -- subcommands --------------------------------------------------------


def cmd_class(r: int, n: int, fmt: str) -> int:
    if r < 1 or n < 0:
        raise _UsageError(f"need r >= 1 and n >= 0, got r={r}, n={n}")
    closed = arrangement_class_closed(r, n)
    recursive = arrangement_class_recursive(r, n)
    inclexcl = arrangement_class_inclusion_exclusion(r, n)
    agree = closed == recursive == inclexcl
    residue = reduce_mod_L(closed)
    payload = {
        "r": r,
        "n": n,
        "closed": closed.to_json_dict(),
        "recursive": recursive.to_json_dict(),
        "inclusion_exclusion": inclexcl.to_json_dict(),
        "agree": agree,
        "residue_mod_L": residue,
    }
    lines = [
        f"arrangement class P(r={r}, n={n}) of {r} hyperplanes in P^{n + 1}",
        f"  closed formula:       {closed.render()}",
        f"  recursion:            {recursive.render()}",
        f"  inclusion-exclusion:  {inclexcl.render()}",
        f"  residue mod L:        {residue}",
        f"  verdict:              {'AGREE' if agree else 'DISAGREE'}",
    ]
    _emit(payload, fmt, lines)
    return EXIT_OK if agree else EXIT_FAILED

def cmd_dual(n: int, fmt: str) -> int:
    if n < 1:
        raise _UsageError(f"need n >= 1, got n={n}")
    sigma = model_cone(n)
    dual = dual_cone(sigma)
    involution_ok = dual_cone(dual) == sigma
    canonical = sorted(dual_generators(n))
    canonical_ok = sorted(dual.rays) == canonical if n >= 2 else True
    ok = involution_ok and canonical_ok
    payload = {
        "n": n,
        "rank": dual.rank,
        "rays": [list(r) for r in dual.rays],
        "involution": involution_ok,
        "canonical_generators": canonical_ok,
        "pass": ok,
    }
    lines = [f"dual of the model cone, n={n} (rank {dual.rank})"]
    lines += [f"  {list(r)}" for r in dual.rays]
    lines.append(f"  involution dual(dual) == original: {'ok' if involution_ok else 'FAIL'}")
    lines.append(f"  canonical generator list:          {'ok' if canonical_ok else 'FAIL'}")
    _emit(payload, fmt, lines)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_resolve(n: int, fmt: str) -> int:
    if n < 1:
        raise _UsageError(f"need n >= 1, got n={n}")
    fan = resolution_fan(n)
    charts = blowup_chart_sequence(n) if n >= 2 else []
    check = semistable_fiber_check(fan, unit_vector(n + 1, n))
    payload = {
        "n": n,
        "fan": fan.to_json_dict(),
        "charts": [c.to_json_dict() for c in charts],
        "semistable": check.to_json_dict(),
    }
    product = "*".join(f"z{i}" for i in range(1, n + 1)) if n <= 3 else f"z1*...*z{n}"
    lines = [f"resolution of t*y = {product} (fan of {len(fan)} maximal cones, "
             f"rank {fan.rank})"]
    for k, cone in enumerate(fan, start=1):
        lines.append(f"  sigma_{k}: rays {[list(r) for r in cone.rays]}")
    for k, chart in enumerate(charts, start=1):
        coords = ", ".join(f"{c.name}={list(c.monomial)}" for c in chart.coordinates)
        lines.append(f"  chart U_{k}: {coords}")
        lines.append(f"    relation: {chart.render_relation()}")
    lines.append(f"  fiber check: reduced={check.reduced}, smooth={check.smooth}, "
                 f"snc={check.snc}")
    _emit(payload, fmt, lines)
    return EXIT_OK if check.snc else EXIT_FAILED


# -- verify suites ------------------------------------------------------


def _rows_arrangement(max_n: int) -> list[dict]:
    rows = []
    max_r = max(1, max_n)
    for n in range(0, max_n + 1):
        bad = next((r for r in range(1, max_r + 1)
                    if not (arrangement_class_closed(r, n)
                            == arrangement_class_recursive(r, n)
                            == arrangement_class_inclusion_exclusion(r, n))), None)
        rows.append({
            "name": f"triple agreement n={n}",
            "pass": bad is None,
            "detail": (f"r=1..{max_r} all agree" if bad is None
                       else f"first disagreement at r={bad}"),
        })
    for n in range(0, max_n + 1):
        bad = next((r for r in range(1, n + 2)
                    if reduce_mod_L(arrangement_class_closed(r, n)) != 1), None)
        rows.append({
            "name": f"residue 1 for r <= n+1, n={n}",
            "pass": bad is None,
            "detail": ("congruence holds" if bad is None else f"fails at r={bad}"),
        })
        residue = reduce_mod_L(arrangement_class_closed(n + 2, n))
        rows.append({
            "name": f"boundary residue r=n+2, n={n}",
            "pass": residue == 1 + (-1) ** n,
            "detail": f"residue {residue}, expected {1 + (-1) ** n}",
        })
        bad = next((r for r in range(1, n + 2)
                    if binomial_congruence_check(r, n) != 1), None)
        rows.append({
            "name": f"alternating binomial identity n={n}",
            "pass": bad is None,
            "detail": ("sum is 1 for all r" if bad is None else f"fails at r={bad}"),
        })
    return rows


def _rows_toric(max_n: int, bound: int) -> list[dict]:
    rows = []
    top = min(max_n, 8)
    for n in range(1, top + 1):
        sigma = model_cone(n)
        fan = resolution_fan(n)
        direction = unit_vector(n + 1, n)

        if n >= 2:
            ok = sorted(dual_cone(sigma).rays) == sorted(dual_generators(n))
            rows.append({"name": f"dual generators n={n}", "pass": ok,
                         "detail": f"{n + 2} canonical generators"})
        ok = dual_cone(dual_cone(sigma)) == sigma
        rows.append({"name": f"duality involution n={n}", "pass": ok,
                     "detail": "dual(dual(sigma)) == sigma"})
        ok = all(is_smooth(c) for c in fan)
        rows.append({"name": f"cones unimodular n={n}", "pass": ok,
                     "detail": f"{len(fan)} maximal cones"})
        ok = verify_partition(fan, sigma, bound=bound)
        rows.append({"name": f"partition n={n}", "pass": ok,
                     "detail": f"bounded sweep, bound={bound}"})
        check = semistable_fiber_check(fan, direction)
        rows.append({"name": f"semistable fiber n={n}", "pass": check.snc,
                     "detail": f"reduced={check.reduced}, smooth={check.smooth}"})
        if n >= 2:
            bad = next((k for k, chart in enumerate(blowup_chart_sequence(n), start=1)
                        if chart.monomial_cone() != dual_cone(sigma_subcone(n, k))),
                       None)
            rows.append({"name": f"charts match dual cones n={n}", "pass": bad is None,
                         "detail": ("all charts" if bad is None
                                    else f"mismatch at chart {bad}")})
    return rows


def _rows_degeneration(max_n: int, bound: int) -> list[dict]:
    rows = []
    top = min(max_n, 8)
    bad = next((k for k in range(1, 11)
                if affine_coordinate_arrangement_class(k) != L**k - (L - ONE) ** k),
               None)
    rows.append({"name": "scissor oracle k<=10", "pass": bad is None,
                 "detail": ("matches L^k - (L-1)^k" if bad is None
                            else f"mismatch at k={bad}")})
    for n in range(2, top + 1):
        for d in range(1, n + 2):
            report = full_degeneration_report(DegenerationSpec(n=n, d=d), bound=bound)
            failing = [c.name for c in report.checks if not c.passed]
            rows.append({
                "name": f"degeneration n={n} d={d}",
                "pass": report.passed,
                "detail": ("all checks pass" if report.passed
                           else "failing: " + "; ".join(failing)),
            })
    return rows


def cmd_verify(scope: str, max_n: int, bound: int, fmt: str) -> int:
    if max_n < 0:
        raise _UsageError(f"need max-n >= 0, got {max_n}")
    if bound < 1:
        raise _UsageError(f"need bound >= 1, got {bound}")
    rows: list[dict] = []
    if scope in ("lemma-arrangement", "all"):
        rows += _rows_arrangement(max_n)
    if scope in ("lemma-toric", "all"):
        rows += _rows_toric(max_n, bound)
    if scope in ("degeneration", "all"):
        rows += _rows_degeneration(max_n, bound)
    ok = all(row["pass"] for row in rows)
    payload = {"scope": scope, "max_n": max_n, "bound": bound,
               "checks": rows, "pass": ok}
    width = max((len(row["name"]) for row in rows), default=0)
    lines = [f"verification suite: scope={scope}, max-n={max_n}, bound={bound}"]
    for row in rows:
        mark = "PASS" if row["pass"] else "FAIL"
        lines.append(f"  [{mark}] {row['name'].ljust(width)}  {row['detail']}")
    passed = sum(1 for row in rows if row["pass"])
    lines.append(f"  {passed}/{len(rows)} checks passed")
    _emit(payload, fmt, lines)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_report(n: int, d: int, bound: int, fmt: str) -> int:
    try:
        spec = DegenerationSpec(n=n, d=d)
        report = full_degeneration_report(spec, bound=bound)
    except ValueError as exc:
        raise _UsageError(str(exc))
    _emit(report.to_json_dict(), fmt, [report.render_table()])
    return EXIT_OK if report.passed else EXIT_FAILED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.subcommand == "class":
            return cmd_class(args.r, args.n, args.format)
        if args.subcommand == "dual":
            return cmd_dual(args.n, args.format)
        if args.subcommand == "resolve":
            return cmd_resolve(args.n, args.format)
        if args.subcommand == "verify":
            return cmd_verify(args.scope, args.max_n, args.bound, args.format)
        if args.subcommand == "report":
            return cmd_report(args.n, args.d, args.bound, args.format)
        raise _UsageError(f"unknown subcommand {args.subcommand!r}")
    except _UsageError as exc:
        print(f"sncdegen: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
