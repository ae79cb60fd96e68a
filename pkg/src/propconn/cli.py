"""Command-line surface tying the solver, formulas, family statistics, and
conjecture checkers together.

Exit codes: 0 success, 1 usage error, 2 infeasible request (edge
disconnection at floor(r*n) = 0), 3 discrepancy in a settled formula.
Ratios are always written A/B; decimals are rejected so thresholds stay
exact.
"""

import argparse
import sys
from fractions import Fraction
from math import comb

from .graph import parse_proportion
from .solver import copvc_exact, copec_exact
from . import formulas
from .formulas import ClassSpec, formula_vs_oracle
from . import families
from .enumeration import MAX_ENUM_VERTICES
from .bounds import check_coemax_upper_bound, check_equal_partition_conjecture
from .formats import (build_report, dump_report, encode_graph6, fraction_str,
                      parse_edge_list, witness_payload, write_scan_csv)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_DISCREPANCY = 3

_CLI_CLASS_NAMES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "complete-bipartite": "complete_bipartite",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _ratio(text: str) -> Fraction:
    try:
        return parse_proportion(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="propconn",
                     description="Exact proportional component-order "
                                 "connectivity of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact solver on an edge-list graph")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--r", required=True, type=_ratio, metavar="A/B")
    p.add_argument("--mode", required=True, choices=["vertex", "edge"])
    p.add_argument("--witness", action="store_true",
                   help="include the minimum disconnecting set")

    p = sub.add_parser("formula", help="closed-form value for a graph class")
    p.add_argument("--class", dest="family", required=True,
                   choices=sorted(_CLI_CLASS_NAMES))
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--r", required=True, type=_ratio, metavar="A/B")
    p.add_argument("--mode", required=True, choices=["vertex", "edge"])

    p = sub.add_parser("extremal", help="family statistic over G(n, m)")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--r", required=True, type=_ratio, metavar="A/B")
    p.add_argument("--stat", required=True,
                   choices=["covmin", "coemin", "covmax", "coemax"])
    p.add_argument("--enumerate", dest="enumerate_", action="store_true",
                   help="also compute the enumeration ground truth")

    p = sub.add_parser("scan", help="full m-sweep of a family statistic to CSV")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--r", required=True, type=_ratio, metavar="A/B")
    p.add_argument("--stat", required=True,
                   choices=["covmin", "coemin", "covmax", "coemax"])
    p.add_argument("--all-m", action="store_true", required=True)
    p.add_argument("--out", required=True, help="output CSV path")
    p.add_argument("--enumerate", dest="enumerate_", action="store_true")
    p.add_argument("--witness", action="store_true",
                   help="fill the witness_graph6 column")

    p = sub.add_parser("verify", help="formula-vs-solver discrepancy suite")
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--r-grid", required=True,
                   help="comma-separated ratios, e.g. 1/4,1/3,1/2")

    p = sub.add_parser("conjecture", help="family-maximum conjecture verdicts")
    p.add_argument("--name", required=True,
                   choices=["equal-partition", "coemax-bound"])
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", type=int, default=2,
                   help="component count for equal-partition (default 2)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int)
    group.add_argument("--all-m", action="store_true")
    return parser


def _cmd_compute(args) -> int:
    with open(args.graph) as handle:
        g = parse_edge_list(handle.read())
    inputs = {"file": args.graph, "n": g.n, "m": g.m,
              "r": fraction_str(args.r), "mode": args.mode}
    solve = copvc_exact if args.mode == "vertex" else copec_exact
    witness = solve(g, args.r)
    report = build_report(
        "compute", inputs, witness.cardinality,
        witness=witness_payload(witness) if args.witness else None,
        method="exact-search",
    )
    if not witness.feasible:
        report["infeasible"] = True
        print(dump_report(report))
        print("infeasible: floor(r*n) = 0, edge removal cannot shrink "
              "order-1 components", file=sys.stderr)
        return EXIT_INFEASIBLE
    print(dump_report(report))
    return EXIT_OK


def _formula_results(family: str, mode: str, args) -> list:
    if family == "complete_bipartite":
        if args.a is None or args.b is None:
            raise _UsageError("complete-bipartite needs --a and --b")
        if mode == "edge":
            raise _UsageError("no closed form for complete bipartite edge "
                              "removal; use compute")
        return [formulas.copvc_complete_bipartite(args.a, args.b, args.r)]
    if args.n is None:
        raise _UsageError(f"--n is required for class {family}")
    if family == "path":
        fn = formulas.copvc_path if mode == "vertex" else formulas.copec_path
        return [fn(args.n, args.r)]
    if family == "complete":
        fn = formulas.copvc_complete if mode == "vertex" else formulas.copec_complete
        return [fn(args.n, args.r)]
    if mode == "vertex":
        return [formulas.copvc_cycle_original_order(args.n, args.r),
                formulas.copvc_cycle(args.n, args.r)]
    return [formulas.copec_cycle_arc_cover(args.n, args.r),
            formulas.copec_cycle(args.n, args.r)]


def _cmd_formula(args) -> int:
    family = _CLI_CLASS_NAMES[args.family]
    results = _formula_results(family, args.mode, args)
    inputs = {"class": args.family, "r": fraction_str(args.r), "mode": args.mode}
    if family == "complete_bipartite":
        inputs.update(a=args.a, b=args.b)
    else:
        inputs.update(n=args.n)
    report = build_report("formula", inputs, results[0].value,
                          method=results[0].formula_id)
    if len(results) > 1:
        report["variants"] = {f.formula_id: f.value for f in results}
    print(dump_report(report))
    return EXIT_OK


def _extremal_formula_value(stat, n, m, r):
    if stat == "covmin":
        res = families.covmin(n, m, r)
        return res.value, "formula", res.witness
    if stat == "coemin":
        res = families.coemin(n, m, r)
        return res.value, "formula", res.witness
    tail = (families.covmax_tail if stat == "covmax" else families.coemax_tail)(n, m, r)
    return tail, "tail" if tail is not None else "unknown", None


def _cmd_extremal(args) -> int:
    n, m, r, stat = args.n, args.m, args.r, args.stat
    value, method, witness = _extremal_formula_value(stat, n, m, r)
    inputs = {"n": n, "m": m, "r": fraction_str(r), "stat": stat}
    report = build_report("extremal", inputs, value, method=method)
    if witness is not None:
        report["witness"] = encode_graph6(witness)
    code = EXIT_OK
    if args.enumerate_:
        truth = families.extremal_by_enumeration(n, m, r, stat)
        report["enumeration"] = {"value": truth.value,
                                 "witness": encode_graph6(truth.witness)}
        if value is not None and truth.value != value:
            entry = {"stat": stat, "formula": value, "enumeration": truth.value}
            report["discrepancies"].append(entry)
            if stat in ("covmin", "coemin"):
                code = EXIT_DISCREPANCY
        if value is None:
            report["value"] = truth.value
            report["method"] = "enumeration"
    print(dump_report(report))
    return code


def _cmd_scan(args) -> int:
    n, r, stat = args.n, args.r, args.stat
    rows = []
    code = EXIT_OK
    for m in range(comb(n, 2) + 1):
        value, method, witness = _extremal_formula_value(stat, n, m, r)
        if args.enumerate_:
            truth = families.extremal_by_enumeration(n, m, r, stat)
            if value is not None and truth.value != value:
                print(f"mismatch at m={m}: formula {value}, "
                      f"enumeration {truth.value}", file=sys.stderr)
                if stat in ("covmin", "coemin"):
                    code = EXIT_DISCREPANCY
            value, method, witness = truth.value, "enumeration", truth.witness
        rows.append({
            "n": n, "m": m, "r": fraction_str(r), "stat": stat,
            "value": "" if value is None else value,
            "method": method,
            "witness_graph6": encode_graph6(witness)
            if args.witness and witness is not None else "",
        })
    with open(args.out, "w", newline="") as handle:
        write_scan_csv(handle, rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return code


def _verify_entries(n_max: int, grid: list[Fraction]):
    for r in grid:
        for n in range(2, n_max + 1):
            tau = (r.numerator * n) // r.denominator
            for mode in ("vertex", "edge"):
                if tau >= 1:
                    yield formula_vs_oracle(ClassSpec("path", n=n), r, mode)
                if n >= 3 and tau >= 1:
                    yield formula_vs_oracle(ClassSpec("cycle", n=n), r, mode)
                if mode == "vertex" or tau >= 1:
                    yield formula_vs_oracle(ClassSpec("complete", n=n), r, mode)
            if tau >= 1:
                for a in range(1, n // 2 + 1):
                    yield formula_vs_oracle(
                        ClassSpec("complete_bipartite", a=a, b=n - a), r, "vertex")


def _cmd_verify(args) -> int:
    try:
        grid = [parse_proportion(tok) for tok in args.r_grid.split(",")]
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    failed = []
    warned = []
    checked = 0
    for entry in _verify_entries(args.n_max, grid):
        checked += 1
        label = (f"{entry.spec.family}"
                 f"(n={entry.spec.order}, r={fraction_str(entry.r)}, {entry.mode})")
        if entry.failed_proven:
            failed.append({"instance": label, "oracle": entry.oracle,
                           "formulas": {c.formula_id: c.value for c in entry.checks}})
        for check in entry.checks:
            if not check.proven and not check.matches_oracle:
                warned.append({"instance": label, "formula": check.formula_id,
                               "value": check.value, "oracle": entry.oracle})
    piecewise = []
    for r in grid:
        for n in range(2, min(args.n_max, MAX_ENUM_VERTICES) + 1):
            if (r.numerator * n) // r.denominator < 1:
                continue
            for m in range(comb(n, 2) + 1):
                scan = families.covmin(n, m, r).value
                alt = families.covmin_piecewise_crosscheck(n, m, r)
                if alt != scan:
                    piecewise.append({"n": n, "m": m, "r": fraction_str(r),
                                      "scan": scan, "piecewise": alt})
    report = {
        "command": "verify",
        "inputs": {"n_max": args.n_max,
                   "r_grid": [fraction_str(r) for r in grid]},
        "checked": checked,
        "failed_proven": failed,
        "reported_variants": warned,
        "piecewise_mismatches": piecewise,
    }
    print(dump_report(report))
    if failed:
        print(f"{len(failed)} settled formula(s) disagree with the exact "
              f"solver", file=sys.stderr)
        return EXIT_DISCREPANCY
    return EXIT_OK


def _verdict_payload(v) -> dict:
    return {
        "name": v.name,
        "n": v.n,
        "m": v.m,
        "r": fraction_str(v.r),
        "holds": v.holds,
        "lhs": v.lhs,
        "rhs": None if v.rhs is None
        else (str(v.rhs) if isinstance(v.rhs, Fraction) else v.rhs),
        "witness_graph6": encode_graph6(v.witness) if v.witness is not None else None,
    }


def _cmd_conjecture(args) -> int:
    n = args.n
    if n > MAX_ENUM_VERTICES:
        raise _UsageError(f"conjecture checks enumerate G(n, m); n <= "
                          f"{MAX_ENUM_VERTICES} required")
    ms = range(comb(n, 2) + 1) if args.all_m else [args.m]
    verdicts = []
    for m in ms:
        if not 0 <= m <= comb(n, 2):
            raise _UsageError(f"m={m} out of range for n={n}")
        if args.name == "equal-partition":
            verdicts.append(check_equal_partition_conjecture(n, m, args.k))
        else:
            if n % 2 != 0:
                raise _UsageError("coemax-bound needs even n")
            verdicts.append(check_coemax_upper_bound(n, m))
    print(dump_report([_verdict_payload(v) for v in verdicts]))
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "formula": _cmd_formula,
    "extremal": _cmd_extremal,
    "scan": _cmd_scan,
    "verify": _cmd_verify,
    "conjecture": _cmd_conjecture,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"propconn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"propconn: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
