#!/usr/bin/env python3
"""Run both family-maximum conjecture checkers at desk scale and print the
verdict table; falsifying instances come with their witness graphs.

Example:
  python scripts/conjecture_report.py --out results/verdicts.json
"""

import argparse
import json
import sys
from dataclasses import dataclass
from math import comb
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from propconn.bounds import (check_coemax_upper_bound,  # noqa: E402
                             check_equal_partition_conjecture)
from propconn.formats import encode_graph6, fraction_str  # noqa: E402


@dataclass
class ReportConfig:
    equal_partition: tuple[tuple[int, int], ...] = ((4, 2), (6, 2), (6, 3), (8, 2))
    coemax_orders: tuple[int, ...] = (4, 6)
    out: str | None = None


def run(config: ReportConfig) -> int:
    verdicts = []
    for n, k in config.equal_partition:
        for m in range(comb(n, 2) + 1):
            verdicts.append(check_equal_partition_conjecture(n, m, k))
    for n in config.coemax_orders:
        for m in range(comb(n, 2) + 1):
            verdicts.append(check_coemax_upper_bound(n, m))

    print(f"{'name':22} {'n':>2} {'m':>2} {'r':>4} {'holds':>5} "
          f"{'lhs':>4} {'rhs':>7} witness")
    falsified = 0
    payload = []
    for v in verdicts:
        witness = encode_graph6(v.witness) if v.witness is not None else "-"
        print(f"{v.name:22} {v.n:>2} {v.m:>2} {fraction_str(v.r):>4} "
              f"{str(v.holds):>5} {v.lhs:>4} {str(v.rhs):>7} {witness}")
        falsified += not v.holds
        payload.append({"name": v.name, "n": v.n, "m": v.m,
                        "r": fraction_str(v.r), "holds": v.holds,
                        "lhs": v.lhs, "rhs": str(v.rhs),
                        "witness_graph6": witness})
    print(f"\n{len(verdicts)} verdicts, {falsified} falsifications")
    if config.out:
        Path(config.out).parent.mkdir(parents=True, exist_ok=True)
        Path(config.out).write_text(json.dumps(payload, indent=2))
        print(f"wrote {config.out}")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=None, help="optional JSON dump")
    parser.add_argument("--skip-n8", action="store_true",
                        help="drop the (8, 2) sweep for a quick run")
    args = parser.parse_args()
    config = ReportConfig(out=args.out)
    if args.skip_n8:
        config = ReportConfig(equal_partition=((4, 2), (6, 2), (6, 3)),
                              coemax_orders=(4, 6), out=args.out)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
