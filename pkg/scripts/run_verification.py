#!/usr/bin/env python
"""Run the full randomized verification sweep and write the JSON report."""

from __future__ import annotations

import argparse
import os
import sys

from telent.verify import FuzzConfig, run_fuzz


def main() -> int:
    p = argparse.ArgumentParser(description="Full verification sweep")
    p.add_argument("--dims", default="2,3,4")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=int(os.getenv("TRE_SEED", 2026)))
    p.add_argument("--out", default="report.json")
    args = p.parse_args()

    config = FuzzConfig(
        dims=tuple(int(d) for d in args.dims.split(",")),
        trials=args.trials,
        seed=args.seed,
    )
    report = run_fuzz(config)
    with open(args.out, "w") as fh:
        fh.write(report.to_json())
    for line in report.summary_lines():
        print(line)
    print(f"report written to {args.out}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
