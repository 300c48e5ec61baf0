#!/usr/bin/env python3
"""Scan the optimal mixing parameter and goodness of fit over player counts
and write the rows as CSV (stdout by default). The residual-share column
makes the large-n behavior of each target visible at a glance."""

import argparse
import sys

from valuegeom import trend_csv, trend_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--targets", default="bz,esd,so", help="comma-separated tokens (default bz,esd,so)")
    parser.add_argument("--min-n", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=20)
    parser.add_argument("--out", help="output path (default stdout)")
    args = parser.parse_args()

    tokens = [t.strip() for t in args.targets.split(",") if t.strip()]
    rows = trend_table(tokens, args.min_n, args.max_n)
    text = trend_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
