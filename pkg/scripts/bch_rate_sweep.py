#!/usr/bin/env python3
"""Rate table for binary sources with BCH codes of length 1023: list
decoding vs unique decoding across crossover probabilities."""

import argparse
import sys

from swld.planner import sweep, sweep_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--eps", type=float, default=1e-3)
    ap.add_argument("--p-start", type=float, default=0.02)
    ap.add_argument("--p-stop", type=float, default=0.30)
    ap.add_argument("--p-step", type=float, default=0.02)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    grid = []
    p = args.p_start
    while p <= args.p_stop + 1e-9:
        grid.append(round(p, 6))
        p += args.p_step
    rows = sweep(2, 1023, args.eps, "bch", grid)
    csv = sweep_csv(rows)
    if args.out == "-":
        sys.stdout.write(csv)
    else:
        with open(args.out, "w") as fh:
            fh.write(csv)

    print(f"{'p':>6} {'H(X|Y)':>8} {'list':>8} {'unique':>8}", file=sys.stderr)
    for row in rows:
        unique = f"{row['rate_unique']:.4f}" if row["rate_unique"] is not None else "   --  "
        print(f"{row['p']:>6.2f} {row['h_cond']:>8.4f} {row['rate_list_crc']:>8.4f} "
              f"{unique:>8}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
