"""Sweep every pointed abelian group up to an order and cross-check both deciders.

Prints, per order, how many pointed groups there are and how many are bases,
and optionally writes the full table as CSV.

    python scripts/sweep_bases.py --max-order 64 --csv bases.csv
"""

import argparse
import csv
import time
from collections import defaultdict

from amalgbase.decide import enumerate_bases


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=64)
    ap.add_argument("--method", choices=["bruteforce", "structural", "both"], default="both")
    ap.add_argument("--csv", help="write the full table here")
    args = ap.parse_args()

    start = time.perf_counter()
    rows = enumerate_bases(args.max_order, args.method)
    elapsed = time.perf_counter() - start

    per_order = defaultdict(lambda: [0, 0, set()])
    for r in rows:
        cell = per_order[r.group.order]
        cell[0] += 1
        cell[1] += r.is_base
        cell[2].add(r.group)

    print(f"{'order':>5} {'classes':>7} {'pointed':>8} {'bases':>6}")
    for n in sorted(per_order):
        total, bases, classes = per_order[n]
        print(f"{n:>5} {len(classes):>7} {total:>8} {bases:>6}")
    print(f"\n{len(rows)} pointed groups, {sum(r.is_base for r in rows)} bases, "
          f"method={args.method}, {elapsed:.2f}s")

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["group", "g", "is_base", "detail"])
            for r in rows:
                w.writerow(r.csv_fields())


if __name__ == "__main__":
    main()
