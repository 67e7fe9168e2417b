"""Build pushouts of random pointed spans and check the kernel criterion against them.

    python scripts/random_spans.py --count 5000 --seed 1
"""

import argparse
import random
import time
from collections import Counter

from amalgbase.amalgam import amalgamability_condition, pushout, verify_square
from amalgbase.sampling import random_span


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-order", type=int, default=16, help="bound on |G|, |K| and |L|")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    outcomes = Counter()
    clauses = Counter()
    amalgam_orders = Counter()
    start = time.perf_counter()
    for _ in range(args.count):
        span = random_span(rng, args.max_order, args.max_order)
        ok, witness = amalgamability_condition(span)
        r = pushout(span)
        if ok != r.amalgamable:
            outcomes["DISAGREE"] += 1
            print("disagreement:", span)
            continue
        if ok:
            outcomes["amalgamable"] += 1
            amalgam_orders[r.quotient.order] += 1
            if not verify_square(span, r):
                outcomes["BAD SQUARE"] += 1
        else:
            outcomes["blocked"] += 1
            clauses[witness.clause] += 1
    elapsed = time.perf_counter() - start

    print(f"{args.count} spans in {elapsed:.2f}s")
    for key, n in sorted(outcomes.items()):
        print(f"  {key:<12} {n}")
    for clause, n in sorted(clauses.items()):
        print(f"  blocked by {clause}: {n}")
    print("  amalgam orders:", dict(sorted(amalgam_orders.items())))


if __name__ == "__main__":
    main()
