"""Command-line front end.

Exit status: 0 on success, 1 when a computation is refused (enumeration bound)
or the deciders disagree, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Sequence, TextIO

from .amalgam import pushout, verify_square
from .decide import (
    DeciderDisagreement,
    check_base,
    enumerate_bases,
    iter_bases,
    witness_is_valid,
)
from .groups import (
    PointedGroup,
    canonical_invariant_factors,
    elementary_divisors,
    format_element,
    prime_power_decompose,
)
from .hom import span_from_json
from .literals import parse_element, parse_group
from .subgroups import BoundExceeded, all_subgroups

EXIT_OK, EXIT_REFUSED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _dump(obj, out: TextIO):
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _pointed(group_text: str, element_text: str) -> PointedGroup:
    G = parse_group(group_text)
    g = parse_element(element_text, G)
    if not any(g):
        raise InputError("g must be nonzero (T*_ab requires g ≠ 0)")
    return PointedGroup(G, g)


def cmd_check_base(args, out: TextIO) -> int:
    pg = _pointed(args.group, args.element)
    verdict = check_base(pg, args.method, args.bound)
    if args.format == "json":
        _dump(verdict.to_json(), out)
        return EXIT_OK
    if verdict.is_base:
        out.write(f"{pg} is an h-amalgamation base: the {verdict.p}-component "
                  f"is cyclic of order {verdict.p}^{verdict.n}\n")
    else:
        out.write(f"{pg} is not an h-amalgamation base\n")
        if verdict.failed_clause:
            out.write(f"  reason: {verdict.failed_clause}\n")
        if verdict.witness:
            H, K = verdict.witness
            out.write(f"  witness: g lies in H + K with H = {H}, K = {K}, "
                      f"but in neither H nor K\n")
    return EXIT_OK


def cmd_subgroups(args, out: TextIO) -> int:
    G = parse_group(args.group)
    subs = all_subgroups(G, args.bound)
    if args.format == "json":
        _dump({
            "group": str(G),
            "count": len(subs),
            "subgroups": [
                {"order": S.order, "generators": [list(x) for x in S.generators],
                 "elements": [list(x) for x in S.elements]}
                for S in subs
            ],
        }, out)
    else:
        out.write(f"{G}: {len(subs)} subgroups\n")
        for S in subs:
            out.write(f"  order {S.order:>4}  {S}\n")
    return EXIT_OK


def cmd_amalgamate(args, out: TextIO) -> int:
    try:
        with open(args.span_file, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read span file: {e}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"span file is not valid JSON: {e}") from None
    span = span_from_json(data)
    result = pushout(span)
    payload = result.to_json()
    if result.amalgamable:
        payload["square_verified"] = verify_square(span, result)
    _dump(payload, out)
    return EXIT_OK


def cmd_enumerate_bases(args, out: TextIO) -> int:
    rows = iter_bases(args.max_order, args.method, args.bound)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["group", "g", "is_base", "detail"])
        for row in rows:
            w.writerow(row.csv_fields())
    elif args.format == "jsonl":
        for row in rows:
            _dump(row.to_json(), out)
    else:
        for row in rows:
            if row.is_base or not args.bases_only:
                mark = "base" if row.is_base else "----"
                out.write(f"{mark}  {str(row.group):<24} {format_element(row.g):<14} {row.verdict.detail()}\n")
    return EXIT_OK


def cmd_canonical(args, out: TextIO) -> int:
    G = parse_group(args.group)
    _dump({
        "group": str(G),
        "order": G.order,
        "invariant_factors": canonical_invariant_factors(G),
        "elementary_divisors": elementary_divisors(G),
    }, out)
    return EXIT_OK


def cmd_selftest(args, out: TextIO) -> int:
    start = time.perf_counter()
    failures = []
    try:
        rows = enumerate_bases(args.max_order, "both", args.bound)
    except DeciderDisagreement as e:
        out.write(f"FAIL  decider disagreement: {e}\n")
        return EXIT_REFUSED
    for row in rows:
        pg = PointedGroup(row.group, row.g)
        v = row.verdict
        if v.is_base and prime_power_decompose(row.group.element_order(row.g)) is None:
            failures.append(f"base with non-prime-power order: {pg}")
        if not v.is_base and not (v.witness and witness_is_valid(pg, *v.witness)):
            failures.append(f"invalid or missing witness: {pg}")
    elapsed = time.perf_counter() - start
    groups = len({r.group for r in rows})
    out.write(f"checked {len(rows)} pointed groups over {groups} isomorphism classes "
              f"of order <= {args.max_order} in {elapsed:.2f}s\n")
    for f in failures:
        out.write(f"FAIL  {f}\n")
    out.write("OK\n" if not failures else f"{len(failures)} failures\n")
    return EXIT_OK if not failures else EXIT_REFUSED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amalgbase",
        description="h-amalgamation bases of pointed finite abelian groups.",
    )
    parser.add_argument("--bound", type=int, default=None,
                        help="largest group order allowed for exhaustive enumeration "
                             "(default: $AMALGBASE_BOUND or 256)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-base", help="decide whether (G, g) is an h-amalgamation base")
    p.add_argument("group", help="group literal, e.g. 'Z/4 x Z/2'")
    p.add_argument("element", help="element literal, e.g. '(1,0)' or '3'")
    p.add_argument("--method", choices=["bruteforce", "structural", "both"], default="both")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_check_base)

    p = sub.add_parser("subgroups", help="list every subgroup of a group")
    p.add_argument("group")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("amalgamate", help="build the pushout of a span read from a JSON file")
    p.add_argument("span_file")
    p.set_defaults(func=cmd_amalgamate)

    p = sub.add_parser("enumerate-bases", help="tabulate all pointed groups up to an order")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--method", choices=["bruteforce", "structural", "both"], default="both")
    p.add_argument("--format", choices=["csv", "jsonl", "text"], default="jsonl")
    p.add_argument("--bases-only", action="store_true", help="text format: only print bases")
    p.set_defaults(func=cmd_enumerate_bases)

    p = sub.add_parser("canonical", help="invariant factors and elementary divisors")
    p.add_argument("group")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("selftest", help="cross-check both deciders over every small pointed group")
    p.add_argument("--max-order", type=int, default=36)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except BoundExceeded as e:
        err.write(f"error: {e}\n")
        return EXIT_REFUSED
    except DeciderDisagreement as e:
        err.write(f"error: {e}\n")
        return EXIT_REFUSED
    except (InputError, ValueError) as e:
        err.write(f"error: {e}\n")
        return EXIT_INPUT


def main() -> None:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8", newline="\n")
    sys.exit(run())


if __name__ == "__main__":
    main()
