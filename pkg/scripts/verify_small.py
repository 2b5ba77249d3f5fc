#!/usr/bin/env python3
"""Run the whole verification registry over the bundled small catalog.

Exit status is 0 when every check lands as expected: statements registered
as holding produce no counterexamples, and statements registered as known
failures are refuted. Anything else exits 1.

Usage:
    python3 scripts/verify_small.py [--workers N] [--format text|json]
    python3 scripts/verify_small.py --theorem T-NIL --theorem F-W2C
"""

import argparse
import json
import sys
import time

from ringlab import small_catalog, verify_all


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--theorem", action="append", metavar="ID",
                    help="check only this id (repeatable; default: all)")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--format", choices=("text", "json"), default="text")
    args = ap.parse_args(argv)

    start = time.perf_counter()
    reports = verify_all(
        small_catalog(), theorem_ids=args.theorem, workers=args.workers
    )
    elapsed = time.perf_counter() - start

    as_expected = all(
        (not r.counterexamples) if r.expect_true else r.refuted
        for r in reports
    )
    if args.format == "json":
        print(json.dumps(
            {
                "reports": [r.json_obj() for r in reports],
                "as_expected": as_expected,
            },
            indent=2,
        ))
    else:
        for r in reports:
            print(r.text())
            print()
        surprises = [
            r.theorem_id
            for r in reports
            if (r.counterexamples if r.expect_true else not r.refuted)
        ]
        print(f"{len(reports)} checks in {elapsed:.1f}s "
              f"({args.workers} worker{'s' if args.workers != 1 else ''})")
        print("all outcomes as expected" if as_expected
              else f"UNEXPECTED outcomes: {', '.join(surprises)}")
    return 0 if as_expected else 1


if __name__ == "__main__":
    sys.exit(main())
