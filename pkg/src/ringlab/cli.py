"""Command-line front end: ``ringlab <command> ...``.

Commands
--------
``ideals <ring>``
    List the full ideal lattice of a ring given as a DSL expression.
``classify <ring> --ideal {gens} [--delta d] [-m M -n N] [--weakly]``
    Classify one ideal.  With explicit exponents the full battery of
    closure and primality tests runs for that pair; without them the
    closure tests sweep every pair with m up to ``--m-max``.
``verify [--theorem ID ...] [--catalog small|FILE] [--workers K]``
    Run registry entries over a catalog and report counterexamples.
``fuzz --conjecture EXPR [--trials T] [--seed S]``
    Sample random instances against an implication between classifier
    predicates.

Exit codes: 0 when everything passed (or a classification simply ran),
1 when a counterexample was found, 2 for usage, parse, or construction
errors.  Machine-readable output (``--format json``) is byte-stable for
a fixed catalog and seed, independent of the worker count.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import Catalog, load_catalog, small_catalog
from .classify import classify_full, classify_mn
from .errors import RinglabError
from .ideals import (
    enumerate_ideals,
    is_maximal_ideal,
    is_prime_ideal,
    radical,
)
from .parser import parse_delta, parse_ideal, parse_ring
from .theorems import REGISTRY, fuzz, list_theorems, verify_theorem


def _add_format_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )


def _add_catalog_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--catalog",
        default="small",
        help="'small' for the built-in catalog, or a path to a file with "
        "one ring expression per line ('#' comments)",
    )
    parser.add_argument("--m-max", type=int, default=None,
                        help="largest exponent m in the (m,n) sweeps")
    parser.add_argument("--absorb-n-max", type=int, default=None,
                        help="largest n for element-tuple absorbing scans")
    parser.add_argument("--addk-per-ring", type=int, default=None,
                        help="how many sum-with-ideal expansions per ring")
    parser.add_argument("--min-hits", type=int, default=None,
                        help="vacuity guard: expected hypothesis hits")
    parser.add_argument("--tuple-budget", type=int, default=None,
                        help="skip element scans beyond |R|^(n+1) tuples")
    parser.add_argument("--size-cap", type=int, default=None,
                        help="reject catalog rings larger than this")


def _catalog_from(args: argparse.Namespace) -> Catalog:
    overrides = {}
    for flag in ("m_max", "absorb_n_max", "addk_per_ring", "min_hits",
                 "tuple_budget", "size_cap"):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[flag] = value
    if args.catalog == "small":
        return small_catalog(**overrides)
    return load_catalog(args.catalog, **overrides)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="finite commutative rings: ideals, expansion functions, "
        "and machine-checked closure statements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ideals = sub.add_parser("ideals", help="list the ideal lattice")
    p_ideals.add_argument("ring", help="ring expression, e.g. Z12 or triv(Z2,M[2])")
    _add_format_flag(p_ideals)

    p_classify = sub.add_parser("classify", help="classify one ideal")
    p_classify.add_argument("ring", help="ring expression")
    p_classify.add_argument("--ideal", required=True,
                            help="generator set, e.g. {4}")
    p_classify.add_argument("--delta", default="id",
                            help="expansion expression (default: id)")
    p_classify.add_argument("-m", type=int, default=None)
    p_classify.add_argument("-n", type=int, default=None)
    p_classify.add_argument("--weakly", action="store_true",
                            help="with -m/-n, print only the weakly variant")
    p_classify.add_argument("--m-max", type=int, default=4,
                            help="sweep bound when -m/-n are omitted")
    _add_format_flag(p_classify)

    p_verify = sub.add_parser("verify", help="check registry entries")
    p_verify.add_argument("--theorem", action="append", default=None,
                          help="registry id (repeatable); default: all")
    p_verify.add_argument("--workers", type=int, default=1,
                          help="worker threads for instance evaluation")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="accepted for reproducible invocations; "
                          "verification itself is deterministic")
    p_verify.add_argument("--list", action="store_true",
                          help="list registry entries and exit")
    _add_catalog_flags(p_verify)
    _add_format_flag(p_verify)

    p_fuzz = sub.add_parser("fuzz", help="random-instance conjecture testing")
    p_fuzz.add_argument("--conjecture", required=True,
                        help="e.g. 'weakly_mn_closed & subset_nil -> mn_closed'")
    p_fuzz.add_argument("--trials", type=int, default=200)
    p_fuzz.add_argument("--seed", type=int, default=0)
    _add_catalog_flags(p_fuzz)
    _add_format_flag(p_fuzz)

    return parser


# --------------------------------------------------------------------------
# subcommand bodies
# --------------------------------------------------------------------------

def _cmd_ideals(args) -> int:
    ring = parse_ring(args.ring)
    lattice = enumerate_ideals(ring)
    entries = []
    for position, ideal in enumerate(lattice):
        flags = []
        if ideal.is_proper:
            flags.append("proper")
        if is_prime_ideal(ideal):
            flags.append("prime")
        if is_maximal_ideal(ideal):
            flags.append("maximal")
        if radical(ideal).members == ideal.members:
            flags.append("radical")
        entries.append(
            {
                "position": position,
                "members": list(ideal.sorted_members),
                "display": ideal.display,
                "gens": ideal.gens_display,
                "flags": flags,
            }
        )
    if args.format == "json":
        print(json.dumps(
            {"ring": ring.expr, "size": ring.size, "ideals": entries},
            indent=2,
        ))
        return 0
    print(f"{ring.expr}: {ring.size} elements, {len(entries)} ideals")
    for entry in entries:
        flags = " ".join(entry["flags"])
        print(f"  [{entry['position']}] {entry['display']} "
              f"gens={entry['gens']} {flags}")
    return 0


def _result_row(label: str, m: int, n: int, outcome, ring) -> dict:
    holds, witness = outcome
    row = {"label": label, "m": m, "n": n, "holds": holds}
    if witness is not None:
        if isinstance(witness, tuple):
            row["witness"] = ",".join(
                w if isinstance(w, str) else ring.elem_name(w)
                for w in witness
            )
        else:
            row["witness"] = ring.elem_name(witness)
    return row


def _cmd_classify(args) -> int:
    ring = parse_ring(args.ring)
    ideal = parse_ideal(ring, args.ideal)
    delta = parse_delta(ring, args.delta)
    rows: list[dict] = []
    if args.m is not None and args.n is not None:
        m, n = args.m, args.n
        if args.weakly:
            outcome = classify_mn(ideal, m, n, delta, weakly=True)
            rows.append(_result_row(
                f"weakly ({m},{n})-closed delta-primary", m, n, outcome, ring
            ))
        else:
            for label, outcome in classify_full(ideal, m, n, delta).items():
                rows.append(_result_row(label, m, n, outcome, ring))
    elif (args.m is None) != (args.n is None):
        raise RinglabError("-m and -n must be given together")
    else:
        for m in range(2, args.m_max + 1):
            for n in range(1, m):
                rows.append(_result_row(
                    f"({m},{n})-closed delta-primary", m, n,
                    classify_mn(ideal, m, n, delta), ring,
                ))
                rows.append(_result_row(
                    f"weakly ({m},{n})-closed delta-primary", m, n,
                    classify_mn(ideal, m, n, delta, weakly=True), ring,
                ))
    if args.format == "json":
        print(json.dumps(
            {
                "ring": ring.expr,
                "ideal": ideal.display,
                "delta": delta.label,
                "results": rows,
            },
            indent=2,
        ))
        return 0
    print(f"ring {ring.expr}, ideal {ideal.display}, delta {delta.label}")
    for row in rows:
        text = "true" if row["holds"] else "false"
        witness = f"  (witness {row['witness']})" if "witness" in row else ""
        print(f"  {row['label']}: {text}{witness}")
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for theorem_id, anchor, summary in list_theorems():
            print(f"{theorem_id:10s} [{anchor}] {summary}")
        return 0
    catalog = _catalog_from(args)
    ids = args.theorem if args.theorem else list(REGISTRY)
    reports = [verify_theorem(tid, catalog, args.workers) for tid in ids]
    refuted = any(r.counterexamples for r in reports)
    if args.format == "json":
        print(json.dumps(
            {"reports": [r.json_obj() for r in reports]}, indent=2
        ))
    else:
        for report in reports:
            print(report.text())
        total_cex = sum(len(r.counterexamples) for r in reports)
        print(f"checked {len(reports)} statements, "
              f"{total_cex} counterexample(s)")
    return 1 if refuted else 0


def _cmd_fuzz(args) -> int:
    catalog = _catalog_from(args)
    report = fuzz(
        args.conjecture, catalog, trials=args.trials, seed=args.seed
    )
    if args.format == "json":
        print(json.dumps(report.json_obj(), indent=2))
    else:
        print(report.text())
    return 1 if report.counterexamples else 0


_COMMANDS = {
    "ideals": _cmd_ideals,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "fuzz": _cmd_fuzz,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except RinglabError as err:
        print(f"error: {err.code}: {err}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
