"""Command-line entry point: run suites, inspect the catalog, classify subclass C."""

import argparse
import json
import sys

from . import catalog as cat
from .furcate import classify_c, describe, furcate_enumerate_C
from .harness import FAULTS, SUITES, bracket_table, failures, run_suite, write_report


def _verify(args):
    records = run_suite(args.suite, entry=args.entry, seed=args.seed, jobs=args.jobs, fault=args.inject_fault)
    for r in records:
        print(f"{r.status:7} {r.suite}/{r.entry} {r.check}  {r.detail}")
    if args.report:
        write_report(records, args.report, stable=args.stable)
    bad = failures(records)
    print(f"{len(records)} checks, {len(bad)} failures", file=sys.stderr)
    return 1 if bad else 0


def _list(args):
    for e in cat.TABLE1:
        mark = " (crossed out)" if e.crossed_out else ""
        rel = f" [{len(e.side_relations)} side relation(s)]" if e.side_relations else ""
        print(f"{e.id}  {len(e.fields)} fields{rel}{mark}")
    return 0


def _classify(args):
    d = classify_c(cat.CLASSIFICATION_TARGET_C)
    for case in furcate_enumerate_C():
        print(describe(case))
    print(f"emitted {len(d.emitted)}, catalog {len(d.expected)}")
    for m in d.missing:
        print(f"- missing {m}")
    for m in d.extra:
        print(f"+ extra {m}")
    return 0 if d.empty else 1


def _bracket_table(args):
    for (a, b), br in bracket_table().items():
        print(f"[{a}, {b}] = {br}")
    return 0


def _dump(args):
    json.dump(cat.catalog_json(), sys.stdout, indent=2, ensure_ascii=False)
    print()
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="rdsym", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--entry", help="run a single entry of the suite")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--report", help="write JSON lines to this path")
    v.add_argument("--stable", action="store_true", help="zero the timings so reports are byte-identical")
    v.add_argument("--inject-fault", choices=FAULTS, help="swap in a broken simplifier (properties suite)")
    v.set_defaults(func=_verify)

    ls = sub.add_parser("list", help="list catalog rows")
    ls.add_argument("what", choices=["catalog"])
    ls.set_defaults(func=_list)

    c = sub.add_parser("classify", help="run the furcate enumeration and diff against the catalog")
    c.add_argument("subclass", choices=["c"])
    c.set_defaults(func=_classify)

    b = sub.add_parser("bracket-table", help="print the commutators of the equivalence algebra basis")
    b.set_defaults(func=_bracket_table)

    d = sub.add_parser("dump", help="export the catalog")
    d.add_argument("what", choices=["catalog"])
    d.add_argument("--format", choices=["json"], default="json")
    d.set_defaults(func=_dump)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
