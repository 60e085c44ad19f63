"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 capacity.
Every big integer is written as an exact decimal string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import lowindex
from .altprod import (
    AltSequence,
    build_sequence,
    closed_igrowth,
    literal_min_report,
    parse_function,
    verify_main_theorem,
)
from .errors import CapacityError, ParseError
from .group import PermGroup
from .growth import SubgroupClass, growth_table
from .perm import read_group_text
from .verify import run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3
SCHEMA = 1


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_group(path):
    degree, gens = read_group_text(_read(path))
    return PermGroup(degree, gens, name=path)


def read_sequence_text(text):
    terms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            terms.append(int(line))
        except ValueError:
            raise ParseError(f"not an integer: {line!r}", lineno) from None
    try:
        return AltSequence(tuple(terms))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj):
    return json.dumps(obj, indent=2) + "\n"


def table_csv(table):
    return _csv(["n", "i", "lambda_order"],
                [[r.n, str(r.i), str(r.lambda_order)] for r in table.rows])


def table_json(table):
    return _json({
        "schema": SCHEMA,
        "group": table.group,
        "class": table.cls.value,
        "rows": [{"n": r.n, "i": str(r.i), "lambda_order": str(r.lambda_order)}
                 for r in table.rows],
    })


# -- subcommands --------------------------------------------------------------

def cmd_analyze(args, out):
    G = load_group(args.group_file)
    table = growth_table(G, args.n_max, args.cls, args.method)
    out.write(table_csv(table) if args.format == "csv" else table_json(table))
    return EXIT_OK


def cmd_alt_product(args, out):
    seq = read_sequence_text(_read(args.seq_file))
    rows = [(n, closed_igrowth(seq, n, args.cls)) for n in range(1, args.n_max + 1)]
    # Lambda is an infinite subgroup of the infinite product
    if args.format == "csv":
        out.write(_csv(["n", "i", "lambda_order"], [[n, str(i), "inf"] for n, i in rows]))
    else:
        out.write(_json({
            "schema": SCHEMA,
            "group": "product of Alt(n_i) over " + ",".join(map(str, seq.terms)),
            "class": args.cls.value,
            "rows": [{"n": n, "i": str(i), "lambda_order": "inf"} for n, i in rows],
        }))
    return EXIT_OK


def cmd_build_seq(args, out):
    f = parse_function(args.f)
    if args.k < 1:
        raise ParseError("--k must be >= 1")
    seq = build_sequence(f, args.k)
    report = verify_main_theorem(seq, f, args.k)
    checks = {r.k: r for r in report.rows}
    literal = {r.k: r for r in literal_min_report(seq, f)} if args.literal_min else {}

    if args.format == "csv":
        header = ["k", "n_k", "probe", "i", "f_probe", "passed"]
        if args.literal_min:
            header += ["literal_ok", "corrected_ok"]
        rows = []
        for k, n_k in enumerate(seq.terms, start=1):
            r = checks.get(k)
            row = [k, str(n_k)]
            if r is None:
                row += ["", "", "", ""]
            else:
                fv = "" if r.f_value is None else str(r.f_value)
                row += [str(r.probe), str(r.i), fv, str(r.passed).lower()]
            if args.literal_min:
                lr = literal.get(k)
                row += ["", ""] if lr is None else [str(lr.literal_ok).lower(),
                                                    str(lr.corrected_ok).lower()]
            rows.append(row)
        out.write(_csv(header, rows))
    else:
        doc = {
            "schema": SCHEMA,
            "f": str(f),
            "K": args.k,
            "terms": [str(t) for t in seq.terms],
            "checks": [{
                "k": r.k, "n_k": str(r.n_k), "probe": str(r.probe), "i": str(r.i),
                "f_probe": None if r.f_value is None else str(r.f_value),
                "passed": r.passed,
            } for r in report.rows],
            "passed": report.passed,
        }
        if args.literal_min:
            doc["literal_min"] = [{
                "k": r.k, "product": str(r.product),
                "literal_ok": r.literal_ok, "corrected_ok": r.corrected_ok,
            } for r in literal.values()]
        out.write(_json(doc))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_verify(args, out):
    report = run_suite(args.level, inject_failure=args.inject_failure)
    out.write(_json(report))
    return EXIT_OK if report["passed"] else EXIT_FAIL


# -- parser -------------------------------------------------------------------

def _class(text):
    try:
        return SubgroupClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser():
    p = argparse.ArgumentParser(prog="igrowth", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_max=True):
        sp.add_argument("--class", dest="cls", type=_class, default=SubgroupClass.ALL,
                        help="all | normal | maxnormal (default all)")
        if n_max:
            sp.add_argument("--n-max", type=int, required=True)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    a = sub.add_parser("analyze", help="growth table of a permutation group file")
    a.add_argument("group_file")
    common(a)
    a.add_argument("--method", choices=("auto", "lattice", "homsearch"), default="auto")
    a.add_argument("--max-nodes", type=int, default=None,
                   help="node budget of the coset-table search")
    a.set_defaults(func=cmd_analyze)

    ap = sub.add_parser("alt-product", help="closed-form growth of a product of Alt(n_i)")
    ap.add_argument("seq_file")
    common(ap)
    ap.set_defaults(func=cmd_alt_product)

    b = sub.add_parser("build-seq", help="build and check a slow-growth sequence")
    b.add_argument("--f", required=True, help="identity | poly:c0,c1,... | exp:base[:c0,...]")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--format", choices=("csv", "json"), default="csv")
    b.add_argument("--literal-min", action="store_true",
                   help="also evaluate the literal min{n_k + 1, ...} reading of the step")
    b.set_defaults(func=cmd_build_seq)

    v = sub.add_parser("verify", help="run the self-verification suite")
    v.add_argument("--level", choices=("quick", "full"), default="quick")
    v.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "n_max", 1) < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    saved = lowindex.MAX_NODES
    if getattr(args, "max_nodes", None):
        lowindex.MAX_NODES = args.max_nodes
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        lowindex.MAX_NODES = saved


if __name__ == "__main__":
    sys.exit(main())
