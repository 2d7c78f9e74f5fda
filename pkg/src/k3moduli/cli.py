"""Command-line front end.

Every subcommand prints one compact JSON document (``scan`` prints one row per
``d``). Exit status: 0 success, 1 oracle disagreement, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .discriminant import cubic_admissible, group_elements
from .heegner import (
    ReflectiveCandidate,
    brute_force_classify,
    classify_fixed_divisors,
    ns_gram_generic,
)
from .lattice import determinant
from .mukai import fm_partner_count, mukai_table


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _even_positive(text: str) -> int:
    value = _positive(text)
    if value % 2:
        raise argparse.ArgumentTypeError(f"expected an even integer, got {value}")
    return value


def scan_row(d: int) -> dict:
    report = classify_fixed_divisors(d)
    order = len(group_elements(d))
    classes = [
        dict(inv.to_dict(), rep=g.rep)
        for g, invs in sorted(report.entries.items())
        for inv in invs
    ]
    classes.sort(key=lambda c: (c["n"], c["t"]))
    return {
        "d": d,
        "group_order": order,
        "fm_count": fm_partner_count(d),
        "n_fixed_classes": len(classes),
        "classes": classes,
        "cubic_admissible": cubic_admissible(2 * d),
    }


TSV_HEADER = "#d\tgroup_order\tfm_count\tn_fixed_classes\tclasses\tcubic"


def tsv_line(row: dict) -> str:
    classes = ";".join(f"{c['n']}:{c['div']}:{c['t']}" for c in row["classes"]) or "-"
    return "\t".join(
        [
            str(row["d"]),
            str(row["group_order"]),
            str(row["fm_count"]),
            str(row["n_fixed_classes"]),
            classes,
            "true" if row["cubic_admissible"] else "false",
        ]
    )


def _oracle_diff(d: int, bound: int, analytic: frozenset) -> list[str]:
    lines = []
    for B in (bound, 2 * bound):
        found = brute_force_classify(d, B)
        for tag, diff in (("missing from oracle", analytic - found), ("extra in oracle", found - analytic)):
            for inv, g in sorted(diff):
                lines.append(f"bound {B}: {tag}: rep={g.rep} n={inv.n} div={inv.div} t={inv.t}")
    return lines


def _cmd_group(args, out):
    reps = [g.rep for g in group_elements(args.d)]
    out.write(_dumps({"d": args.d, "order": len(reps), "reps": reps}) + "\n")
    return 0


def _cmd_fm_count(args, out):
    out.write(_dumps({"d": args.d, "fm_count": fm_partner_count(args.d)}) + "\n")
    return 0


def _cmd_factorizations(args, out):
    table = [{"pair": p.to_list(), "rep": g.rep} for p, g in mukai_table(args.d)]
    out.write(_dumps({"d": args.d, "factorizations": table}) + "\n")
    return 0


def _cmd_fixed(args, out):
    report = classify_fixed_divisors(args.d)
    doc = report.to_dict()
    status = 0
    if args.oracle:
        bound = args.bound or 2 * args.d
        diff = _oracle_diff(args.d, bound, report.pairs())
        doc["oracle"] = {"bounds": [bound, 2 * bound], "agree": not diff}
        if diff:
            sys.stderr.write("oracle disagreement for d=%d\n" % args.d)
            sys.stderr.write("\n".join(diff) + "\n")
            status = 1
    out.write(_dumps(doc) + "\n")
    return status


def _cmd_scan(args, out):
    if args.d2 < args.d1:
        raise ValueError(f"empty range {args.d1}..{args.d2}")
    ds = range(args.d1, args.d2 + 1)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(scan_row, ds, chunksize=8))
    else:
        rows = [scan_row(d) for d in ds]
    if args.format == "tsv":
        out.write(TSV_HEADER + "\n")
        for row in rows:
            out.write(tsv_line(row) + "\n")
    else:
        for row in rows:
            out.write(_dumps(row) + "\n")
    return 0


def _cmd_cubic(args, out):
    out.write(_dumps({"two_d": args.two_d, "admissible": cubic_admissible(args.two_d)}) + "\n")
    return 0


def _cmd_ns_gram(args, out):
    cand = ReflectiveCandidate(args.alpha, args.m, args.jsq)
    gram = ns_gram_generic(args.d, cand)
    out.write(
        _dumps(
            {
                "d": args.d,
                "alpha": args.alpha,
                "m": args.m,
                "jsq": args.jsq,
                "gram": [list(r) for r in gram],
                "det": determinant(gram),
            }
        )
        + "\n"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="k3moduli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="elements of G_2d")
    p.add_argument("d", type=_positive)
    p.set_defaults(func=_cmd_group)

    p = sub.add_parser("fm-count", help="Fourier-Mukai partners at Picard rank one")
    p.add_argument("d", type=_positive)
    p.set_defaults(func=_cmd_fm_count)

    p = sub.add_parser("factorizations", help="coprime d = rs and their group elements")
    p.add_argument("d", type=_positive)
    p.set_defaults(func=_cmd_factorizations)

    p = sub.add_parser("fixed-divisors", help="Heegner divisor classes in fixed loci")
    p.add_argument("d", type=_positive)
    p.add_argument("--oracle", action="store_true", help="cross-check with the box search")
    p.add_argument("--bound", type=_positive, default=None, help="oracle box (default 2d)")
    p.set_defaults(func=_cmd_fixed)

    p = sub.add_parser("scan", help="one summary row per d in [d1, d2]")
    p.add_argument("d1", type=_positive)
    p.add_argument("d2", type=_positive)
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("cubic", help="cubic fourfold admissibility of 2d")
    p.add_argument("two_d", type=_even_positive)
    p.set_defaults(func=_cmd_cubic)

    p = sub.add_parser("ns-gram", help="Neron-Severi Gram of the generic point")
    p.add_argument("d", type=_positive)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--jsq", type=int, required=True)
    p.set_defaults(func=_cmd_ns_gram)
    return parser


def run(argv: list[str], out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ValueError as exc:
        sys.stderr.write(f"k3moduli {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
