"""Command-line entry point: ``bvfla <command> ...``.

Exit codes: 0 success, 1 law or theorem failure, 2 usage/I-O/parse error,
3 enumeration budget exhausted, 4 search found nothing.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bvf import format_degree, gamma, load_bvf
from .census import DEFAULT_BUDGET, EnumerationTask, enumerate_magmas
from .errors import BvflaError
from .fixtures import write_fixtures
from .ideals import BI_FORMS, CLASSES, classify
from .magma import INTEGER_OPS, LAW_FORMS, LAWS, Magma, check_law, load_table, sampled_law_check
from .search import DEFAULT_MAX_TRIALS, DEFAULT_Q, SearchSpec, search
from .theorems import FAIL, NOT_APPLICABLE, PASS, THEOREMS, run_all, run_family

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NONE = 4

LAW_ORDER = ("left_invertive", "medial", "paramedial", "associative", "commutative", "lemma_l1")


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _parse_at(M: Magma, items: Sequence[str], allowed) -> dict:
    """``NAME=x,y,z`` pairs; elements may be labels or indices."""
    out = {}
    for item in items or ():
        name, sep, rest = item.partition("=")
        if not sep or name not in allowed:
            raise UsageError(f"--at expects NAME=TUPLE with NAME in {sorted(allowed)}, got {item!r}")
        tokens = [t for t in rest.replace(",", " ").split() if t]
        try:
            out[name] = tuple(M.index(t) for t in tokens)
        except ValueError as exc:
            raise UsageError(f"--at {item!r}: {exc}") from None
    return out


def _tuple_text(M: Optional[Magma], tup) -> str:
    if M is None:
        return "(" + ",".join(map(str, tup)) + ")"
    return "(" + ",".join(M.labels(tup)) + ")"


# -- laws --------------------------------------------------------------------


def cmd_laws(args) -> int:
    if args.integers:
        return _laws_integers(args)
    if args.table is None:
        raise UsageError("laws needs a table path or --integers")
    M = load_table(args.table)
    at = _parse_at(M, args.at, LAWS)
    reports = [check_law(M, law, at.get(law)) for law in LAW_ORDER]
    e = M.left_identity
    if args.json:
        _emit({
            "order": M.order,
            "left_identity": None if e is None else {"index": e, "label": M.label(e)},
            "laws": {r.law: _law_json(M, r) for r in reports},
        })
    else:
        for r in reports:
            print(_law_line(M, r))
        print(f"left identity: {'none' if e is None else M.label(e)}")
    return EXIT_OK if reports[0].holds else EXIT_FAIL


def _law_json(M: Optional[Magma], r) -> dict:
    out = {"holds": r.holds, "form": LAW_FORMS[r.law], "witness": None}
    if not r.holds:
        out["witness"] = {"elements": list(r.witness), "values": list(r.values)}
        if M is not None and M.names:
            out["witness"]["labels"] = list(M.labels(r.witness))
            out["witness"]["value_labels"] = list(M.labels(r.values))
    return out


def _law_line(M: Optional[Magma], r) -> str:
    line = f"{r.law:<15} {LAW_FORMS[r.law]:<28} {'true' if r.holds else 'false'}"
    if not r.holds:
        lhs, rhs = r.values if M is None else M.labels(r.values)
        line += f"  witness {_tuple_text(M, r.witness)}: {lhs} != {rhs}"
    return line


def _laws_integers(args) -> int:
    if args.table is not None:
        raise UsageError("--integers and a table path are mutually exclusive")
    lo, hi = args.window
    reports = [sampled_law_check(args.integers, (lo, hi), law)
               for law in ("left_invertive", "associative", "commutative")]
    if args.json:
        _emit({
            "operation": args.integers,
            "window": [lo, hi],
            "laws": {r.law: _law_json(None, r) for r in reports},
        })
    else:
        print(f"operation {args.integers} on [{lo},{hi}] (sampled window)")
        for r in reports:
            print(_law_line(None, r))
    return EXIT_OK if reports[0].holds else EXIT_FAIL


# -- classify ----------------------------------------------------------------


def _load_subset(args, M: Magma):
    if args.gamma:
        return gamma(M.order)
    B = load_bvf(args.bvf)
    if B.order != M.order:
        raise UsageError(f"subset has {B.order} elements, table has {M.order}")
    return B


def cmd_classify(args) -> int:
    if args.gamma == (args.bvf is not None):
        raise UsageError("give exactly one of a BVF path or --gamma")
    M = load_table(args.table)
    B = _load_subset(args, M)
    at = _parse_at(M, args.at, CLASSES)
    c = classify(M, B, form=args.bi_form, at=at)
    if args.json:
        _emit({"bi_form": args.bi_form, "classes": c.to_json(M, args.decimal)})
        return EXIT_OK
    if args.decimal:
        print("degrees shown as approximate decimals (~)")
    for name in CLASSES:
        v = c[name]
        line = f"{name:<15} {'true' if v.holds else 'false'}"
        if v.witness is not None:
            line += "  " + _witness_text(M, v.witness, args.decimal)
        print(line)
    return EXIT_OK


def _witness_text(M, w, decimal=False) -> str:
    def deg(d):
        return format_degree(d, decimal)

    parts = [f"witness {_tuple_text(M, w.elements)}"]
    parts.append(f"pos {deg(w.pos[0])} {'<' if w.pos_fails else '>='} {deg(w.pos[1])}")
    parts.append(f"neg {deg(w.neg[0])} {'>' if w.neg_fails else '<='} {deg(w.neg[1])}")
    return ", ".join(parts) + f"  [{w.condition}]"


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    if (args.table is None) == (args.up_to_order is None):
        raise UsageError("give exactly one of a table path or --up-to-order")
    if args.up_to_order is not None and (args.bvf or args.gamma):
        raise UsageError("--bvf/--gamma need a single table, not --up-to-order")
    if args.samples < 0 or args.q < 1:
        raise UsageError("--samples must be >= 0 and --q >= 1")
    if args.table is not None:
        M = load_table(args.table)
        fixtures = [_check_order(load_bvf(p), M) for p in args.bvf or ()]
        if args.gamma:
            fixtures.append(gamma(M.order))
        reports = run_all(M, fixtures, args.seed, args.samples, args.q)
        return _print_reports(args, reports)
    magmas = []
    for n in range(1, args.up_to_order + 1):
        magmas.extend(enumerate_magmas(EnumerationTask(n)).magmas)
    families = run_family(magmas, args.seed, args.samples, args.q)
    return _print_family(args, magmas, families)


def _check_order(B, M):
    if B.order != M.order:
        raise UsageError(f"subset has {B.order} elements, table has {M.order}")
    return B


def _print_reports(args, reports) -> int:
    failed = any(r.status == FAIL for r in reports)
    if args.json:
        _emit({"all_applicable_pass": not failed, "reports": [r.to_json() for r in reports]})
    else:
        if not reports:
            print("nothing to check (no fixtures and no samples)")
        for r in reports:
            line = f"{r.id:<26} {r.status:<15} checked={r.checked}"
            if r.note:
                line += f"  ({r.note})"
            print(line)
            if r.witness is not None:
                print(f"    witness: {json.dumps(r.witness, sort_keys=True)}")
    return EXIT_FAIL if failed else EXIT_OK


def _print_family(args, magmas, families) -> int:
    summary = {tid: {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0, "checked": 0} for tid in THEOREMS}
    failures = []
    for M, reports in zip(magmas, families):
        for r in reports:
            summary[r.id][r.status] += 1
            summary[r.id]["checked"] += r.checked
            if r.status == FAIL:
                failures.append(r.to_json())
    if args.json:
        _emit({
            "magmas": len(magmas),
            "samples": args.samples,
            "seed": args.seed,
            "summary": summary,
            "failures": failures,
        })
    else:
        print(f"{len(magmas)} magmas, {args.samples} samples each, seed {args.seed}")
        for tid, s in summary.items():
            print(f"{tid:<26} pass={s[PASS]:<4} fail={s[FAIL]:<4} "
                  f"not_applicable={s[NOT_APPLICABLE]:<4} checked={s['checked']}")
    return EXIT_FAIL if failures else EXIT_OK


# -- enumerate ---------------------------------------------------------------


def cmd_enumerate(args) -> int:
    if args.order < 1 or (args.budget is not None and args.budget < 1):
        raise UsageError("--order and --budget must be positive")
    task = EnumerationTask(args.order, args.left_identity, args.iso, args.budget)
    census = enumerate_magmas(task)
    text = census.dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(json.dumps(census.header(), sort_keys=True))
    else:
        sys.stdout.write(text)
    if census.budget_exhausted:
        print("budget exhausted: census is partial", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


# -- search ------------------------------------------------------------------


def cmd_search(args) -> int:
    spec = SearchSpec(
        args.target, tuple(args.orders), args.q, args.seed, args.max_trials, not args.labeled
    )
    result = search(spec)
    hit = result.hit
    if hit is None:
        if args.json:
            _emit({"hit": None, "trials": result.trials, "magmas": result.magmas})
        else:
            print("none")
        return EXIT_NONE
    payload = {
        "trial": hit.trial,
        "trials": result.trials,
        "magmas": result.magmas,
        "table": [list(row) for row in hit.magma.table],
        "subset": hit.subset.to_json(),
        "classification": hit.classification.to_json(hit.magma),
    }
    if args.json:
        _emit({"hit": payload})
    else:
        print(f"hit at trial {hit.trial} ({result.magmas} magmas)")
        sys.stdout.write(hit.magma.to_text())
        print(json.dumps(hit.subset.to_json(), sort_keys=True))
        for name, flag in hit.classification.flags().items():
            print(f"{name:<15} {'true' if flag else 'false'}")
    return EXIT_OK


# -- fixtures ----------------------------------------------------------------


def cmd_fixtures(args) -> int:
    for path in write_fixtures(args.out):
        print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="bvfla", description="Finite LA-semigroups and bipolar-valued fuzzy ideals."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("laws", parents=[common], help="check structural laws of a table")
    p.add_argument("table", nargs="?")
    p.add_argument("--at", action="append", metavar="LAW=TUPLE",
                   help="report this tuple as the witness when the law fails there")
    p.add_argument("--integers", choices=sorted(INTEGER_OPS),
                   help="check an integer operation on a sampled window instead")
    p.add_argument("--window", nargs=2, type=int, default=(-5, 5), metavar=("LO", "HI"))
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("classify", parents=[common], help="classify a BVF subset")
    p.add_argument("table")
    p.add_argument("bvf", nargs="?")
    p.add_argument("--gamma", action="store_true", help="use the whole-carrier subset")
    p.add_argument("--at", action="append", metavar="CLASS=TUPLE",
                   help="report this tuple as the witness when the class fails there")
    p.add_argument("--bi-form", choices=BI_FORMS, default="xz")
    p.add_argument("--decimal", action="store_true", help="print approximate decimals")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="run the theorem suite")
    p.add_argument("table", nargs="?")
    p.add_argument("--up-to-order", type=int,
                   help="every left-invertive table of order 1..N instead of one table")
    p.add_argument("--bvf", action="append", metavar="PATH", help="fixture subset (repeatable)")
    p.add_argument("--gamma", action="store_true", help="add the whole-carrier subset as a fixture")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--q", type=int, default=DEFAULT_Q)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate left-invertive tables")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
    p.add_argument("--left-identity", action="store_true", help="keep tables with a left identity")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search-node budget")
    p.add_argument("--out", help="census file (default: stdout)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", parents=[common], help="search for a separating example")
    p.add_argument("--target", required=True, help='e.g. "interior & !two_sided"')
    p.add_argument("--orders", type=int, nargs="+", default=[4])
    p.add_argument("--q", type=int, default=DEFAULT_Q)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-trials", type=int, default=DEFAULT_MAX_TRIALS)
    p.add_argument("--labeled", action="store_true",
                   help="search labeled tables instead of isomorphism classes")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("fixtures", help="write the worked-example fixture files")
    p.add_argument("--out", default="fixtures")
    p.set_defaults(func=cmd_fixtures, json=False)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (OSError, BvflaError, ValueError) as exc:
        print(f"bvfla: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
