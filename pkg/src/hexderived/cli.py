"""Command-line front end.

Usage::

    hexderived generate HDN3 4 [--format edgelist|json] [--out FILE]
    hexderived partition HDN3 4 --mode degree [--format csv|json]
    hexderived indices HDN3 4 --index F --index GA5 [--format text|csv|json]
    hexderived verify HDN3 F 4 8 [--format csv|json]
    hexderived sweep HDN3 all 4 10

Positional arguments may be replaced by ``--family``, ``--r``, ``--index``,
``--r-min`` and ``--r-max``. Exit codes: 0 success, 2 usage or domain error,
3 partition discrepancy, 1 unexpected failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Sequence

from .closed_forms import MAX_R, MIN_R, VerificationRow, rederive_polynomial, verify_all
from .constructions import ConstructionError, Family, build_family
from .formats import graph_to_json, write_edge_list
from .indices import INDICES, IndexDomainError, edge_sum_index, format_number, get_index
from .partitions import TableNotApplicable, compare_partitions, expected_partition, partition
from .tables import Mode, get_table

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISCREPANCY = 3


class UsageError(Exception):
    """Bad arguments that argparse cannot see (exit code 2)."""


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _num(value) -> str:
    if value is None:
        return ""
    return format_number(value)


def _json_num(value):
    if value is None:
        return None
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    return float(value)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family(args) -> Family:
    name = args.family_opt or args.family
    if name is None:
        raise UsageError("a family is required (HDN3, THDN3 or RHDN3)")
    return Family.parse(name)


def _r(args) -> int:
    r = args.r_opt if args.r_opt is not None else args.r
    if r is None:
        raise UsageError("a dimension r is required")
    return r


def _index_names(args) -> list[str] | None:
    names = list(args.index_opt or [])
    if getattr(args, "index", None):
        names.insert(0, args.index)
    if not names or any(n.lower() == "all" for n in names):
        return None
    resolved = []
    for n in names:
        try:
            resolved.append(get_index(n).name)
        except KeyError:
            raise UsageError(f"unknown index {n!r}; known: {', '.join(INDICES)}") from None
    return resolved


def _r_range(args, floor: int) -> range:
    lo = args.r_min_opt if args.r_min_opt is not None else args.r_min
    hi = args.r_max_opt if args.r_max_opt is not None else args.r_max
    if lo is None:
        raise UsageError("--r-min is required")
    if hi is None:
        hi = lo
    if not floor <= lo <= hi <= MAX_R:
        raise UsageError(f"need {floor} <= r_min <= r_max <= {MAX_R}, got r_min={lo} r_max={hi}")
    return range(lo, hi + 1)


# -- commands --------------------------------------------------------------


def cmd_generate(args) -> int:
    family, r = _family(args), _r(args)
    g = build_family(family, r)
    fmt = args.format or "edgelist"
    if fmt == "edgelist":
        text = write_edge_list(g, family.value, r)
    elif fmt == "json":
        text = graph_to_json(g, family.value, r)
    else:
        raise UsageError(f"generate supports edgelist or json, not {fmt}")
    _emit(text, args.out)
    return EXIT_OK


def cmd_partition(args) -> int:
    family, r = _family(args), _r(args)
    mode = Mode.parse(args.mode)
    g = build_family(family, r)
    actual = partition(g, mode)
    table = get_table(family, mode)
    note = ""
    try:
        expected = expected_partition(table, r)
    except TableNotApplicable as exc:
        expected, note = None, str(exc)
    if expected is None:
        keys = list(actual.counts)
        rows = [(k.lo, k.hi, actual[k], None, None) for k in keys]
        discrepancies = []
    else:
        keys = sorted(set(actual.counts) | set(expected.counts))
        rows = [(k.lo, k.hi, actual[k], expected[k], actual[k] - expected[k]) for k in keys]
        discrepancies = compare_partitions(actual, expected)
    fmt = args.format or "csv"
    if fmt == "csv":
        text = _csv(("lo", "hi", "count", "expected", "delta"), [["" if x is None else x for x in row] for row in rows])
    elif fmt == "json":
        doc = {
            "family": family.value,
            "r": r,
            "mode": mode.value,
            "table": table.label,
            "applicable": expected is not None,
            "note": note,
            "total": actual.total,
            "m": g.m,
            "rows": [dict(zip(("lo", "hi", "count", "expected", "delta"), row)) for row in rows],
            "discrepancies": len(discrepancies),
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        raise UsageError(f"partition supports csv or json, not {fmt}")
    _emit(text, args.out)
    if note:
        print(f"note: table not applicable: {note}", file=sys.stderr)
    if discrepancies:
        print(f"{len(discrepancies)} class(es) differ from {table.label}", file=sys.stderr)
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_indices(args) -> int:
    family, r = _family(args), _r(args)
    names = _index_names(args) or list(INDICES)
    g = build_family(family, r)
    values = [edge_sum_index(g, get_index(n), parallel=args.fast) for n in names]
    fmt = args.format or "text"
    if fmt == "text":
        text = "".join(f"{v.name} {v.formatted()} {v.basis.value}\n" for v in values)
    elif fmt == "csv":
        text = _csv(("family", "r", "index", "value", "mode"), [(family.value, r, v.name, v.formatted(), v.basis.value) for v in values])
    elif fmt == "json":
        doc = {
            "family": family.value,
            "r": r,
            "indices": [{"name": v.name, "value": _json_num(v.value), "mode": v.basis.value} for v in values],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        raise UsageError(f"indices supports text, csv or json, not {fmt}")
    _emit(text, args.out)
    return EXIT_OK


def _verify_rows(family: Family, names, rs, jobs: int) -> list[VerificationRow]:
    if jobs <= 1:
        return verify_all(family, rs, names)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        chunks = list(pool.map(lambda r: verify_all(family, [r], names), rs))
    return [row for chunk in chunks for row in chunk]


def cmd_verify(args) -> int:
    family = _family(args)
    rs = _r_range(args, MIN_R)
    names = _index_names(args)
    try:
        rows = _verify_rows(family, names, rs, args.jobs)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    counts = Counter(row.verdict_label for row in rows)
    summary = " ".join(f"{k}={counts[k]}" for k in sorted(counts))
    fmt = args.format or "csv"
    header = ("family", "index", "r", "direct", "closed", "abs_diff", "rel_diff", "verdict")
    if fmt == "csv":
        body = [
            (
                row.family.value,
                row.index,
                row.r,
                _num(row.direct),
                _num(row.closed),
                _num(row.abs_diff),
                _num(row.rel_diff),
                row.verdict_label,
            )
            for row in rows
        ]
        text = _csv(header, body) + f"# summary: {summary}\n"
    elif fmt == "json":
        doc = {
            "rows": [
                {
                    "family": row.family.value,
                    "index": row.index,
                    "r": row.r,
                    "direct": _json_num(row.direct),
                    "closed": _json_num(row.closed),
                    "abs_diff": _json_num(row.abs_diff),
                    "rel_diff": row.rel_diff,
                    "verdict": row.verdict_label,
                }
                for row in rows
            ],
            "summary": dict(sorted(counts.items())),
            "rederived": _rederived(family, {row.index for row in rows}),
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        raise UsageError(f"verify supports csv or json, not {fmt}")
    _emit(text, args.out)
    return EXIT_OK


def _rederived(family: Family, labels) -> dict[str, str]:
    out = {}
    for label in sorted(labels):
        name = label.split("[")[0]
        try:
            out[name] = str(rederive_polynomial(family, name))
        except ValueError:
            continue
    return out


def cmd_sweep(args) -> int:
    family = _family(args)
    rs = _r_range(args, 2)
    names = _index_names(args) or list(INDICES)

    def one(r):
        g = build_family(family, r)
        return [(family.value, name, r, edge_sum_index(g, get_index(name), parallel=args.fast).formatted()) for name in names]

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(one, rs))
    else:
        chunks = [one(r) for r in rs]
    rows = sorted((row for chunk in chunks for row in chunk), key=lambda t: (names.index(t[1]), t[2]))
    _emit(_csv(("family", "index", "r", "value"), rows), args.out)
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def _common(p: argparse.ArgumentParser, *, r: bool = True) -> None:
    p.add_argument("family", nargs="?", help="HDN3, THDN3 or RHDN3")
    p.add_argument("--family", dest="family_opt", metavar="FAMILY")
    if r:
        p.add_argument("r", nargs="?", type=int, help="dimension")
        p.add_argument("--r", dest="r_opt", type=int, metavar="R")
    p.add_argument("--format", choices=("edgelist", "json", "csv", "text"))
    p.add_argument("--out", help="write to this file instead of stdout")


def _range_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("index", nargs="?", help="index name or 'all'")
    p.add_argument("r_min", nargs="?", type=int)
    p.add_argument("r_max", nargs="?", type=int)
    p.add_argument("--index", dest="index_opt", action="append", metavar="NAME")
    p.add_argument("--r-min", dest="r_min_opt", type=int)
    p.add_argument("--r-max", dest="r_max_opt", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker threads across r (output order is unaffected)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexderived",
        description="Third-type hex-derived networks: generation, edge partitions, indices, formula checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a generated graph")
    _common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("partition", help="edge partition compared with the published table")
    _common(p)
    p.add_argument("mode_pos", nargs="?", metavar="mode")
    p.add_argument("--mode", default=None, help="degree or degree-sum")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("indices", help="compute topological indices")
    _common(p)
    p.add_argument("--index", dest="index_opt", action="append", metavar="NAME", help="repeatable; default all")
    p.add_argument("--fast", action="store_true", help="parallel float reduction (last-ulp nondeterminism)")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("verify", help="check printed closed forms against direct computation")
    _common(p, r=False)
    _range_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="index values over a range of r, long-format CSV")
    _common(p, r=False)
    _range_args(p)
    p.add_argument("--fast", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "partition":
        args.mode = args.mode or args.mode_pos or "degree"
    try:
        return args.func(args)
    except (UsageError, ConstructionError, IndexDomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
