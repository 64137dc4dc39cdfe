"""Command-line front end.

Exit codes: 0 success or match, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import tables
from .io import from_dot, from_json, to_dot, to_json
from .operations import decimate, interleave
from .presentation import Presentation, label_product
from .spectral import hausdorff_dimension
from .suites import SUITES, run_suite
from .translate import build_translate_presentation, multiplier_set, ternary_stats, to_ternary

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

STAT_FIELDS = ["M", "ternary", "d3", "n3", "b3", "s3", "vertices", "beta", "dimension"]


class UsageError(Exception):
    pass


def parse_multipliers(text: str) -> tuple[int, ...]:
    try:
        values = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise UsageError(f"multipliers must be positive integers, got {text!r}") from None
    try:
        return multiplier_set(values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def load_source(text: str) -> Presentation:
    """A multiplier list like ``1,19`` or a path to a ``.json`` / ``.dot`` presentation."""
    path = Path(text)
    if path.suffix in (".json", ".dot") and path.exists():
        data = path.read_text()
        return from_json(data) if path.suffix == ".json" else from_dot(data)
    return build_translate_presentation(parse_multipliers(text))


def parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like 1..243, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"empty or invalid range {text!r}")
    return range(lo, hi + 1)


_OPS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "!=": lambda a, b: a != b,
    "=": lambda a, b: a == b,
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
}


def parse_filter(text: str):
    """``s3=3``, ``b3<=2``, ``mod3=1`` ... -> predicate on a stats row."""
    for sym in ("<=", ">=", "!=", "=", "<", ">"):
        if sym in text:
            key, val = text.split(sym, 1)
            key = key.strip()
            if key not in ("d3", "n3", "b3", "s3", "mod3"):
                raise UsageError(f"unknown filter field {key!r}")
            try:
                val = int(val)
            except ValueError:
                raise UsageError(f"filter value must be an integer: {text!r}") from None
            op = _OPS[sym]
            return lambda row: op(row["M"] % 3 if key == "mod3" else row[key], val)
    raise UsageError(f"cannot parse filter {text!r}")


def stats_row(m: int, with_dimension: bool = True) -> dict:
    st = ternary_stats(m)
    row = {"M": m, "ternary": to_ternary(m), "d3": st.d3, "n3": st.n3, "b3": st.b3, "s3": st.s3}
    if with_dimension:
        rep = hausdorff_dimension(build_translate_presentation([1, m]))
        row.update(vertices=rep.vertex_count, beta=rep.beta, dimension=rep.dimension)
    return row


def _write_presentation(p: Presentation, fmt: str, out) -> None:
    if fmt == "dot":
        out.write(to_dot(p))
    elif fmt == "json":
        json.dump(to_json(p), out, indent=2)
        out.write("\n")
    else:
        raise UsageError(f"presentations can be written as dot or json, not {fmt}")


def _write_csv(rows, fields, out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(fields)
    for row in rows:
        w.writerow([tables.format_cell(row.get(f)) for f in fields])


# --- commands -----------------------------------------------------------------


def cmd_present(args, out) -> int:
    p = build_translate_presentation(parse_multipliers(args.multipliers))
    _write_presentation(p, args.format or "dot", out)
    return EXIT_OK


def cmd_dim(args, out) -> int:
    ms = parse_multipliers(args.multipliers)
    rep = hausdorff_dimension(build_translate_presentation(ms))
    data = {"multipliers": list(ms), **rep.as_dict()}
    data["beta_6dp"] = f"{rep.beta:.6f}"
    data["dimension_6dp"] = f"{rep.dimension:.6f}"
    if args.format == "csv":
        _write_csv([{"multipliers": args.multipliers, **data}],
                   ["multipliers", "vertex_count", "edge_count", "beta", "dimension"], out)
    else:
        json.dump(data, out, indent=2)
        out.write("\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.table_id not in tables.TABLE_IDS:
        raise UsageError(f"unknown table {args.table_id!r}; expected one of {', '.join(tables.TABLE_IDS)}")
    res = tables.compare(args.table_id, tolerance=args.tolerance)
    _write_csv(res.rows, res.columns, out)
    if res.ok:
        return EXIT_OK
    for m in res.mismatches:
        print(
            f"mismatch row {m['key']} column {m['column']}: "
            f"computed {tables.format_cell(m['got'])} ({m['got']!r}) expected {tables.format_cell(m['expected'])}",
            file=sys.stderr,
        )
    return EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)}")
    reports = run_suite(args.suite, k_max=args.k_max, bound=args.bound, jobs=args.jobs)
    ok = all(r.ok for r in reports)
    json.dump({"suite": args.suite, "ok": ok, "reports": [r.as_dict() for r in reports]},
              out, indent=2, default=float)
    out.write("\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_stats(args, out) -> int:
    ms = []
    for tok in args.values:
        try:
            m = int(tok)
        except ValueError:
            raise UsageError(f"M must be a positive integer, got {tok!r}") from None
        if m < 1:
            raise UsageError("M must be >= 1")
        ms.append(m)
    _write_csv(_map(stats_row, ms, args.jobs), STAT_FIELDS, out)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    rng = parse_range(args.range)
    preds = [parse_filter(f) for f in args.filter or []]
    cheap = [stats_row(m, with_dimension=False) for m in rng]
    keep = [row["M"] for row in cheap if all(pred(row) for pred in preds)]
    _write_csv(_map(stats_row, keep, args.jobs), STAT_FIELDS, out)
    return EXIT_OK


def cmd_interleave(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    _write_presentation(interleave(load_source(args.source), args.n), args.format or "json", out)
    return EXIT_OK


def cmd_decimate(args, out) -> int:
    if args.m < 1 or args.j < 0:
        raise UsageError("need --j >= 0 and --m >= 1")
    _write_presentation(decimate(load_source(args.source), args.j, args.m), args.format or "json", out)
    return EXIT_OK


def cmd_intersect(args, out) -> int:
    p = load_source(args.first)
    q = load_source(args.second)
    _write_presentation(label_product(p, q), args.format or "json", out)
    return EXIT_OK


def _map(fn, items, jobs):
    items = list(items)
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(fn, items, chunksize=16))
    return [fn(x) for x in items]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["dot", "json", "csv"])
    common.add_argument("--tolerance", type=float, default=tables.DEFAULT_TOLERANCE,
                        help="float tolerance for table comparisons (default 5e-7)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("-o", "--output", help="write to a file instead of stdout")

    parser = argparse.ArgumentParser(prog="ternary-pathsets", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", parents=[common], help="write the presentation of X(M1,...,Mn)")
    p.add_argument("multipliers", help="comma-separated, e.g. 1,19")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("dim", parents=[common], help="Perron eigenvalue and Hausdorff dimension")
    p.add_argument("multipliers")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("table", parents=[common], help="regenerate a reference table as CSV")
    p.add_argument("table_id", help="one of " + ", ".join(tables.TABLE_IDS))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p.add_argument("suite", help="one of " + ", ".join(SUITES))
    p.add_argument("--k-max", type=int)
    p.add_argument("--bound", type=int, help="upper M for the alpha2 scan")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", parents=[common], help="ternary statistics and dimension per M")
    p.add_argument("values", nargs="+", metavar="M")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("scan", parents=[common], help="stats over a range of M with filters")
    p.add_argument("range", help="e.g. 1..243")
    p.add_argument("--filter", action="append", help="e.g. s3=3, b3<=2, mod3=1 (repeatable)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("interleave", parents=[common], help="n-interleaving of a presentation")
    p.add_argument("source", help="multiplier list or .json/.dot file")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_interleave)

    p = sub.add_parser("decimate", parents=[common], help="decimation x -> (x_j, x_{j+m}, ...)")
    p.add_argument("source")
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_decimate)

    p = sub.add_parser("intersect", parents=[common], help="intersection of two path sets")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_intersect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
