"""Command line front end.

Exit codes: 0 ok, 1 verification failure, 2 unsupported (open question),
3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Sequence, TextIO

from . import families, threefolds
from .invariants import FourfoldRecord
from .tower import ConfigError, TowerStepError, load_config, run_tower

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_UNSUPPORTED = 2
EXIT_INPUT = 3

RECORD_COLUMNS = ("rho", "K4", "K2c2", "chi_mK", "h11", "h22", "h13", "b3", "chiT")


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else _fmt(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "value") and hasattr(value, "name"):  # enums
        return value.value
    return value


def _grid(header: Sequence[str], rows: Sequence[Sequence], fmt: str, out: TextIO) -> None:
    if fmt == "tsv":
        print("\t".join(header), file=out)
        for row in rows:
            print("\t".join(_fmt(v) for v in row), file=out)
        return
    print("| " + " | ".join(header) + " |", file=out)
    print("|" + "---|" * len(header), file=out)
    for row in rows:
        print("| " + " | ".join(_fmt(v) for v in row) + " |", file=out)


def _emit_json(obj, out: TextIO) -> None:
    json.dump(_jsonable(obj), out, indent=2, ensure_ascii=False)
    out.write("\n")


def _print_records(labels: Sequence[str], records: Sequence[FourfoldRecord], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        _emit_json([dict(step=label, **rec.as_dict()) for label, rec in zip(labels, records)], out)
        return
    rows = [[label] + [getattr(rec, c) for c in RECORD_COLUMNS] for label, rec in zip(labels, records)]
    _grid(("step",) + RECORD_COLUMNS, rows, fmt, out)


def cmd_tables(args, out: TextIO, err: TextIO) -> int:
    numbers = [args.table] if args.table else range(1, 6)
    tables = [families.emit_table(k) for k in numbers]
    if args.format == "json":
        _emit_json([
            {
                "table": t.number,
                "title": t.title,
                "columns": list(t.columns),
                "rows": [{"r": row.r, **dict(zip(t.columns, row.values))} for row in t.rows],
                "footnote": t.footnote,
            }
            for t in tables
        ], out)
    else:
        for i, t in enumerate(tables):
            if i:
                print(file=out)
            if args.format == "tsv":
                print(f"# Table {t.number}: {t.title}", file=out)
                _grid(t.columns, [row.values for row in t.rows], "tsv", out)
            else:
                print(f"Table {t.number}: {t.title}\n", file=out)
                _grid(("r",) + t.columns, [(row.r,) + row.values for row in t.rows], "md", out)
                print(f"\n{t.footnote}", file=out)
    if not args.check:
        return EXIT_OK
    mismatches = [m for m in families.check_tables() if m.table in numbers]
    for m in mismatches:
        print(f"mismatch: table {m.table}, row r={m.r}, column {m.column}: got {m.got}, want {m.want}", file=err)
    if mismatches:
        return EXIT_MISMATCH
    print(f"check: all cells of tables {', '.join(map(str, numbers))} match", file=err)
    return EXIT_OK


def cmd_tower(args, out: TextIO, err: TextIO) -> int:
    config = load_config(args.config)
    records = run_tower(config)
    if args.trace:
        labels = ["start"] + [f"{i}:{s.op}" for i, s in enumerate(config.steps, start=1)]
        _print_records(labels, records, args.format, out)
    else:
        _print_records(["final"], records[-1:], args.format, out)
    return EXIT_OK


def cmd_family(args, out: TextIO, err: TextIO) -> int:
    spec = families.family(args.family, args.r)
    if args.format == "json":
        _emit_json({
            "family": spec.family,
            "r": spec.r,
            "record": spec.record.as_dict(),
            "base": spec.base.as_dict() if spec.base else None,
            "surface": asdict(spec.surface) if spec.surface else None,
        }, out)
    else:
        _print_records([f"{spec.family}(r={spec.r})"], [spec.record], args.format, out)
    return EXIT_OK


def cmd_audit(args, out: TextIO, err: TextIO) -> int:
    entries = families.general_position_audit(args.points)
    if args.format == "json":
        _emit_json([asdict(e) for e in entries], out)
    else:
        _grid(("curve", "degree", "class"), [(e.curve, e.degree, e.cls.value) for e in entries], args.format, out)
    return EXIT_OK


def cmd_certify(args, out: TextIO, err: TextIO) -> int:
    report = families.decomposition_certificate(args.family, args.r)
    if args.format == "json":
        _emit_json({**asdict(report), "ok": report.ok}, out)
    else:
        rhs = " ".join(f"{'-' if c < 0 else '+'} {_fmt(abs(c))}*{label}" for c, label, _ in report.terms)
        print(f"{report.lhs} = {rhs.removeprefix('+ ')}", file=out)
        _grid(("check", "result"), [
            ("identity_ok", report.identity_ok),
            ("coefficients_nonneg", report.coefficients_nonneg),
            ("K4_positive", report.K4_positive),
        ], args.format, out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_bounds(args, out: TextIO, err: TextIO) -> int:
    scan = threefolds.elementary_bound_scan(args.min_rho)
    if args.format == "json":
        _emit_json({
            "rows": [
                {"base": asdict(row.base), "r_max": row.r_max, "rho_X_max": row.rho_X_max,
                 "bound": row.describe()}
                for row in scan.rows
            ],
            "global_max_rho_X": scan.global_max_rho_X,
        }, out)
    else:
        _grid(("Y0", "-K^3", "rho", "kind", "bound"),
              [(r.base.name, r.base.minusK3, r.base.rho, r.base.kind.value, r.describe()) for r in scan.rows],
              args.format, out)
        print(f"\nglobal bound: rho_X <= {scan.global_max_rho_X}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fano4", description="Exact invariants of Fano 4-folds built from P^4.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("md", "tsv", "json"), default="md")
        p.set_defaults(func=func)
        return p

    p = add("tables", cmd_tables, "emit the five invariant tables")
    p.add_argument("--check", action="store_true", help="compare every cell with the published tables")
    p.add_argument("--table", type=int, choices=range(1, 6), help="only this table")

    p = add("tower", cmd_tower, "evaluate a tower config file")
    p.add_argument("config")
    p.add_argument("--trace", action="store_true", help="print the record after every step")

    p = add("family", cmd_family, "invariants of one family member")
    p.add_argument("family", choices=("W", "A", "B", "C", "E", "cone"))
    p.add_argument("--r", type=int, required=True)

    p = add("audit", cmd_audit, "general linear position audit")
    p.add_argument("--points", type=int, required=True)

    p = add("certify", cmd_certify, "check a positivity decomposition of -K")
    p.add_argument("family", choices=("A", "B", "C"))
    p.add_argument("--r", type=int, required=True)

    p = add("bounds", cmd_bounds, "Picard number bound scan over 3-fold bases")
    p.add_argument("--min-rho", type=int, default=6)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out, err)
    except families.UnsupportedOpenQuestion as exc:
        print(f"unsupported: {exc}", file=err)
        return EXIT_UNSUPPORTED
    except ConfigError as exc:
        print(f"{args.config}:{exc.line}:{exc.column}: {exc.message}", file=err)
        return EXIT_INPUT
    except TowerStepError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
