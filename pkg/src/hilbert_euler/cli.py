"""Command-line front end.

Two subcommands: `compute` (the default when none is given) emits tables of
Euler characteristics, `verify` runs the identity checker. Output for a
given invocation is byte-deterministic: fixed column order, rows ordered by
n and then by partition enumeration order, no timestamps. JSON and CSV are
the stable formats; the table format is for reading, not parsing.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .partitions import iter_partitions
from .series import euler_product
from .strata import hilbert_euler_strata, stratum_report, symmetric_euler_strata
from .verify import GridConfig, VerificationReport, run_all

MODES = ("strata", "product", "both", "macdonald", "breakdown")
FORMATS = ("table", "json", "csv")


@dataclass(frozen=True, slots=True)
class CliConfig:
    euler_char: int = 0
    max_n: int = 20
    mode: str = "both"
    format: str = "table"
    verify_grid: GridConfig | None = None
    negative_control: bool = False


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if sep:
        try:
            return int(lo), int(hi)
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"expected LO..HI with integer bounds, got {text!r}")


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbert-euler",
        description="Euler characteristics of spaces of n points on a surface, "
        "computed by two independent routes.",
    )
    sub = parser.add_subparsers(dest="command")

    compute = sub.add_parser(
        "compute",
        help="emit e(X^[n]) (or related) for n = 0..max-n",
        description="Emit one row per n. Modes: strata and product are the two "
        "routes to e(X^[n]), both emits them side by side with a match flag, "
        "macdonald emits e(S^n X), breakdown emits one row per partition.",
    )
    compute.add_argument("--euler-char", "-e", type=int, required=True,
                         help="Euler characteristic of the surface (any integer)")
    compute.add_argument("--max-n", "-n", type=_non_negative, default=20,
                         help="largest number of points (default 20)")
    compute.add_argument("--mode", choices=MODES, default="both")
    compute.add_argument("--format", choices=FORMATS, default="table")

    verify = sub.add_parser(
        "verify",
        help="run all identity checks over a grid",
        description="Cross-check the two routes against each other and against "
        "brute-force oracles over a grid of (e, n) cells.",
    )
    verify.add_argument("--grid-e", type=_parse_range, default=(-6, 24),
                        metavar="LO..HI", help="Euler characteristic range (default -6..24)")
    verify.add_argument("--grid-n", type=_parse_range, default=(0, 30),
                        metavar="LO..HI", help="point count range (default 0..30)")
    verify.add_argument("--negative-control", action="store_true",
                        help="corrupt one route on purpose; the run must then fail")
    verify.add_argument("--format", choices=FORMATS, default="table")

    return parser


def _compute_rows(config: CliConfig) -> list[dict]:
    e, top = config.euler_char, config.max_n
    rows: list[dict] = []
    if config.mode == "product":
        coeffs = euler_product(e, top).integer_coefficients()
        rows = [{"n": n, "value": coeffs[n]} for n in range(top + 1)]
    elif config.mode == "strata":
        rows = [{"n": n, "value": hilbert_euler_strata(n, e)} for n in range(top + 1)]
    elif config.mode == "macdonald":
        rows = [{"n": n, "value": symmetric_euler_strata(n, e)} for n in range(top + 1)]
    elif config.mode == "both":
        coeffs = euler_product(e, top).integer_coefficients()
        for n in range(top + 1):
            strata_value = hilbert_euler_strata(n, e)
            rows.append({
                "n": n,
                "strata": strata_value,
                "product": coeffs[n],
                "match": strata_value == coeffs[n],
            })
    elif config.mode == "breakdown":
        for n in range(top + 1):
            for partition in iter_partitions(n):
                report = stratum_report(partition, e)
                rows.append({
                    "n": n,
                    "partition": str(partition),
                    "stratum_euler": report.stratum_euler.numerator,
                    "fiber_euler": report.fiber_euler,
                    "tilde_euler": report.tilde_euler.numerator,
                })
    else:
        raise ValueError(f"unknown mode {config.mode!r}")
    return rows


def _json_ready(rows: list[dict]) -> list[dict]:
    """Integers become decimal strings so no JSON consumer can round them."""
    out = []
    for row in rows:
        ready = {}
        for key, value in row.items():
            if key != "n" and isinstance(value, int) and not isinstance(value, bool):
                ready[key] = str(value)
            else:
                ready[key] = value
        out.append(ready)
    return out


def _emit_csv(fieldnames: list[str], rows: list[dict]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([_csv_value(row[name]) for name in fieldnames])


def _csv_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def _emit_table(fieldnames: list[str], rows: list[dict]) -> None:
    rendered = [[_str_value(row[name]) for name in fieldnames] for row in rows]
    widths = [
        max(len(name), *(len(line[i]) for line in rendered)) if rendered else len(name)
        for i, name in enumerate(fieldnames)
    ]
    print("  ".join(name.ljust(widths[i]) for i, name in enumerate(fieldnames)).rstrip())
    for line in rendered:
        print("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip())


def _str_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def cmd_compute(config: CliConfig) -> int:
    rows = _compute_rows(config)
    if config.mode == "both":
        # a row may never claim match with differing columns
        assert all(row["strata"] == row["product"] for row in rows if row["match"])
    fieldnames = list(rows[0]) if rows else ["n", "value"]
    if config.format == "json":
        document = {
            "euler_char": config.euler_char,
            "max_n": config.max_n,
            "mode": config.mode,
            "rows": _json_ready(rows),
        }
        print(json.dumps(document, indent=2))
    elif config.format == "csv":
        _emit_csv(fieldnames, rows)
    else:
        _emit_table(fieldnames, rows)
    if config.mode == "both" and not all(row["match"] for row in rows):
        bad = [str(row["n"]) for row in rows if not row["match"]]
        print(f"route mismatch at n = {', '.join(bad)}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(config: CliConfig) -> int:
    report = run_all(config.verify_grid, negative_control=config.negative_control)
    _emit_report(config, report)
    return 0 if report.all_passed else 1


def _emit_report(config: CliConfig, report: VerificationReport) -> None:
    grid = config.verify_grid
    if config.format == "json":
        document = {
            "grid_e": [grid.e_min, grid.e_max],
            "grid_n": [grid.n_min, grid.n_max],
            "negative_control": config.negative_control,
            "summary": {
                "total": report.total,
                "passed": report.passed,
                "failed": report.failed,
            },
            "checks": [
                {
                    "check": c.check,
                    "cell": c.cell,
                    "expected": c.expected,
                    "actual": c.actual,
                    "passed": c.passed,
                }
                for c in report.checks
            ],
        }
        print(json.dumps(document, indent=2))
        return
    if config.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["check", "cell", "expected", "actual", "passed"])
        for c in report.checks:
            writer.writerow([c.check, c.cell, c.expected, c.actual,
                             "true" if c.passed else "false"])
        return
    # table: per-check rollup, then every failing cell
    names: list[str] = []
    for c in report.checks:
        if c.check not in names:
            names.append(c.check)
    for name in names:
        cells = [c for c in report.checks if c.check == name]
        bad = sum(1 for c in cells if not c.passed)
        status = "all passed" if not bad else f"{bad} FAILED"
        print(f"{name}: {len(cells)} cells, {status}")
    for c in report.failures():
        print(f"FAIL {c.check} {c.cell}: expected {c.expected}, actual {c.actual}")
    verdict = "all passed" if report.all_passed else "FAILED"
    print(f"total: {report.total} checks, {report.passed} passed, "
          f"{report.failed} failed ({verdict})")


def main(argv: list[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    if args and args[0] not in ("compute", "verify") and args[0] not in ("-h", "--help"):
        args.insert(0, "compute")  # compute is the default subcommand
    merged = []
    skip = False
    for i, arg in enumerate(args):
        if skip:
            skip = False
            continue
        nxt = args[i + 1] if i + 1 < len(args) else None
        # a range with negative LO starts with "-", which argparse would
        # read as an option; glue it onto its flag
        if arg in ("--grid-e", "--grid-n") and nxt and nxt.startswith("-") and ".." in nxt:
            merged.append(f"{arg}={nxt}")
            skip = True
        else:
            merged.append(arg)
    args = merged
    parser = build_parser()
    namespace = parser.parse_args(args)
    if namespace.command == "verify":
        e_lo, e_hi = namespace.grid_e
        n_lo, n_hi = namespace.grid_n
        try:
            grid = GridConfig(e_min=e_lo, e_max=e_hi, n_min=n_lo, n_max=n_hi)
        except ValueError as exc:
            parser.error(str(exc))
        config = CliConfig(
            format=namespace.format,
            verify_grid=grid,
            negative_control=namespace.negative_control,
        )
        return cmd_verify(config)
    if namespace.command == "compute":
        config = CliConfig(
            euler_char=namespace.euler_char,
            max_n=namespace.max_n,
            mode=namespace.mode,
            format=namespace.format,
        )
        return cmd_compute(config)
    parser.error("a subcommand is required")
    return 2  # unreachable; parser.error raises SystemExit(2)


def run() -> None:
    sys.exit(main())
