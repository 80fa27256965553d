"""
Command-line front end.

    artin-density density   -g 2 -f 28 -a 3
    artin-density verify    -g 2 -f 4 -N 10000 -x 1000000
    artin-density classify  -g 21^7 --fmax 6
    artin-density scan      -g 2 -f 4 -x 100000
    artin-density heuristic -g 2 -f 4 -x 100000

Every command prints a human-aligned table by default; --format csv|json
emit the same rows as strings, so the two machine formats parse to equal data.
"""
import argparse
import csv
import json
import logging
import sys
from decimal import Decimal
from typing import Callable, TextIO

from pydantic import ValidationError

from artin_progressions.classifiers import classify
from artin_progressions.config import Settings, setup_logging
from artin_progressions.constants import (
    CSV_HEADER,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    HEURISTIC_CSV_HEADER,
    MAX_DIGITS,
    SCAN_CSV_HEADER,
    Method,
    OutputFormat,
)
from artin_progressions.density import delta_closed, delta_closed_v2, make_base
from artin_progressions.empirical import scan
from artin_progressions.exceptions import DensityError, InvalidArgumentError
from artin_progressions.pipeline import VerificationReport, run_verification
from artin_progressions.schemas import OutputRecord, Progression
from artin_progressions.utils import parse_int_expr, truncate_significant

logger = logging.getLogger(__name__)

CLASSIFY_HEADER = ["g", "f", "is_wud", "family", "zero_classes", "fair_shares"]
VERIFY_TABLE_HEADER = ["a", "coefficient", "closed", "series", "tail_bound", "empirical", "checks", "status"]

Row = dict[str, str]


# ---------------------------------
# Rendering
# ---------------------------------
def _text(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def record_row(record: OutputRecord) -> Row:
    return {key: _text(value) for key, value in record.model_dump(mode="json").items()}


def emit(rows: list[Row], header: list[str], fmt: OutputFormat, stream: TextIO):
    """Writes rows as an aligned table, CSV with the given header, or a JSON array."""
    if fmt == OutputFormat.CSV:
        writer = csv.DictWriter(stream, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    elif fmt == OutputFormat.JSON:
        json.dump(rows, stream, indent=2)
        stream.write("\n")
    else:
        widths = {key: max([len(key)] + [len(row[key]) for row in rows]) for key in header}
        stream.write("  ".join(key.ljust(widths[key]) for key in header).rstrip() + "\n")
        for row in rows:
            stream.write("  ".join(row[key].ljust(widths[key]) for key in header).rstrip() + "\n")


def _progressions(f: int, a: int | None) -> list[Progression]:
    if a is None:
        return Progression.all_classes(f)
    return [Progression(a=a, f=f)]


def _scan_bound(x: int, settings: Settings) -> int:
    if x > settings.MAX_SCAN_BOUND:
        raise InvalidArgumentError(f"scan bound x={x} exceeds MAX_SCAN_BOUND={settings.MAX_SCAN_BOUND}")
    return x


# ---------------------------------
# Commands
# ---------------------------------
def cmd_density(args, settings: Settings, stream: TextIO) -> int:
    make_base(args.g)
    evaluate = delta_closed_v2 if args.method == Method.CLOSED_V2 else delta_closed
    rows = []
    for progression in _progressions(args.f, args.a):
        value = evaluate(progression, args.g, args.digits)
        record = OutputRecord(
            g=args.g,
            f=args.f,
            a=progression.a,
            coefficient=value.coefficient,
            numeric=value.numeric,
            method=args.method,
        )
        rows.append(record_row(record))
    emit(rows, CSV_HEADER, args.format, stream)
    return EXIT_OK


def _verification_records(report: VerificationReport, digits: int) -> list[OutputRecord]:
    records = []
    for row in report.rows:
        common = dict(g=report.g, f=report.f, a=row.a, coefficient=row.closed.coefficient)
        numeric = truncate_significant(row.closed.numeric, digits)
        records += [
            OutputRecord(**common, numeric=numeric, method=Method.CLOSED, value=numeric),
            OutputRecord(
                **common,
                numeric=numeric,
                method=Method.CLOSED_V2,
                value=truncate_significant(row.closed_v2.numeric, digits),
            ),
            OutputRecord(
                **common,
                numeric=numeric,
                method=Method.SERIES,
                value=truncate_significant(row.series.partial_sum, digits),
                error=truncate_significant(row.series.tail_bound, digits),
            ),
            OutputRecord(
                **common,
                numeric=numeric,
                method=Method.EMPIRICAL,
                value=truncate_significant(Decimal(row.empirical.hits) / Decimal(row.empirical.primes_total), digits),
                error=truncate_significant(row.empirical_error, digits),
            ),
        ]
    return records


def _verification_table(report: VerificationReport, digits: int) -> list[Row]:
    rows = []
    for row in report.rows:
        checks = {
            "v2": row.closed_v2_agrees,
            "series": row.series_ok,
            "empirical": row.empirical_ok,
            "zero": row.zero_ok,
        }
        flags = " ".join(f"{name}:{'ok' if passed else 'FAIL'}" for name, passed in checks.items())
        if row.zero.triggered:
            flags += f" exact-zero({','.join(case.value for case in row.zero.cases)}; hits={row.empirical.hits})"
        rows.append({
            "a": str(row.a),
            "coefficient": _text(row.closed.coefficient),
            "closed": row.closed.render(digits),
            "series": str(truncate_significant(row.series.partial_sum, digits)),
            "tail_bound": str(truncate_significant(row.series.tail_bound, 3)),
            "empirical": f"{row.empirical.observed:.6f}",
            "checks": flags,
            "status": "pass" if row.passed else "FAIL",
        })
    return rows


def cmd_verify(args, settings: Settings, stream: TextIO) -> int:
    report = run_verification(
        args.g,
        args.f,
        N=args.N,
        x=_scan_bound(args.x, settings),
        tolerance=args.tolerance,
        workers=args.threads,
        segment_size=settings.SCAN_SEGMENT_SIZE,
        dps=settings.WORKING_PRECISION,
    )
    if args.format == OutputFormat.TABLE:
        emit(_verification_table(report, args.digits), VERIFY_TABLE_HEADER, args.format, stream)
    else:
        emit([record_row(r) for r in _verification_records(report, args.digits)], CSV_HEADER, args.format, stream)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def cmd_classify(args, settings: Settings, stream: TextIO) -> int:
    rows = []
    for entry in classify(args.g, args.fmax):
        rows.append({
            "g": str(entry.g),
            "f": str(entry.f),
            "is_wud": _text(entry.wud.is_wud),
            "family": entry.wud.family.value,
            "zero_classes": " ".join(str(a) for a in entry.zero_classes),
            "fair_shares": " ".join(f"{a}:{share}" for a, share in entry.fair_shares.items()),
        })
    emit(rows, CLASSIFY_HEADER, args.format, stream)
    return EXIT_OK


def cmd_scan(args, settings: Settings, stream: TextIO) -> int:
    wanted = {p.a for p in _progressions(args.f, args.a)}
    counts = scan(args.g, args.f, _scan_bound(args.x, settings), workers=args.threads, segment_size=settings.SCAN_SEGMENT_SIZE)
    rows = []
    for a, count in counts.items():
        if a not in wanted:
            continue
        predicted = delta_closed(Progression(a=a, f=args.f), args.g, args.digits).numeric
        observed = Decimal(count.hits) / Decimal(count.primes_total)
        rows.append({
            "a": str(a),
            "primes_in_class": str(count.primes_in_class),
            "hits": str(count.hits),
            "observed": str(truncate_significant(observed, args.digits)),
            "predicted": str(predicted),
            "abs_error": str(truncate_significant(abs(observed - predicted), 6)),
        })
    emit(rows, SCAN_CSV_HEADER, args.format, stream)
    return EXIT_OK


def cmd_heuristic(args, settings: Settings, stream: TextIO) -> int:
    wanted = {p.a for p in _progressions(args.f, args.a)}
    counts = scan(args.g, args.f, _scan_bound(args.x, settings), workers=args.threads, segment_size=settings.SCAN_SEGMENT_SIZE)
    rows = []
    for a, count in counts.items():
        if a not in wanted:
            continue
        predicted = delta_closed(Progression(a=a, f=args.f), args.g, args.digits).numeric
        main_term = predicted * count.li_x
        scaled = Decimal(count.hits) * count.li_x / Decimal(count.primes_total)
        relative = abs(count.heuristic_sum - scaled) / scaled if scaled else Decimal(0)
        rows.append({
            "a": str(a),
            "heuristic_sum": str(truncate_significant(count.heuristic_sum, args.digits)),
            "predicted_main_term": str(truncate_significant(main_term, args.digits)),
            "scaled_hits": str(truncate_significant(scaled, args.digits)),
            "relative_error": str(truncate_significant(relative, 6)),
        })
    emit(rows, HEURISTIC_CSV_HEADER, args.format, stream)
    return EXIT_OK


# ---------------------------------
# Parser
# ---------------------------------
def _integer(text: str) -> int:
    try:
        return parse_int_expr(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _digits(text: str) -> int:
    digits = _integer(text)
    if not 1 <= digits <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"--digits must lie in [1, {MAX_DIGITS}]")
    return digits


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artin-density",
        description="Densities of primes in arithmetic progressions having a prescribed primitive root.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-g", type=_integer, required=True, help="base g, e.g. 2, -3 or 21^7")
    common.add_argument("-f", type=_integer, default=1, help="modulus f (default 1)")
    common.add_argument("--format", choices=[fmt.value for fmt in OutputFormat], default=OutputFormat.TABLE.value)
    common.add_argument("--digits", type=_digits, default=settings.DEFAULT_DIGITS, help="significant digits, at most 30")
    common.add_argument("--log-level", default=None, help="overrides LOG_LEVEL")
    common.add_argument("--output", default=None, help="write to this file instead of stdout")

    scanning = argparse.ArgumentParser(add_help=False)
    scanning.add_argument("-x", type=_integer, default=settings.SCAN_BOUND, help="scan bound")
    scanning.add_argument("--threads", type=int, default=settings.SCAN_WORKERS, help="scan worker processes")

    density = subparsers.add_parser("density", parents=[common], help="exact closed-form densities")
    density.add_argument("-a", type=_integer, default=None, help="single residue class")
    density.add_argument("--method", choices=[Method.CLOSED.value, Method.CLOSED_V2.value], default=Method.CLOSED.value)
    density.set_defaults(handler=cmd_density)

    verify = subparsers.add_parser("verify", parents=[common, scanning], help="closed form vs series vs scan")
    verify.add_argument("-N", type=_integer, default=settings.SERIES_TRUNCATION, help="series truncation")
    verify.add_argument("--tolerance", type=float, default=settings.EMPIRICAL_TOLERANCE)
    verify.set_defaults(handler=cmd_verify)

    classify_parser = subparsers.add_parser("classify", parents=[common], help="WUD moduli and zero classes")
    classify_parser.add_argument("--fmax", type=_integer, default=24)
    classify_parser.set_defaults(handler=cmd_classify)

    for name, handler, text in (
        ("scan", cmd_scan, "per-class prime counts"),
        ("heuristic", cmd_heuristic, "heuristic weighted sums"),
    ):
        sub = subparsers.add_parser(name, parents=[common, scanning], help=text)
        sub.add_argument("-a", type=_integer, default=None, help="single residue class")
        sub.set_defaults(handler=handler)

    return parser


def _run(handler: Callable, args, settings: Settings) -> int:
    if args.output:
        with open(args.output, "w", newline="") as stream:
            return handler(args, settings, stream)
    return handler(args, settings, sys.stdout)


def main(argv: list[str] | None = None) -> int:
    settings = Settings.get_settings()
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID_INPUT if e.code else EXIT_OK

    setup_logging(args.log_level or settings.LOG_LEVEL)
    try:
        return _run(args.handler, args, settings)
    except (DensityError, ValidationError, ValueError) as e:
        logger.error(f"{args.command} rejected its input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
