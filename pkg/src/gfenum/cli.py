"""Command-line front end: every computation as reproducible table output.

Each subcommand renders one table, as TSV (default) or JSON, to stdout or
to ``--output PATH``.  Output is byte-identical across runs for identical
arguments.  Exit codes: 0 success, 1 verification failures (``verify``
only), 2 usage error, 3 internal consistency error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .asymptotics import asymptotic_report
from .generators import beta_table, primitive_counts
from .mzv import (
    DEPTH_DIAGONAL_CHECKED_MAX,
    CrossCheckError,
    mzv_counts,
)
from .series import IndexOutOfRange, WeightMismatch, ZeroConstantTerm
from .transforms import (
    NegativeExponent,
    NonIntegerExponent,
    NonUnitConstant,
    euler_expand,
)
from .verify import run_all

_INTERNAL_ERRORS = (
    CrossCheckError,
    IndexOutOfRange,
    NegativeExponent,
    NonIntegerExponent,
    NonUnitConstant,
    WeightMismatch,
    ZeroConstantTerm,
)

Cell = int | float | str


@dataclass
class OutputTable:
    columns: list[str]
    rows: list[list[Cell]]

    def to_tsv(self) -> str:
        lines = ["\t".join(self.columns)]
        for row in self.rows:
            lines.append("\t".join(_render_cell(cell) for cell in row))
        return "\n".join(lines) + "\n"

    def to_json(self, command: str) -> str:
        doc = {
            "columns": self.columns,
            "rows": self.rows,
            "meta": {"command": command, "version": __version__},
        }
        return json.dumps(doc) + "\n"


def _render_cell(cell: Cell) -> str:
    # ints render as plain decimal strings, never scientific notation
    if isinstance(cell, bool):
        raise TypeError("boolean cells are not part of the table format")
    if isinstance(cell, (int, Fraction)):
        return str(cell)
    if isinstance(cell, float):
        return repr(cell)
    return cell


def _beta_handler(args) -> tuple[OutputTable, list[str], int]:
    max_m = args.max_degree
    table = beta_table(max_m)
    max_u = 0 if max_m == 0 else max(2, max_m - (max_m % 2))
    columns = ["m"] + [f"u={u}" for u in range(0, max_u + 1, 2)]
    rows: list[list[Cell]] = []
    for m in range(max_m + 1):
        row: list[Cell] = [m]
        for u in range(0, max_u + 1, 2):
            if u <= m or (m, u) == (1, 2):
                row.append(table.get(m, u))
            else:
                row.append("")
        rows.append(row)
    return OutputTable(columns, rows), [], 0


def _primitives_handler(args) -> tuple[OutputTable, list[str], int]:
    counts = primitive_counts(args.max_degree)
    rows: list[list[Cell]] = [[m + 1, c] for m, c in enumerate(counts)]
    return OutputTable(["m", "P_m"], rows), [], 0


def _euler_handler(args, min_degree: int, column: str) -> tuple[OutputTable, list[str], int]:
    max_m = args.max_degree
    exponents = {m + 1: p for m, p in enumerate(primitive_counts(max_m))}
    series = euler_expand(exponents, min_degree, max_m)
    rows: list[list[Cell]] = [[m, series[m]] for m in range(1, max_m + 1)]
    return OutputTable(["m", column], rows), [], 0


def _mzv_handler(args) -> tuple[OutputTable, list[str], int]:
    counts = mzv_counts(args.max_weight)
    euler_sums = args.euler_sums
    column = "M" if euler_sums else "D"
    lookup = counts.euler_count if euler_sums else counts.mzv_count
    rows: list[list[Cell]] = []
    for w, d in counts.grid():
        note = ""
        if not euler_sums and w == 3 * d and d > DEPTH_DIAGONAL_CHECKED_MAX:
            note = "extrapolated beyond checked range"
        rows.append([w, d, lookup(w, d), note])
    return OutputTable(["w", "d", column, "note"], rows), [], 0


def _asymptote_handler(args) -> tuple[OutputTable, list[str], int]:
    report = asymptotic_report(args.max_degree)
    rows: list[list[Cell]] = [
        ["r", report.root],
        ["C", report.constant],
        ["abs(r^4-r^3-1)", report.quartic_residual],
        ["abs(1-1/r-1/r^4)", report.reciprocal_residual],
    ]
    for m, ratio in report.ratios:
        rows.append([f"P_{m}/r^{m}", ratio])
    return OutputTable(["quantity", "value"], rows), [], 0


def _verify_handler(args) -> tuple[OutputTable, list[str], int]:
    report = run_all(args.data)
    rows: list[list[Cell]] = [
        [r.claim_id, r.status, r.expected, r.actual] for r in report.results
    ]
    notes = list(report.notes)
    notes.append(f"{report.passed} passed, {report.failed} failed")
    return OutputTable(["claim", "status", "expected", "actual"], rows), notes, (
        0 if report.ok else 1
    )


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("tsv", "json"), default="tsv", help="output format"
    )
    common.add_argument("--output", default=None, help="write to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="gfenum",
        description="exact generating-function tables for graded enumeration conjectures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("beta", parents=[common], help="bigraded dimension grid")
    p.add_argument("--max-degree", type=int, default=20)

    p = sub.add_parser("primitives", parents=[common], help="primitive counts P_m")
    p.add_argument("--max-degree", type=int, default=20)

    p = sub.add_parser("knots", parents=[common], help="knot invariant counts V_m")
    p.add_argument("--max-degree", type=int, default=20)

    p = sub.add_parser("framed", parents=[common], help="framed-knot invariant counts F_m")
    p.add_argument("--max-degree", type=int, default=20)

    p = sub.add_parser("mzv", parents=[common], help="irreducible counts by weight and depth")
    p.add_argument("--max-weight", type=int, default=23)
    p.add_argument("--euler-sums", action="store_true", help="tabulate Euler-sum counts")

    p = sub.add_parser("asymptote", parents=[common], help="growth root, limit constant, ratios")
    p.add_argument("--max-degree", type=int, default=40)

    p = sub.add_parser("verify", parents=[common], help="replay the reference data")
    p.add_argument("--data", default=None, help="override the reference data file")

    return parser


def _validate(args, parser: argparse.ArgumentParser) -> None:
    if args.command == "beta" and args.max_degree < 0:
        parser.error("beta: --max-degree must be >= 0")
    if args.command in ("primitives", "knots", "framed") and args.max_degree < 1:
        parser.error(f"{args.command}: --max-degree must be >= 1")
    if args.command == "mzv" and args.max_weight < 3:
        parser.error("mzv: --max-weight must be >= 3")
    if args.command == "asymptote" and args.max_degree < 2:
        parser.error("asymptote: --max-degree must be >= 2")


_HANDLERS = {
    "beta": _beta_handler,
    "primitives": _primitives_handler,
    "knots": lambda args: _euler_handler(args, 2, "V_m"),
    "framed": lambda args: _euler_handler(args, 1, "F_m"),
    "mzv": _mzv_handler,
    "asymptote": _asymptote_handler,
    "verify": _verify_handler,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args, parser)
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (None, 0) else int(code)

    try:
        table, notes, code = _HANDLERS[args.command](args)
    except _INTERNAL_ERRORS as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3

    rendered = table.to_json(args.command) if args.format == "json" else table.to_tsv()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)
    for note in notes:
        print(note, file=sys.stderr)
    return code


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
