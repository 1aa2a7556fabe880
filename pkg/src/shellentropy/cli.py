"""Command-line front end.

Exit codes: 0 success, 1 validation or check failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from typing import Optional, Sequence

from . import figure
from .continuum import fit_log_linear
from .exceptions import DatasetParseError, InconsistentRecord, UnsupportedNucleus
from .measures import INGESTION_TOLERANCE, NormalizedDistribution, full_report, shannon_entropy
from .occupancy import (
    MAX_IPM_Z,
    depletion,
    ipm_occupation,
    load_dataset,
    load_reference_entropies,
    occupation_to_distribution,
)
from .tables import DIVERGENT, bits_scale, build_table, check_table, format_text

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(value: Optional[float], precision: int) -> str:
    return DIVERGENT if value is None else f"{value:.{precision}f}"


def _report_lines(report, precision: int, bits: bool) -> list[str]:
    scale = bits_scale(bits)
    unit = "bits" if bits else "nats"

    def ent(v):
        return None if v is None else v * scale

    rows = [
        ("k", str(report.k)),
        (f"S    [{unit}]", _fmt(ent(report.shannon_jaynes), precision)),
        ("E", _fmt(report.onicescu_energy, precision)),
        ("S_E", _fmt(report.onicescu_information, precision)),
        (f"S_0  [{unit}]", _fmt(ent(report.minimum_uncertainty), precision)),
        (f"F    [{unit}]", _fmt(ent(report.stotland_excess), precision)),
        (f"S_F  [{unit}]", _fmt(ent(report.stotland_total), precision)),
    ]
    return [f"{name:<12} {value}" for name, value in rows]


def _parse_values(text: str) -> list[float]:
    try:
        return [float(v) for v in text.replace("\n", ",").split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse probabilities: {exc}") from None


def cmd_compute(args) -> int:
    if args.p is None and args.file is None:
        raise UsageError("compute needs --p or --file")
    if args.file is not None:
        with open(args.file, encoding="utf-8") as fh:
            lines = [l for l in fh if not l.lstrip().startswith("#")]
        values = _parse_values("".join(lines))
    else:
        values = _parse_values(args.p)
    if args.renormalize:
        dist = NormalizedDistribution.renormalized(values, args.tolerance)
    else:
        dist = NormalizedDistribution(tuple(values), args.tolerance)
    print("\n".join(_report_lines(full_report(dist), args.precision, args.bits)))
    return EXIT_OK


def cmd_table(args) -> int:
    records = load_dataset(args.dataset)
    table = build_table(records, args.case)
    scale = bits_scale(args.bits)
    cells = table.cells(args.precision, scale)
    if args.csv:
        print(",".join(table.header))
        for row in cells:
            print(",".join(row))
    else:
        print(format_text(table.header, cells))
    if not args.check:
        return EXIT_OK
    checks = check_table(table, load_reference_entropies(args.reference))
    for c in checks:
        if not c.ok:
            print(f"MISMATCH {c.label}: " + "; ".join(c.mismatches))
    good = sum(c.ok for c in checks)
    print(f"{good}/{len(checks)} rows match")
    return EXIT_OK if good == len(checks) else EXIT_FAIL


def cmd_depletion(args) -> int:
    records = load_dataset(args.dataset)
    case_a = []
    for rec in records:
        rep = depletion(rec)
        holes = " ".join(f"{s}:{h:.3f}" for s, h in rep.holes.items())
        print(f"{rep.label:<12} depletion {100 * rep.depletion:6.{max(args.precision - 2, 1)}f}%   holes {holes}")
        if rec.case_tag == "A" and rec.proton_number >= 6:
            case_a.append(rep.depletion)
    if case_a:
        mean = math.fsum(case_a) / len(case_a)
        print(f"case A mean (Z >= 6, {len(case_a)} nuclei): {100 * mean:.{max(args.precision - 2, 1)}f}%")
    return EXIT_OK


def _atomic_write(files: dict[str, str]) -> None:
    """Write every file or none of them (new files are removed on failure)."""
    staged, created = [], []
    try:
        for path, text in files.items():
            if os.path.isdir(path):
                raise IsADirectoryError(f"{path} is a directory")
            fd, tmp = tempfile.mkstemp(dir=os.path.dirname(os.path.abspath(path)), suffix=".tmp")
            staged.append((tmp, path))
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
        for tmp, path in staged:
            existed = os.path.exists(path)
            os.replace(tmp, path)
            if not existed:
                created.append(path)
    except OSError:
        for tmp, _ in staged:
            if os.path.exists(tmp):
                os.unlink(tmp)
        for path in created:
            os.unlink(path)
        raise


def cmd_fig1(args) -> int:
    if args.a is None or args.b is None:
        raise UsageError(
            "fig1 needs both --a and --b: coefficients of the continuous law "
            "S = a + b ln Z are not bundled; use published values or derive them with `fit`"
        )
    records = load_dataset(args.dataset)
    points = figure.figure_points(records, args.a, args.b, case=args.case)
    prefix = args.output
    csv_path, svg_path = prefix + ".csv", prefix + ".svg"
    try:
        _atomic_write({csv_path: figure.render_csv(points), svg_path: figure.render_svg(points)})
    except OSError as exc:
        print(f"error: cannot write {prefix}.{{csv,svg}}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    n = sum(p.series == "discrete" for p in points)
    print(f"wrote {csv_path} ({n} discrete points) and {svg_path}")
    return EXIT_OK


def cmd_ipm(args) -> int:
    if not 1 <= args.Z <= MAX_IPM_Z:
        raise UsageError(f"Z must be between 1 and {MAX_IPM_Z}")
    rec = ipm_occupation(args.Z)
    dist = occupation_to_distribution(rec)
    print(f"IPM filling for Z={args.Z}")
    for shell, n in rec.occupations.items():
        print(f"  {shell}: n = {n:.{args.precision}f}  ({n * shell.degeneracy:g}/{shell.degeneracy})")
    print("p = [" + ", ".join(f"{p:.{args.precision}f}" for p in dist) + "]")
    print("\n".join(_report_lines(full_report(dist), args.precision, args.bits)))
    return EXIT_OK


def cmd_fit(args) -> int:
    records = [r for r in load_dataset(args.dataset) if r.case_tag == args.case]
    points = [(r.proton_number, shannon_entropy(occupation_to_distribution(r))) for r in records]
    fit = fit_log_linear(points)
    p = args.precision
    print(f"S_J = a + b ln Z over {fit.point_count} case {args.case} points")
    print(f"a            {fit.intercept:.{p}f}")
    print(f"b            {fit.slope:.{p}f}")
    print(f"rms residual {fit.rms_residual:.{p}f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=3, help="decimals printed (default 3)")
    common.add_argument("--bits", action="store_true", help="display entropies in bits")
    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("--dataset", default=None, help="occupation CSV (default: bundled table)")

    parser = argparse.ArgumentParser(
        prog="shellentropy",
        description="Information entropies of nuclear shell occupation probabilities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="measures of one distribution")
    p.add_argument("--p", help="comma-separated probabilities")
    p.add_argument("--file", help="file of probabilities (comma or newline separated)")
    p.add_argument("--renormalize", action="store_true", help="divide by the sum first")
    p.add_argument(
        "--tolerance", type=float, default=INGESTION_TOLERANCE,
        help=f"allowed |sum - 1| (default {INGESTION_TOLERANCE})",
    )
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", parents=[common, data], help="entropy table of the dataset")
    p.add_argument("--case", choices=("A", "B", "C"))
    p.add_argument("--check", action="store_true", help="compare with tabulated entropies")
    p.add_argument("--reference", default=None, help="tabulated entropies CSV (default: bundled)")
    p.add_argument("--csv", action="store_true", help="comma-separated output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("depletion", parents=[common, data], help="Fermi-sea depletion per record")
    p.set_defaults(func=cmd_depletion)

    p = sub.add_parser("fig1", parents=[data], help="CSV + SVG of S_J and a + b ln Z versus ln Z")
    p.add_argument("--a", type=float, help="intercept of the continuous law (nats)")
    p.add_argument("--b", type=float, help="slope of the continuous law (nats)")
    p.add_argument("--case", default="A", choices=("A", "B", "C"))
    p.add_argument("--output", "-o", default="fig1", help="output prefix (default fig1)")
    p.set_defaults(func=cmd_fig1)

    p = sub.add_parser("ipm", parents=[common], help="independent particle model filling")
    p.add_argument("Z", type=int)
    p.set_defaults(func=cmd_ipm)

    p = sub.add_parser("fit", parents=[common, data], help="fit S_J = a + b ln Z")
    p.add_argument("--case", default="A", choices=("A", "B", "C"))
    p.set_defaults(func=cmd_fit)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (DatasetParseError, InconsistentRecord, UnsupportedNucleus, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
