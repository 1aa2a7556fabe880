"""Recomputed entropy table for occupation records and comparison with tabulated values."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .measures import EntropyReport, full_report
from .occupancy import (
    SHELL_ORDER,
    OccupationRecord,
    ReferenceEntropies,
    occupation_to_distribution,
    record_probabilities,
)

#: Comparison tolerances for ``S``, ``S_E`` and ``S_F`` against three-decimal values.
CHECK_TOLERANCES = {"S": 0.005, "S_E": 0.01, "S_F": 0.005}

DIVERGENT = "divergent"


@dataclass(frozen=True)
class TableRow:
    record: OccupationRecord
    probabilities: Mapping
    report: EntropyReport


@dataclass(frozen=True)
class OutputTable:
    rows: tuple[TableRow, ...]

    @property
    def header(self) -> tuple[str, ...]:
        return ("nucleus", "case", *map(str, SHELL_ORDER), "S", "S_E", "S_F")

    def cells(self, precision: int = 3, scale: float = 1.0) -> list[list[str]]:
        """Rendered rows; ``scale`` multiplies the entropies S and S_F (unit change)."""
        out = []
        for row in self.rows:
            rec, rep = row.record, row.report
            probs = [
                f"{row.probabilities[s]:.{precision}f}" if s in row.probabilities else ""
                for s in SHELL_ORDER
            ]
            sf = "" if rep.stotland_total is None else f"{rep.stotland_total * scale:.{precision}f}"
            out.append(
                [
                    f"{rec.mass_number}{rec.nucleus}",
                    rec.case_tag,
                    *probs,
                    f"{rep.shannon_jaynes * scale:.{precision}f}",
                    f"{rep.onicescu_information:.{precision}f}",
                    sf,
                ]
            )
        return out


def build_table(records: Iterable[OccupationRecord], case: Optional[str] = None) -> OutputTable:
    rows = []
    for rec in records:
        if case is not None and rec.case_tag != case:
            continue
        report = full_report(occupation_to_distribution(rec))
        rows.append(TableRow(rec, record_probabilities(rec), report))
    return OutputTable(tuple(rows))


@dataclass(frozen=True)
class RowCheck:
    label: str
    computed: EntropyReport
    reference: Optional[ReferenceEntropies]
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_row(
    row: TableRow, reference: Optional[ReferenceEntropies], tolerances=CHECK_TOLERANCES
) -> RowCheck:
    rep = row.report
    label = row.record.label
    if reference is None:
        return RowCheck(label, rep, None, ("no tabulated values",))
    bad = []
    if abs(rep.shannon_jaynes - reference.shannon_jaynes) > tolerances["S"]:
        bad.append(f"S {rep.shannon_jaynes:.4f} vs {reference.shannon_jaynes:.3f}")
    if abs(rep.onicescu_information - reference.onicescu_information) > tolerances["S_E"]:
        bad.append(f"S_E {rep.onicescu_information:.4f} vs {reference.onicescu_information:.3f}")
    if reference.stotland_total is None:
        if rep.stotland_total is not None:
            bad.append(f"S_F {rep.stotland_total:.4f} vs {DIVERGENT}")
    elif rep.stotland_total is None:
        bad.append(f"S_F {DIVERGENT} vs {reference.stotland_total:.3f}")
    elif abs(rep.stotland_total - reference.stotland_total) > tolerances["S_F"]:
        bad.append(f"S_F {rep.stotland_total:.4f} vs {reference.stotland_total:.3f}")
    return RowCheck(label, rep, reference, tuple(bad))


def check_table(table: OutputTable, references: Mapping) -> list[RowCheck]:
    out = []
    for row in table.rows:
        rec = row.record
        out.append(check_row(row, references.get((rec.nucleus, rec.mass_number, rec.case_tag))))
    return out


def format_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.rjust(w) if i > 1 else c.ljust(w) for i, (c, w) in enumerate(zip(r, widths))).rstrip())
    return "\n".join(lines)


def bits_scale(bits: bool) -> float:
    return 1.0 / math.log(2.0) if bits else 1.0
