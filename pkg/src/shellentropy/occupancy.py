"""Proton shell occupations: data model, IPM filling, depletion and the bundled dataset.

Probabilities and occupations are linked by ``p_q = n_nl * 2(2l+1) / Z``.
"""
from __future__ import annotations

import csv
import io
import json
import math
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import IO, Iterable, Mapping, Optional, Union

from .exceptions import DatasetParseError, InconsistentRecord, UnsupportedNucleus
from .measures import INGESTION_TOLERANCE, NormalizedDistribution

_L_LETTERS = "spdfghi"

CASES = ("A", "B", "C")

DATASET_HEADER = ("nucleus", "mass_number", "Z", "case", "shell", "p_q")

# Z = 1..40
ELEMENTS = (
    "H He Li Be B C N O F Ne Na Mg Al Si P S Cl Ar K Ca "
    "Sc Ti V Cr Mn Fe Co Ni Cu Zn Ga Ge As Se Br Kr Rb Sr Y Zr"
).split()


@dataclass(frozen=True)
class ShellLabel:
    n: int
    l: int

    def __post_init__(self):
        if self.n < 1 or self.l < 0 or self.l >= len(_L_LETTERS):
            raise ValueError(f"invalid shell n={self.n}, l={self.l}")

    @property
    def degeneracy(self) -> int:
        """Proton capacity ``2(2l+1)``."""
        return 2 * (2 * self.l + 1)

    @classmethod
    def parse(cls, text: str) -> "ShellLabel":
        m = re.fullmatch(r"\s*(\d+)([a-zA-Z])\s*", text)
        if not m or m.group(2).lower() not in _L_LETTERS:
            raise ValueError(f"not a shell label: {text!r}")
        return cls(int(m.group(1)), _L_LETTERS.index(m.group(2).lower()))

    def __str__(self):
        return f"{self.n}{_L_LETTERS[self.l]}"


def _shell(label) -> ShellLabel:
    return label if isinstance(label, ShellLabel) else ShellLabel.parse(label)


#: Filling order used for the independent particle model. 1d before 2s is a
#: convention; both are full at Z = 20 so the data cannot tell them apart.
SHELL_ORDER = tuple(ShellLabel.parse(s) for s in ("1s", "1p", "1d", "2s", "1f", "2p"))
MAX_IPM_Z = sum(s.degeneracy for s in SHELL_ORDER)


def shell_sort_key(shell: ShellLabel):
    if shell in SHELL_ORDER:
        return (0, SHELL_ORDER.index(shell))
    return (1, 2 * shell.n + shell.l, shell.l)


def probabilities_to_occupations(probabilities: Mapping, proton_number: int) -> dict:
    """Inverse conversion ``n_nl = p_q Z / 2(2l+1)``."""
    out = {}
    for label, p in probabilities.items():
        s = _shell(label)
        out[s] = float(p) * proton_number / s.degeneracy
    return out


@dataclass(frozen=True)
class OccupationRecord:
    """Occupation probabilities ``n_nl`` of one nucleus in one model case.

    ``probabilities`` holds the tabulated ``p_q`` when the record was built from
    them; :func:`occupation_to_distribution` then returns those values verbatim
    instead of recomputing them through ``n_nl``.
    """

    nucleus: str
    mass_number: int
    proton_number: int
    case_tag: str
    occupations: Mapping[ShellLabel, float]
    probabilities: Optional[Mapping[ShellLabel, float]] = field(
        default=None, compare=False, repr=False
    )
    tolerance: float = field(default=INGESTION_TOLERANCE, compare=False, repr=False)

    def __post_init__(self):
        if self.case_tag not in CASES:
            raise ValueError(f"case must be one of {CASES}, got {self.case_tag!r}")
        if self.proton_number < 1 or self.mass_number < self.proton_number:
            raise ValueError(
                f"bad nucleon numbers Z={self.proton_number}, A={self.mass_number}"
            )
        occ = {}
        for label, n in sorted(
            ((_shell(k), float(v)) for k, v in self.occupations.items()),
            key=lambda kv: shell_sort_key(kv[0]),
        ):
            if not (-1e-12 <= n <= 1.0 + 1e-12):
                raise ValueError(f"{self.label}: n_{label} = {n!r} outside [0, 1]")
            occ[label] = min(max(n, 0.0), 1.0)
        object.__setattr__(self, "occupations", MappingProxyType(occ))
        if self.probabilities is not None:
            probs = {_shell(k): float(v) for k, v in self.probabilities.items()}
            object.__setattr__(self, "probabilities", MappingProxyType(probs))
        total = math.fsum(n * s.degeneracy for s, n in occ.items())
        if abs(total / self.proton_number - 1.0) > self.tolerance:
            raise InconsistentRecord(
                f"{self.label}: occupations hold {total:.4f} protons, expected "
                f"{self.proton_number} (probabilities sum to {total / self.proton_number:.4f})"
            )

    @classmethod
    def from_probabilities(
        cls,
        nucleus: str,
        mass_number: int,
        proton_number: int,
        case_tag: str,
        probabilities: Mapping,
        tolerance: float = INGESTION_TOLERANCE,
    ) -> "OccupationRecord":
        probs = {_shell(k): float(v) for k, v in probabilities.items()}
        return cls(
            nucleus,
            mass_number,
            proton_number,
            case_tag,
            probabilities_to_occupations(probs, proton_number),
            probabilities=probs,
            tolerance=tolerance,
        )

    @property
    def label(self) -> str:
        return f"{self.mass_number}{self.nucleus} ({self.case_tag})"

    def occupied_shells(self) -> list[ShellLabel]:
        return [s for s, n in self.occupations.items() if n > 0]


def occupation_to_distribution(
    record: OccupationRecord, tolerance: Optional[float] = None
) -> NormalizedDistribution:
    """Shell probabilities ``p_q`` over occupied shells, in canonical order.

    Values are not rescaled: tabulated rows that sum to 0.997 stay that way.
    """
    tol = record.tolerance if tolerance is None else tolerance
    shells = record.occupied_shells()
    if not shells:
        raise InconsistentRecord(f"{record.label}: no occupied shell")
    if record.probabilities is not None:
        values = [record.probabilities[s] for s in shells]
    else:
        Z = record.proton_number
        values = [record.occupations[s] * s.degeneracy / Z for s in shells]
    total = math.fsum(values)
    if abs(total - 1.0) > tol:
        raise InconsistentRecord(
            f"{record.label}: probabilities sum to {total:.6g}, not 1 within {tol:g}"
        )
    return NormalizedDistribution(tuple(values), tol)


def _check_z(Z: int):
    if isinstance(Z, bool) or int(Z) != Z or Z < 1:
        raise ValueError(f"Z must be a positive integer, got {Z!r}")
    if Z > MAX_IPM_Z:
        raise UnsupportedNucleus(
            f"Z={Z} exceeds the {MAX_IPM_Z} protons of shells "
            + ", ".join(map(str, SHELL_ORDER))
        )


def ipm_occupation(Z: int, mass_number: Optional[int] = None) -> OccupationRecord:
    """Independent particle model filling (case C) for ``Z`` protons.

    Full shells get ``n = 1``; the last shell holds the fractional remainder.
    ``mass_number`` defaults to ``2 Z``.
    """
    _check_z(Z)
    left = int(Z)
    occ = {}
    for shell in SHELL_ORDER:
        if left <= 0:
            break
        put = min(shell.degeneracy, left)
        occ[shell] = 1.0 if put == shell.degeneracy else put / shell.degeneracy
        left -= put
    return OccupationRecord(
        ELEMENTS[Z - 1], mass_number or 2 * int(Z), int(Z), "C", occ
    )


def combine_spin_orbit(n_plus: float, n_minus: float, l: int) -> float:
    """``n_nl`` from the ``j = l + 1/2`` and ``j = l - 1/2`` occupations.

    For ``l = 0`` only ``n_plus`` matters.
    """
    if l < 0 or int(l) != l:
        raise ValueError(f"l must be a non-negative integer, got {l!r}")
    for name, v in (("n_plus", n_plus), ("n_minus", n_minus)):
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name} = {v!r} outside [0, 1]")
    if l == 0:
        return float(n_plus)
    return ((l + 1) * n_plus + l * n_minus) / (2 * l + 1)


@dataclass(frozen=True)
class DepletionReport:
    nucleus: str
    mass_number: int
    proton_number: int
    case_tag: str
    depletion: float
    holes: Mapping[ShellLabel, float]

    @property
    def label(self) -> str:
        return f"{self.mass_number}{self.nucleus} ({self.case_tag})"


def depletion(record: OccupationRecord) -> DepletionReport:
    """Fraction of protons missing from the shells that are full in the IPM.

    Only shells with ``n = 1`` in :func:`ipm_occupation` count; a partially
    filled IPM valence shell is left out. A full IPM shell absent from the
    record counts as completely empty.
    """
    Z = record.proton_number
    _check_z(Z)
    reference = ipm_occupation(Z)
    holes = {}
    for shell, n_ipm in reference.occupations.items():
        if n_ipm == 1.0:
            holes[shell] = shell.degeneracy * (1.0 - record.occupations.get(shell, 0.0))
    return DepletionReport(
        record.nucleus,
        record.mass_number,
        Z,
        record.case_tag,
        math.fsum(holes.values()) / Z,
        MappingProxyType(holes),
    )


# --- dataset I/O -----------------------------------------------------------

Source = Union[str, os.PathLike, IO[str], Iterable[str]]


def bundled_dataset_path():
    return resources.files("shellentropy") / "data" / "table1.csv"


def bundled_reference_path():
    return resources.files("shellentropy") / "data" / "table1_entropies.csv"


def _read_lines(source: Source) -> tuple[str, list[str]]:
    if isinstance(source, (str, os.PathLike)) or hasattr(source, "read_text"):
        name = str(source)
        if hasattr(source, "read_text"):
            text = source.read_text(encoding="utf-8")
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        return name, text.splitlines()
    if hasattr(source, "read"):
        return getattr(source, "name", "<stream>"), source.read().splitlines()
    return "<lines>", [line.rstrip("\n") for line in source]


def _rows(source: Source):
    """Yield ``(name, lineno, header, row)`` skipping comments and blank lines."""
    name, lines = _read_lines(source)
    header = None
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        row = next(csv.reader([line]))
        row = [c.strip() for c in row]
        if header is None:
            header = row
            continue
        if len(row) != len(header):
            raise DatasetParseError(
                name, lineno, "*", f"expected {len(header)} fields, got {len(row)}"
            )
        yield name, lineno, header, dict(zip(header, row))


def _parse(name, lineno, field_name, text, kind):
    try:
        return kind(text)
    except ValueError as exc:
        raise DatasetParseError(name, lineno, field_name, f"cannot parse {text!r}") from exc


def load_dataset(
    source: Optional[Source] = None, tolerance: float = INGESTION_TOLERANCE
) -> list[OccupationRecord]:
    """Read occupation records from the line-oriented CSV format.

    One row per (record, shell) with header
    ``nucleus,mass_number,Z,case,shell,p_q``. Rows of the same record are
    grouped in order of first appearance. ``None`` loads the bundled table.
    """
    if source is None:
        source = bundled_dataset_path()
    groups: dict[tuple, dict] = {}
    first_line: dict[tuple, tuple[str, int]] = {}
    for name, lineno, header, row in _rows(source):
        missing = [h for h in DATASET_HEADER if h not in header]
        if missing:
            raise DatasetParseError(name, lineno, missing[0], "column missing from header")
        A = _parse(name, lineno, "mass_number", row["mass_number"], int)
        Z = _parse(name, lineno, "Z", row["Z"], int)
        case = row["case"]
        if case not in CASES:
            raise DatasetParseError(name, lineno, "case", f"unknown case {case!r}")
        shell = _parse(name, lineno, "shell", row["shell"], ShellLabel.parse)
        if row["p_q"] == "":
            continue
        p = _parse(name, lineno, "p_q", row["p_q"], float)
        if not 0.0 <= p <= 1.0:
            raise DatasetParseError(name, lineno, "p_q", f"{p!r} outside [0, 1]")
        key = (row["nucleus"], A, Z, case)
        shells = groups.setdefault(key, {})
        first_line.setdefault(key, (name, lineno))
        if shell in shells:
            raise DatasetParseError(name, lineno, "shell", f"duplicate shell {shell}")
        if p > 0:
            shells[shell] = p
    records = []
    for key, probs in groups.items():
        try:
            records.append(OccupationRecord.from_probabilities(*key, probs, tolerance=tolerance))
        except InconsistentRecord as exc:
            name, lineno = first_line[key]
            raise InconsistentRecord(f"{name}:{lineno}: {exc}") from exc
    return records


def record_probabilities(record: OccupationRecord) -> dict[ShellLabel, float]:
    if record.probabilities is not None:
        return dict(record.probabilities)
    Z = record.proton_number
    return {s: n * s.degeneracy / Z for s, n in record.occupations.items() if n > 0}


def write_dataset(records: Iterable[OccupationRecord], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(DATASET_HEADER)
    for rec in records:
        for shell, p in record_probabilities(rec).items():
            writer.writerow(
                [rec.nucleus, rec.mass_number, rec.proton_number, rec.case_tag, str(shell), repr(p)]
            )


def records_to_json(records: Iterable[OccupationRecord]) -> str:
    """Single JSON document, one object per record with a nested shell map."""
    out = []
    for rec in records:
        obj = {
            "nucleus": rec.nucleus,
            "mass_number": rec.mass_number,
            "proton_number": rec.proton_number,
            "case_tag": rec.case_tag,
            "occupations": {str(s): n for s, n in rec.occupations.items()},
        }
        if rec.probabilities is not None:
            obj["probabilities"] = {str(s): p for s, p in rec.probabilities.items()}
        out.append(obj)
    return json.dumps(out, indent=2)


def records_from_json(text: str, tolerance: float = INGESTION_TOLERANCE) -> list[OccupationRecord]:
    records = []
    for obj in json.loads(text):
        records.append(
            OccupationRecord(
                obj["nucleus"],
                int(obj["mass_number"]),
                int(obj["proton_number"]),
                obj["case_tag"],
                {ShellLabel.parse(k): v for k, v in obj["occupations"].items()},
                probabilities=(
                    {ShellLabel.parse(k): v for k, v in obj["probabilities"].items()}
                    if obj.get("probabilities") is not None
                    else None
                ),
                tolerance=tolerance,
            )
        )
    return records


@dataclass(frozen=True)
class ReferenceEntropies:
    shannon_jaynes: float
    onicescu_information: float
    stotland_total: Optional[float]


def load_reference_entropies(source: Optional[Source] = None) -> dict:
    """Tabulated ``S, S_E, S_F`` keyed by ``(nucleus, mass_number, case)``.

    The entropy column may be headed ``S`` or ``S_J``; a blank ``S_F`` means
    no finite value.
    """
    if source is None:
        source = bundled_reference_path()
    out = {}
    for name, lineno, header, row in _rows(source):
        s_key = "S" if "S" in row else "S_J"
        for h in ("nucleus", "mass_number", "case", s_key, "S_E", "S_F"):
            if h not in row:
                raise DatasetParseError(name, lineno, h, "column missing from header")
        key = (row["nucleus"], _parse(name, lineno, "mass_number", row["mass_number"], int), row["case"])
        sf = row["S_F"]
        out[key] = ReferenceEntropies(
            _parse(name, lineno, s_key, row[s_key], float),
            _parse(name, lineno, "S_E", row["S_E"], float),
            _parse(name, lineno, "S_F", sf, float) if sf else None,
        )
    return out


def dataset_from_text(text: str, tolerance: float = INGESTION_TOLERANCE) -> list[OccupationRecord]:
    return load_dataset(io.StringIO(text), tolerance)
