import pytest

from shellentropy.measures import (
    NormalizedDistribution,
    minimum_uncertainty_entropy,
    stotland_excess,
)
from shellentropy.occupancy import ReferenceEntropies, load_dataset
from shellentropy.tables import build_table, check_row, check_table, format_text

ROWS = [
    ("He", "A"), ("C", "A"), ("C", "B"), ("O", "A"), ("O", "B"), ("O", "C"), ("Mg", "A"),
    ("Si", "A"), ("Si", "B"), ("S", "A"), ("S", "B"), ("Ca", "A"), ("Ca", "B"), ("Ca", "C"),
]


@pytest.fixture(scope="module")
def table():
    return build_table(load_dataset())


@pytest.fixture(scope="module")
def rows(table):
    return {(r.record.nucleus, r.record.case_tag): r for r in table.rows}


@pytest.mark.parametrize("key", ROWS, ids=[f"{n} {c}" for n, c in ROWS])
def test_shannon_and_onicescu_match_tabulated(key, rows, references):
    row = rows[key]
    ref = references[(row.record.nucleus, row.record.mass_number, row.record.case_tag)]
    assert row.report.shannon_jaynes == pytest.approx(ref.shannon_jaynes, abs=0.005)
    assert row.report.onicescu_information == pytest.approx(ref.onicescu_information, abs=0.01)


def test_values_are_not_renormalized(rows):
    # 28Si (A) sums to 0.997; rescaling would move S_E to 3.829, off the tabulated 3.852.
    si = rows[("Si", "A")]
    assert sum(si.probabilities.values()) == pytest.approx(0.997, abs=1e-12)
    assert si.report.onicescu_information == pytest.approx(3.852, abs=5e-4)


def test_24Mg_tabulated_stotland_matches_five_shells():
    # The tabulated 1.575 is reproduced only when the 2p entry (0.010) is left
    # out and k = 5; all six shells give 1.737.
    six = (0.120, 0.350, 0.383, 0.055, 0.082, 0.010)
    five = NormalizedDistribution(six[:5], tolerance=0.02)
    assert minimum_uncertainty_entropy(5) + stotland_excess(five) == pytest.approx(1.575, abs=5e-4)
    full = NormalizedDistribution(six)
    assert minimum_uncertainty_entropy(6) + stotland_excess(full) == pytest.approx(1.7371, abs=1e-4)


def test_check_table_flags_only_24Mg(table, references):
    bad = [c for c in check_table(table, references) if not c.ok]
    assert [c.label for c in bad] == ["24Mg (A)"]
    assert bad[0].mismatches == ("S_F 1.7371 vs 1.575",)


def test_check_row_divergence_handling(rows):
    ca_c = rows[("Ca", "C")]
    assert check_row(ca_c, ReferenceEntropies(1.168, 2.778, None)).ok
    assert not check_row(ca_c, ReferenceEntropies(1.168, 2.778, 1.5)).ok
    o_c = rows[("O", "C")]
    assert not check_row(o_c, ReferenceEntropies(0.562, 1.600, None)).ok
    assert not check_row(o_c, None).ok


def test_cells_render_three_decimals_and_blank_divergent(table):
    cells = dict(((r[0], r[1]), r) for r in table.cells())
    assert cells[("40Ca", "C")][-3:] == ["1.168", "2.778", ""]
    assert cells[("28Si", "B")][7] == ""  # unoccupied 2p


def test_format_text_aligns_columns():
    text = format_text(("a", "bb"), [["x", "1"], ["yyy", "22"]])
    assert text.splitlines() == ["a    bb", "x    1", "yyy  22"]
