import csv
import io
import json

import pytest

from bchdim.formulas import Source
from bchdim.tables import (
    FIELDS,
    TableRow,
    add_distances,
    fixture_mismatches,
    generate_table,
    load_fixture,
    merge_rows,
    to_csv,
    to_json,
    to_markdown,
)


def test_fixtures_agree_with_reference_tables(source_tables):
    for name in ("table2", "table3"):
        fixture = [(r.q, r.m, r.delta_lo, r.delta_hi, r.n, r.k, r.d_B, r.d) for r in load_fixture(name)]
        reference = list(source_tables[name])
        # the printed n for m = 8 is 254; q^8 - 1 = 255 is stored instead
        reference = [(q, m, lo, hi, 255 if (q, m) == (2, 8) else n, k, dB, d) for q, m, lo, hi, n, k, dB, d in reference]
        assert fixture == reference


def test_m8_length_is_255():
    rows = [r for r in load_fixture("table2") if r.m == 8]
    assert rows and all(r.n == 255 for r in rows)


@pytest.mark.parametrize("name,pairs", [("table2", [(2, m) for m in range(4, 9)]), ("table3", [(3, 4), (3, 5), (4, 4)])])
def test_generated_tables_match_fixtures(name, pairs):
    generated = {p: generate_table(*p) for p in pairs}
    assert fixture_mismatches(load_fixture(name), generated) == []


def test_small_tables():
    rows = generate_table(2, 4)
    assert [(r.delta_lo, r.delta_hi, r.k, r.d_B) for r in rows] == [(2, 3, 11, 3), (4, 5, 7, 5), (6, 7, 5, 7)]
    rows = generate_table(3, 4)
    assert (rows[0].delta_lo, rows[0].k, rows[0].d_B) == (2, 76, 2)
    assert any((r.delta_lo, r.delta_hi, r.k) == (9, 10, 56) for r in rows)
    assert generate_table(2, 4, 5, 4) == []


def test_merge_rows_and_sources():
    a = TableRow(2, 7, 16, 16, 127, 71, 19, None, Source.CLOSED_FORM.value)
    b = TableRow(2, 7, 17, 17, 127, 71, 19, None, Source.ORACLE.value)
    c = TableRow(2, 7, 18, 18, 127, 64, 21)
    merged = merge_rows([a, b, c])
    assert len(merged) == 2
    assert (merged[0].delta_lo, merged[0].delta_hi, merged[0].source) == (16, 17, Source.HYBRID.value)
    unmerged = generate_table(2, 7, 16, 19, merge=False)
    assert len(unmerged) == 4 and len(merge_rows(unmerged)) == 1


def test_upper_boundary_row_is_labelled():
    rows = generate_table(2, 7, merge=False)
    last = rows[-1]
    assert last.delta_lo == 31
    full = generate_table(2, 7, 32, 32, merge=False)[0]
    assert full.source == Source.HYBRID.value


def test_formats_are_deterministic():
    rows = generate_table(3, 4)
    assert to_csv(rows) == to_csv(generate_table(3, 4))
    assert to_json(rows) == to_json(generate_table(3, 4))
    parsed = list(csv.DictReader(io.StringIO(to_csv(rows))))
    assert tuple(parsed[0].keys()) == FIELDS
    assert parsed[0]["d"] == ""
    data = json.loads(to_json(rows))
    assert list(data[0].keys()) == list(FIELDS)
    md = to_markdown(rows).splitlines()
    assert md[0].startswith("| q | m |") and md[1].startswith("|---")
    assert len(md) == len(rows) + 2


def test_distance_column():
    rows = add_distances(generate_table(2, 4), budget=2**22)
    assert [r.d for r in rows] == [3, 5, 7]
    rows = add_distances(generate_table(2, 8, 60, 63), budget=1000)
    assert all(r.d is None for r in rows)
    assert "--" in to_markdown(rows)
