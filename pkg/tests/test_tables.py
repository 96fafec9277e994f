"""Data integrity of the built-in tables and harness behaviour."""

import json

import pytest

from addcyclic.fields import tower
from addcyclic.poly import divides, parse_poly, Poly
from addcyclic.tables import (
    OPTIMALITY_NOTE,
    TABLE1,
    TABLE2,
    TABLE3,
    build_table1_code,
    build_table2_code,
    build_table3_words,
    verify_all,
    verify_entry,
)


def test_row_counts():
    assert len(TABLE1) == 19
    assert len(TABLE2) == 14
    assert len(TABLE3) == 10


def test_table1_literals_parse_and_divide():
    for e in TABLE1:
        tw = tower(e.q)
        g = parse_poly(e.g, tw.base, tw)
        k = parse_poly(e.k, tw.base, tw)
        xn1 = Poly.xn_minus_1(tw.base, e.n)
        assert divides(g, xn1), f"row {e.row}: g does not divide"
        assert divides(k, xn1), f"row {e.row}: k does not divide"
        parse_poly(e.h, tw.base, tw)


def test_table1_sizes_consistent():
    # the expected exponent matches the degrees of the stored generators
    for e in TABLE1:
        tw = tower(e.q)
        g = parse_poly(e.g, tw.base, tw)
        k = parse_poly(e.k, tw.base, tw)
        assert (e.n - g.degree()) + (e.n - k.degree()) == e.expected_k, e.row


def test_table2_literals_build():
    for e in TABLE2:
        code = build_table2_code(e, strict=False)
        assert code.dimension == e.expected_k, f"row {e.row}"
        assert e.expected_n == e.alpha + 2 * e.beta


def test_table2_condition_status():
    violating = {3, 4, 5, 6, 7, 11, 12}
    for e in TABLE2:
        code = build_table2_code(e, strict=False)
        assert bool(code.condition_failures) == (e.row in violating), e.row


def test_table3_matrices_parse():
    for e in TABLE3:
        tw, alpha, beta, words = build_table3_words(e)
        assert len(words) == e.expected_k or len(words) >= e.expected_k
        for w in words:
            assert w.alpha == e.alpha and w.beta == e.beta


def test_verify_single_entry_table1():
    rep = verify_entry(TABLE1[0])
    assert rep.status == "ok"
    assert rep.d_mode == "exact"
    assert rep.singleton == "attains"


def test_verify_table3_all_exact_ok():
    rep = verify_all(3)
    assert not rep.has_mismatch
    assert all(e.d_mode == "exact" for e in rep.entries)
    assert all(e.lcd == "yes" for e in rep.entries)


def test_verify_table2_small_budget_marks_skips():
    rep = verify_all(2, budget=3**9)
    assert not rep.has_mismatch
    modes = {e.row: e.d_mode for e in rep.entries}
    assert modes[4] == "exact"    # 3^9 is exactly the budget
    assert modes[9] == "exact"
    assert modes[5] == "skipped"  # 3^10
    assert modes[7] == "skipped"  # 3^18
    # dimension checks still ran on skipped rows
    skipped = [e for e in rep.entries if e.d_mode == "skipped"]
    assert skipped and all(e.computed_k == e.expected_k for e in skipped)


def test_row8_discrepancy_flagged_not_failed():
    rep = verify_entry(TABLE2[7])
    assert rep.status == "ok"
    assert any("formula" in d for d in rep.details)


def test_reports_are_deterministic():
    a = verify_all(3, seed=7)
    b = verify_all(3, seed=7)
    assert a.to_csv() == b.to_csv()
    assert a.to_json() == b.to_json()


def test_report_json_roundtrip_and_note():
    rep = verify_all(3)
    payload = json.loads(rep.to_json())
    assert payload["note"] == OPTIMALITY_NOTE
    assert len(payload["entries"]) == 10
    assert payload["summary"]["mismatch"] == 0
    # runtime never leaks into serialized reports
    assert all("runtime" not in e for e in payload["entries"])


def test_report_csv_shape():
    rep = verify_all(3)
    lines = rep.to_csv().strip().split("\n")
    header = lines[0].split(",")
    assert header == list(rep.entries[0].CSV_FIELDS)
    assert len(lines) == 11
    assert all(len(line.split(",")) == len(header) for line in lines[1:])


def test_unknown_table_id():
    with pytest.raises(ValueError):
        verify_all(9)
