"""Row-level harness tests: budget degradation, filters, report rendering."""

from __future__ import annotations

import json

from arlabel.reproduce import MATCH, SKIPPED, run_reproduction


def test_only_filter_limits_rows():
    report = run_reproduction(only={"dss-unique-4-within-7"})
    assert [r.claim_id for r in report.rows] == ["dss-unique-4-within-7"]
    assert report.rows[0].status == MATCH


def test_budget_expiry_is_skipped_not_mismatch():
    report = run_reproduction(only={"es-7"}, budget_override_s=0.05)
    (row,) = report.rows
    assert row.status == SKIPPED
    assert "bound-only" in row.computed
    assert report.ok()  # skipped rows do not fail the report


def test_heavy_rows_not_attempted_by_default():
    report = run_reproduction(only={"es-8", "bipartite-cover-6-6"})
    assert all(r.status == SKIPPED for r in report.rows)
    assert all(r.computed == "not attempted" for r in report.rows)


def test_k6_fallback_row_reports_ingredients():
    report = run_reproduction(only={"complete-6-ingredients"})
    (row,) = report.rows
    assert row.status == SKIPPED
    assert "ingredients" in row.computed
    assert row.artifact["counting_survives_15"] is True
    assert len(row.artifact["five_element_sets_max13"]) == 2


def test_report_rendering_and_persistence(tmp_path):
    report = run_reproduction(only={"dss-two-5-within-13", "multipartite-3-3-3"})
    text = report.render_text()
    assert "dss-two-5-within-13" in text
    assert "all claims reproduced" in text
    report.write(tmp_path)
    doc = json.loads((tmp_path / "report.json").read_text())
    assert doc["ok"] is True
    assert {r["claim"] for r in doc["rows"]} == {
        "dss-two-5-within-13",
        "multipartite-3-3-3",
    }
    assert (tmp_path / "report.txt").read_text().startswith("claim")


def test_artifacts_back_every_computed_row():
    report = run_reproduction(
        only={"dss-unique-4-within-7", "bipartite-cover-exists", "multipartite-3-3-3"}
    )
    for row in report.rows:
        assert row.artifact, row.claim_id
