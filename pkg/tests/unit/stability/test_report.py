# tests/unit/stability/test_report.py
"""
Tests for report models and their renderings.
"""
import json

import pytest
from pydantic import ValidationError

from core.exceptions import StableRangeMismatchError
from species.core import Truncation
from stability.report import (
    BlockReport,
    ComparisonReport,
    ComparisonRow,
    HomologyReport,
    IsotypicRow,
    MultiplicityReport,
    OutputFormat,
    ReportStatus,
    Theorem,
    render,
)


@pytest.fixture
def passing():
    return ComparisonReport(
        theorem=Theorem.MAIN1,
        operad="com",
        rows=[
            ComparisonRow(dim_v=4, w=2, d=1, left=1, right=1),
            ComparisonRow(dim_v=4, w=1, d=1, left=0, right=0),
        ],
    ).finalize()


class TestComparisonRow:
    def test_match(self):
        assert ComparisonRow(w=1, d=1, left=2, right=2).match
        assert not ComparisonRow(w=1, d=1, left=2, right=3).match

    def test_cross_check_must_agree(self):
        assert not ComparisonRow(w=1, d=1, left=2, right=2, cross=1).match

    def test_match_is_serialized(self):
        dumped = ComparisonRow(w=1, d=1, left=2, right=2).model_dump()
        assert dumped["match"] is True


class TestComparisonReport:
    def test_finalize_sorts(self, passing):
        assert [r.w for r in passing.rows] == [1, 2]
        assert passing.status == ReportStatus.PASS

    def test_mismatch_fails(self):
        report = ComparisonReport(
            theorem=Theorem.MAIN2, operad="lie",
            rows=[ComparisonRow(dim_v=3, w=1, d=1, p=1, left=1, right=0)],
        ).finalize()
        assert report.status == ReportStatus.FAIL
        with pytest.raises(StableRangeMismatchError) as exc_info:
            report.assert_stable()
        assert exc_info.value.context["left"] == 1
        assert exc_info.value.context["p"] == 1

    @pytest.mark.parametrize("flags", [{"in_stable_range": False}, {"trusted": False}])
    def test_unasserted_rows_never_fail(self, flags):
        report = ComparisonReport(
            theorem=Theorem.MAIN1, operad="com",
            rows=[ComparisonRow(w=3, d=3, left=5, right=2, **flags)],
        ).finalize()
        assert report.status == ReportStatus.PASS
        report.assert_stable()

    def test_skipped_survives_finalize(self):
        report = ComparisonReport(theorem=Theorem.CALCHOM, operad="prelie", status=ReportStatus.SKIPPED)
        assert report.finalize().status == ReportStatus.SKIPPED


class TestRendering:
    def test_json_is_sorted(self, passing):
        text = render(passing, OutputFormat.JSON)
        data = json.loads(text)
        assert data["theorem"] == "main1"
        assert data["status"] == "pass"
        assert all(row["match"] for row in data["rows"])
        assert text == render(passing, "json")

    def test_csv(self, passing):
        text = render(passing, OutputFormat.CSV)
        lines = text.split("\r\n")
        assert lines[0].startswith("part,dim_v,n,p,q,w,d,left,right")
        assert lines[1].endswith("yes,yes,yes")

    def test_text_title(self, passing):
        text = render(passing, OutputFormat.TEXT)
        assert text.splitlines()[0] == "main1 com: PASS"

    def test_homology_table(self):
        report = HomologyReport(
            kind="wbar", operad="lie", wheeling="trivial",
            truncation=Truncation(max_arity=3, max_weight=3, max_degree=3),
            blocks=[BlockReport(part="wheeled", n=1, w=1, d=1, dim=1)],
        )
        headers, rows = report.table()
        assert headers[:4] == ["part", "n", "w", "d"]
        assert rows == [["wheeled", 1, 1, 1, 1, True]]
        assert render(report, OutputFormat.TEXT).startswith("wbar lie trivial")

    def test_isotypic_table(self):
        report = HomologyReport(
            kind="bar", operad="com",
            truncation=Truncation(max_arity=3),
            isotypic=[IsotypicRow(part="operadic", n=3, partition=[2, 1], w=2, d=1, multiplicity=1)],
        )
        headers, rows = report.table()
        assert "partition" in headers
        assert rows[0][2] == "(2,1)"


class TestMultiplicityReport:
    def test_partitions_are_validated(self):
        with pytest.raises(ValidationError):
            MultiplicityReport(operad="lie", wheeling="trivial", alpha=[1, 2], beta=[])
        with pytest.raises(ValidationError):
            MultiplicityReport(operad="lie", wheeling="trivial", alpha=[], beta=[0])

    def test_title(self):
        report = MultiplicityReport(operad="lie", wheeling="trivial", alpha=[], beta=[2, 1])
        assert render(report, OutputFormat.TEXT).startswith("multiplicities lie (trivial) alpha=() beta=(2,1)")
