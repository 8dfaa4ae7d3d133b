# tests/unit/stability/test_compare.py
"""
Tests for the stable-range comparison harnesses.
"""
import pytest

from core.exceptions import ConfigurationError
from species.core import Truncation
from stability.compare import (
    compare_calchom,
    compare_graphcx,
    compare_lqt,
    compare_main1,
    compare_main2,
    compare_newfuchs,
    naturality_square,
)
from stability.report import ReportStatus, Theorem


@pytest.fixture
def t2():
    return Truncation(max_arity=3, max_weight=2, max_degree=2)


class TestLodayQuillenTsygan:
    def test_gl3(self, settings):
        report = compare_lqt(3, 4, settings=settings)
        assert [r.left for r in report.rows] == [1, 1, 0, 1, 1]
        assert report.status == ReportStatus.PASS

    def test_sl3(self, settings):
        report = compare_lqt(3, 3, special=True, settings=settings)
        assert [r.left for r in report.rows] == [1, 0, 0, 1]
        assert report.status == ReportStatus.PASS
        assert report.operad.endswith("sl_3")

    def test_only_low_degrees_asserted(self, settings):
        report = compare_lqt(2, 3, settings=settings)
        assert [r.in_stable_range for r in report.rows] == [True, True, False, False]


class TestMain1:
    def test_small_pass(self, com, t2, settings):
        report = compare_main1(com, [3], t2, coeffs=[(0, 0), (1, 0)], settings=settings)
        assert report.theorem == Theorem.MAIN1
        assert report.status == ReportStatus.PASS
        assert report.rows
        assert all(r.match for r in report.rows if r.asserted)

    def test_isotypic_rows(self, com, t2, settings):
        report = compare_main1(com, [3], t2, coeffs=[(1, 0), (2, 1)], settings=settings, isotypic=True)
        split = [r for r in report.rows if r.part.startswith("S_")]
        assert split
        assert {r.part for r in split if r.p == 1} <= {"S_1 (1,)"}
        assert report.status == ReportStatus.PASS

    def test_coefficients_beyond_arity(self, com, t2, settings):
        with pytest.raises(ConfigurationError):
            compare_main1(com, [3], t2, coeffs=[(4, 0)], settings=settings)


@pytest.mark.slow
class TestMain2:
    def test_small_pass(self, com, t2, settings):
        report = compare_main2(com, [3], t2, coeffs=[(0, 0), (1, 0)], settings=settings)
        assert report.theorem == Theorem.MAIN2
        assert report.status == ReportStatus.PASS
        assert all(r.match for r in report.rows if r.asserted)

    def test_lie(self, lie, t2, settings):
        report = compare_main2(lie, [3], t2, coeffs=[(0, 0)], settings=settings)
        assert report.status == ReportStatus.PASS


@pytest.mark.slow
class TestGraphComplex:
    def test_chain_dims(self, lie, t2, settings):
        report = compare_graphcx(lie, [3], t2, coeffs=[(1, 0), (2, 1)], settings=settings)
        assert report.theorem == Theorem.GRAPHCX1
        assert report.status == ReportStatus.PASS

    def test_completion_uses_semidirect_algebra(self, com, t2, settings):
        report = compare_graphcx(com, [3], t2, coeffs=[(0, 0), (1, 0)], completion=True, settings=settings)
        assert report.theorem == Theorem.GRAPHCX2
        assert report.status == ReportStatus.PASS


class TestNewFuchs:
    def test_weight_one(self, com, settings):
        report = compare_newfuchs(com, 4, 1, settings=settings)
        assert report.status == ReportStatus.PASS
        assert {r.d for r in report.rows} >= {1}

    def test_weight_must_be_positive(self, com, settings):
        with pytest.raises(ConfigurationError):
            compare_newfuchs(com, 4, 0, settings=settings)


class TestCalchomReport:
    def test_com(self, com, settings):
        report = compare_calchom(com, Truncation(max_arity=3, max_weight=3, max_degree=3), settings)
        assert report.status == ReportStatus.PASS
        assert {r.part for r in report.rows} == {"operadic", "wheeled"}


@pytest.mark.slow
class TestNaturality:
    def test_lie_to_ass(self, lie, ass, settings):
        report = naturality_square(lie, ass, dim_v=3, settings=settings)
        assert [r.part for r in report.rows] == ["map", "source", "target"]
        assert all(r.match for r in report.rows)
        assert report.status == ReportStatus.PASS
