# tests/unit/stability/test_repstab.py
"""
Tests for mixed representation stability multiplicities.
"""
import pytest

from core.exceptions import TruncationExceededError
from species.core import Truncation
from stability.repstab import multiplicity_report, repstab_multiplicities, schur_weyl_consistency
from wheeledbar.assembly import trivial_wheeled_bar
from wheeledbar.coprop import coprop_completion, homology_of


@pytest.fixture
def t3():
    return Truncation(max_arity=3, max_weight=3, max_degree=3)


@pytest.fixture
def lie_homology(lie, t3, settings):
    return homology_of(trivial_wheeled_bar(lie, t3, settings), settings, isotypic=True)


@pytest.fixture
def com_homology(com, t3, settings):
    return homology_of(trivial_wheeled_bar(com, t3, settings), settings, isotypic=True)


class TestMultiplicities:
    def test_empty_partitions_count_the_component(self, lie_homology, t3):
        dims = {(w, d): v for (_, _, w, d), v in coprop_completion(lie_homology, 0, 0, t3).items() if v}
        assert repstab_multiplicities(lie_homology, [], [], t3) == dims

    @pytest.mark.parametrize("n", [1, 2])
    def test_single_wheel_in_degree_one(self, lie_homology, t3, n):
        rows = repstab_multiplicities(lie_homology, [], [n], t3)
        assert rows.get((n, 1)) == 1

    def test_nonnegative(self, com_homology, t3):
        for alpha in ([], [1]):
            for beta in ([1], [2], [1, 1]):
                rows = repstab_multiplicities(com_homology, alpha, beta, t3)
                assert all(v > 0 for v in rows.values())

    def test_beta_beyond_arity(self, lie_homology, t3):
        with pytest.raises(TruncationExceededError):
            repstab_multiplicities(lie_homology, [], [4], t3)


class TestSchurWeyl:
    @pytest.mark.parametrize("p,q", [(1, 0), (2, 0), (2, 1), (1, 1)])
    def test_counts_agree(self, lie_homology, t3, p, q):
        assert schur_weyl_consistency(lie_homology, p, q, t3)

    def test_report(self, com_homology, t3):
        report = multiplicity_report(com_homology, [1], [2], t3)
        assert report.consistent is True
        assert report.alpha == [1]
        assert report.operad == com_homology.operad

    def test_report_without_check(self, com_homology, t3):
        assert multiplicity_report(com_homology, [], [1], t3, check=False).consistent is None
