# tests/unit/exactla/test_complex.py
"""
Tests for chain complexes: d∘d, homology and restriction.
"""
import pytest

from core.exceptions import ChainComplexError
from exactla.complex import ChainComplex, direct_sum
from exactla.sparse import SparseMatrix


def _interval() -> ChainComplex:
    """Simplicial chains of an interval: two points, one edge."""
    return ChainComplex(
        blocks={(1, 1, 0): 2, (1, 1, 1): 1},
        differentials={(1, 1, 1): SparseMatrix(2, 1, {(0, 0): 1, (1, 0): -1})},
        name="interval",
    )


class TestChainComplex:
    def test_homology_of_interval(self):
        assert _interval().homology_dims() == {(1, 1, 0): 1, (1, 1, 1): 0}

    def test_euler_characteristic(self):
        assert _interval().euler_characteristic(1, 1) == 1

    def test_shape_checked_on_construction(self):
        with pytest.raises(ChainComplexError):
            ChainComplex(blocks={(1, 1, 0): 2, (1, 1, 1): 1},
                         differentials={(1, 1, 1): SparseMatrix(3, 1)})

    def test_d_squared_nonzero_reports_block(self):
        c = ChainComplex(
            blocks={(1, 1, 0): 1, (1, 1, 1): 1, (1, 1, 2): 1},
            differentials={
                (1, 1, 1): SparseMatrix(1, 1, {(0, 0): 1}),
                (1, 1, 2): SparseMatrix(1, 1, {(0, 0): 1}),
            },
        )
        with pytest.raises(ChainComplexError) as info:
            c.check_d_squared()
        assert info.value.context["block"] == (1, 1, 2)

    def test_parallel_ranks_match(self):
        c = direct_sum([_interval(), _interval()])
        assert c.homology_dims(parallelism=2) == c.homology_dims(parallelism=1)

    def test_restrict(self):
        sub = _interval().restrict(lambda k: k[2] == 0)
        assert sub.homology_dims() == {(1, 1, 0): 2}
