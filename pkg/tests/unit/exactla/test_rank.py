# tests/unit/exactla/test_rank.py
"""
Tests for exact rank, kernels and quotients.
"""
from fractions import Fraction
from importlib import import_module

import pytest

from core.exceptions import RankDisagreementError
from exactla.rank import (
    checked_rank,
    dense_rank,
    intersect_kernels,
    modular_rank,
    nullspace,
    quotient_basis,
    rank,
)
from exactla.sparse import SparseMatrix


def _dense(rows):
    return SparseMatrix(len(rows), len(rows[0]), {
        (r, c): v for r, row in enumerate(rows) for c, v in enumerate(row) if v
    })


class TestRank:
    def test_rational_entries(self):
        m = _dense([[Fraction(1, 2), 1, 0], [1, 2, 0], [0, 0, Fraction(3, 7)]])
        assert rank(m) == 2

    def test_empty_and_zero(self):
        assert rank(SparseMatrix.zero(0, 5)) == 0
        assert rank(SparseMatrix.zero(3, 3)) == 0
        assert rank(SparseMatrix.identity(4)) == 4

    def test_agrees_with_dense_oracle(self):
        # row 2 = 2 row 1, row 4 = row 1 - row 3
        m = _dense([[1, 2, 3, 4], [2, 4, 6, 8], [1, 0, 1, 0], [0, 2, 2, 4]])
        assert rank(m) == dense_rank(m) == 2

    def test_modular_rank_never_exceeds(self):
        m = _dense([[2, 0], [0, 3]])
        assert modular_rank(m, 2) == 1
        assert rank(m) == 2

    def test_checked_rank_detects_disagreement(self, mocker):
        # exactla re-exports the function `rank`, which shadows the submodule as a
        # package attribute, so patch the module object directly.
        mocker.patch.object(import_module("exactla.rank"), "dense_rank", return_value=7)
        with pytest.raises(RankDisagreementError):
            checked_rank(SparseMatrix.identity(2), dense_max_cols=10)

    def test_checked_rank_with_oracles(self):
        m = _dense([[1, 1], [1, 1]])
        assert checked_rank(m, dense_max_cols=10, modular=True) == 1


class TestKernels:
    def test_nullspace(self):
        m = _dense([[1, 1, 0], [0, 0, 1]])
        kernel = nullspace(m)
        assert kernel.dim == 1
        vector = kernel.vectors[0]
        assert m.apply(vector) == {}

    def test_intersection(self):
        a = _dense([[1, -1, 0]])
        b = _dense([[0, 1, -1]])
        common = intersect_kernels(3, [a, b])
        assert common.dim == 1
        assert common.contains({0: 2, 1: 2, 2: 2})

    def test_quotient_keeps_small_indices(self):
        q = quotient_basis(3, [{0: 1, 2: -1}])
        assert q.dim == 2
        assert q.representatives == [0, 1]
        assert q.project(2) == q.project(0)
