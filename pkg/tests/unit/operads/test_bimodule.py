# tests/unit/operads/test_bimodule.py
"""
Tests for the derivative bimodule and its quotients.
"""
from math import factorial

import pytest

from core.exceptions import TruncationExceededError
from operads.bimodule import (
    DerivativeAlgebra,
    decompositions,
    derivative_bimodule,
    indecomposables_zero,
    wheeled_part,
)
from species.core import Truncation


@pytest.fixture
def t3():
    return Truncation(max_arity=3, max_weight=4, max_degree=4)


class TestDerivative:
    def test_components_shift_arity(self, ass):
        d = DerivativeAlgebra(ass)
        assert [len(d.basis(j)) for j in range(4)] == [1, 2, 6, 24]
        assert len(DerivativeAlgebra(ass, reduced=True).basis(0)) == 0

    def test_beyond_table(self, ass):
        with pytest.raises(TruncationExceededError):
            DerivativeAlgebra(ass).basis(5)

    @pytest.mark.parametrize("name", ["com", "ass", "lie"])
    def test_bimodule_axioms(self, request, t3, name):
        derivative_bimodule(request.getfixturevalue(name), t3)

    def test_decompositions(self):
        assert len(decompositions(3)) == 8


class TestQuotients:
    def test_indecomposables_of_com(self, com, t3):
        ind = indecomposables_zero(com, t3)
        assert ind.dims == {0: 1, 1: 1, 2: 0, 3: 0}
        assert ind.free

    def test_indecomposables_of_ass(self, ass, t3):
        ind = indecomposables_zero(ass, t3)
        assert ind.dims == {0: 1, 1: 2, 2: 2, 3: 0}
        assert ind.free

    def test_indecomposables_of_lie(self, lie, t3):
        # one class per arity: uCom
        ind = indecomposables_zero(lie, t3)
        assert ind.dims == {0: 1, 1: 1, 2: 1, 3: 1}
        assert ind.free
        assert ind.recomposed == {j: factorial(j + 1) for j in range(4)}

    def test_indecomposables_of_prelie(self, prelie, t3):
        # uCom ⊗ uAss dimensionwise
        ind = indecomposables_zero(prelie, t3)
        assert ind.dims == {0: 1, 1: 2, 2: 5, 3: 16}
        assert ind.free

    def test_image_is_closed_under_relabelling(self, ass, t3):
        # x0 x2 x1 ⋆ is only reached by relabelling x0 x1 x2 ⋆
        ind = indecomposables_zero(ass, t3)
        assert ind.full.quotients[3].dim == 0
        assert ind.recomposed[2] == 6

    def test_wheeled_part_of_com(self, com, t3):
        wheels = wheeled_part(com, t3, reduced=False)
        assert [len(wheels.basis(j)) for j in range(4)] == [1, 1, 1, 1]
