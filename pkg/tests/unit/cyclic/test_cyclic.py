# tests/unit/cyclic/test_cyclic.py
"""
Tests for cyclic complexes and the comparison with wheel homology.
"""
from math import factorial

import pytest

from cyclic.calchom import CheckStatus, calchom_check
from cyclic.complex import cyclic_complex, cyclic_homology, hc0_dims
from operads.bimodule import DerivativeAlgebra, indecomposables_zero
from species.core import Truncation


@pytest.fixture
def t3():
    return Truncation(max_arity=3, max_weight=3, max_degree=3)


class TestCyclicHomology:
    def test_square_zero_letters_give_cyclic_words(self, com, t3, settings):
        # ∂(Com-bar)_0 is one letter in arity one whose square vanishes
        algebra = indecomposables_zero(com, t3).reduced
        hc = cyclic_homology(algebra, t3, settings)
        assert hc.dims == {(n, n, n - 1): factorial(n - 1) for n in range(1, 4)}

    def test_shift_moves_degree_up(self, com, t3, settings):
        hc = cyclic_homology(indecomposables_zero(com, t3).reduced, t3, settings)
        assert hc.shifted() == {(n, n, n): factorial(n - 1) for n in range(1, 4)}

    def test_complex_is_equivariant(self, ass, t3, settings):
        c = cyclic_complex(DerivativeAlgebra(ass, reduced=True), t3, settings)
        c.check_d_squared()
        c.check_equivariance()

    def test_commutator_quotient_of_derivative_lie(self, lie, t3):
        dims = hc0_dims(DerivativeAlgebra(lie), t3)
        assert [dims[j] for j in range(1, 4)] == [factorial(j - 1) for j in range(1, 4)]


class TestCalchom:
    @pytest.mark.parametrize("name", ["com", "ass", "lie"])
    def test_wheels_are_cyclic_homology(self, request, t3, settings, name):
        result = calchom_check(request.getfixturevalue(name), t3, settings)
        assert result.status == CheckStatus.PASS
        assert not result.mismatches()
        assert {row.part for row in result.rows} == {"operadic", "wheeled"}

    def test_skipped_when_not_free(self, com, t3, settings, mocker):
        fake = mocker.Mock(free=False, dims={0: 1}, expected={0: 1})
        mocker.patch("cyclic.calchom.indecomposables_zero", return_value=fake)
        result = calchom_check(com, t3, settings)
        assert result.status == CheckStatus.SKIPPED
        assert result.reason
