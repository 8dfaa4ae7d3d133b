# tests/unit/derlie/test_ce.py
"""
Tests for Chevalley-Eilenberg complexes and their gl(V)-invariants.
"""
import pytest

from core.exceptions import ConfigurationError
from derlie.ce import (
    CEAlgebra,
    ce_complex,
    ce_homology,
    coefficient_basis,
    derived_divergence_check,
    divergence_surjectivity_check,
    koszul_check,
)
from derlie.invariants import gl_invariants, invariant_subspaces
from exactla.complex import below
from species.core import Truncation


def _nonzero(c):
    return {k: v for k, v in c.homology_dims().items() if v}


@pytest.fixture
def t2():
    return Truncation(max_arity=3, max_weight=2, max_degree=2)


@pytest.fixture
def t1():
    return Truncation(max_arity=3, max_weight=1, max_degree=2)


class TestCoefficients:
    def test_basis_size(self):
        assert len(coefficient_basis(3, 2, 1)) == 27
        assert coefficient_basis(2, 0, 0) == [((), ())]


class TestComplex:
    @pytest.mark.parametrize("algebra", list(CEAlgebra))
    def test_d_squared(self, com, t2, settings, algebra):
        c = ce_complex(algebra, com, 2, (0, 0), t2, settings)
        c.check_d_squared()

    def test_d_squared_with_coefficients(self, lie, t2, settings):
        ce_complex(CEAlgebra.DER_PLUS, lie, 2, (1, 1), t2, settings).check_d_squared()

    def test_gl_action_commutes_with_d(self, com, t2, settings):
        c = ce_complex(CEAlgebra.DER_PLUS, com, 2, (1, 0), t2, settings)
        e01 = c.operators["gl:0,1"]
        for key, d in c.differentials.items():
            if key in e01 and below(key) in e01:
                assert e01[below(key)] @ d == d @ e01[key]

    def test_block_keys(self, com, t2, settings):
        c = ce_complex(CEAlgebra.DER_PLUS, com, 2, (1, 0), t2, settings)
        assert {p for p, _, _ in c.keys()} == {1}
        assert all(d <= t2.max_degree and w <= t2.max_weight for _, w, d in c.keys())

    def test_top_degree_is_untrusted(self, com, t2, settings):
        c = ce_complex(CEAlgebra.DER_PLUS, com, 2, (0, 0), t2, settings)
        assert all(d == t2.max_degree for _, _, d in c.untrusted)

    def test_unknown_algebra(self, com, t2, settings):
        with pytest.raises(ConfigurationError):
            ce_complex("der++", com, 2, (0, 0), t2, settings)

    def test_negative_coefficients(self, com, t2, settings):
        with pytest.raises(ConfigurationError):
            ce_complex(CEAlgebra.DER_PLUS, com, 2, (-1, 0), t2, settings)


class TestInvariants:
    @pytest.mark.parametrize("coeff,expected", [((1, 1), 1), ((0, 2), 0), ((2, 2), 2)])
    def test_coefficient_invariants(self, com, t1, settings, coeff, expected):
        result = ce_homology(CEAlgebra.DER_PLUS, com, 2, coeff, t1, settings, weights=[0])
        assert result.chain_dims.get((0, 0), 0) == expected
        assert result.dims.get((0, 0), 0) == expected

    def test_kernel_method_on_full_complex(self, com, t1, settings):
        c = ce_complex(CEAlgebra.DER_PLUS, com, 2, (2, 2), t1, settings, weights=[0])
        assert c.dim((2, 0, 0)) == 16
        assert invariant_subspaces(c, 2)[(2, 0, 0)].dim == 2

    def test_torus_zero_route_agrees(self, lie, t2, settings):
        full = gl_invariants(ce_complex(CEAlgebra.DER_PLUS, lie, 2, (1, 1), t2, settings), 2)
        cut = gl_invariants(
            ce_complex(CEAlgebra.DER_PLUS, lie, 2, (1, 1), t2, settings, torus_zero=True), 2
        )
        assert _nonzero(full) == _nonzero(cut)

    def test_invariant_flag_is_recorded(self, com, t1, settings):
        result = ce_homology(CEAlgebra.DER_PLUS, com, 2, (0, 0), t1, settings, invariant=False)
        assert result.invariant is False
        assert result.dims[(0, 0)] == 1

    def test_coefficient_factors_split_by_s_p(self, com, t1, settings):
        result = ce_homology(CEAlgebra.DER_PLUS, com, 2, (2, 2), t1, settings, weights=[0], isotypic=True)
        # identity and transposition span trivial plus sign
        assert result.isotypic == {(2,): {(0, 0): 1}, (1, 1): {(0, 0): 1}}

    def test_single_factor_is_trivial(self, com, t1, settings):
        result = ce_homology(CEAlgebra.DER_PLUS, com, 2, (1, 1), t1, settings, weights=[0], isotypic=True)
        assert result.isotypic == {(1,): {(0, 0): 1}}


class TestDerivedChecks:
    def test_sder_against_semidirect(self, com, t1, settings):
        rows = derived_divergence_check(com, 2, (0, 0), t1, settings)
        assert rows
        assert all(row.match for row in rows)

    def test_koszul_diagonal(self, com, t1, settings):
        check = koszul_check(com, 4, t1, settings)
        assert check.weights == [1]
        assert check.diagonal


class TestDivergenceSurjectivity:
    @pytest.mark.parametrize("name", ["com", "ass", "lie"])
    @pytest.mark.parametrize("dim_v", [2, 3])
    def test_onto_below_dim_v(self, request, name, dim_v):
        rows = divergence_surjectivity_check(request.getfixturevalue(name), dim_v)
        assert [row.w for row in rows] == list(range(1, dim_v))
        assert all(row.full for row in rows)

    def test_com_weight_one(self, com):
        (row,) = divergence_surjectivity_check(com, 2)
        assert (row.target, row.image) == (2, 2)

    def test_nothing_below_dim_one(self, com):
        assert divergence_surjectivity_check(com, 1) == []
