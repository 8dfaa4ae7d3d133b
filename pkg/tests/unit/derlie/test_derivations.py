# tests/unit/derlie/test_derivations.py
"""
Tests for free algebras, derivations and the divergence.
"""
import pytest

from core.exceptions import TruncationExceededError
from derlie.derivations import (
    DerivationVector,
    DerPlus,
    SDerPlus,
    bracket,
    check_cocycle,
    derivation_weight_blocks,
    divergence,
    sder_basis,
)
from derlie.free_algebra import FreeAlgebra, evaluated_dim
from exactla.rank import nullspace, rank

ASS4 = (0, 1, 2, 3)


class TestFreeAlgebra:
    def test_polynomial_dims(self, com):
        free = FreeAlgebra(com, 2, 3)
        # weight w is the span of the w+2 monomials of degree w+1
        assert free.dims() == {0: 0, 1: 3, 2: 4, 3: 5}
        assert len(free.basis(0, reduced=False)) == 2

    def test_tensor_and_lie_dims(self, ass, lie):
        assert FreeAlgebra(ass, 2, 2).dims() == {0: 0, 1: 4, 2: 8}
        # free Lie algebra on two letters: [x,y], then [[x,y],x] and [[x,y],y]
        assert FreeAlgebra(lie, 2, 2).dims() == {0: 0, 1: 1, 2: 2}

    def test_matches_character_count(self, lie):
        free = FreeAlgebra(lie, 3, 2)
        for w in (1, 2):
            assert len(free.basis(w)) == evaluated_dim(lie, 3, w + 1)

    def test_weight_beyond_table(self, com):
        with pytest.raises(TruncationExceededError):
            FreeAlgebra(com, 2, com.max_arity)

    def test_basis_beyond_bound(self, com):
        with pytest.raises(TruncationExceededError):
            FreeAlgebra(com, 2, 1).basis(2)

    def test_straightening_commutes_letters(self, com):
        free = FreeAlgebra(com, 2, 2)
        assert free.monomial(("c", 2), (1, 0)) == free.monomial(("c", 2), (0, 1))

    def test_lie_antisymmetry_on_words(self, lie):
        free = FreeAlgebra(lie, 2, 1)
        xy = free.monomial((0, 1), (0, 1))
        yx = free.monomial((0, 1), (1, 0))
        assert yx == {m: -c for m, c in xy.items()}
        assert free.monomial((0, 1), (0, 0)) == {}


class TestBracket:
    def test_vector_field_commutator(self, com):
        free = FreeAlgebra(com, 2, 2)
        x0sq = free.monomial(("c", 2), (0, 0))
        x1sq = free.monomial(("c", 2), (1, 1))
        d1 = DerivationVector({1: x0sq})  # x₀² ∂₁
        d2 = DerivationVector({0: x1sq})  # x₁² ∂₀
        expected = DerivationVector({
            0: {m: 2 * c for m, c in free.monomial(("c", 3), (0, 0, 1)).items()},
            1: {m: -2 * c for m, c in free.monomial(("c", 3), (0, 1, 1)).items()},
        })
        assert bracket(free, d1, d2) == expected

    def test_antisymmetric(self, ass):
        free = FreeAlgebra(ass, 2, 2)
        der = DerPlus(free)
        a, b = der.by_weight[1][0], der.by_weight[1][3]
        assert der.bracket(a, b) == {j: -c for j, c in der.bracket(b, a).items()}
        assert der.bracket(a, a) == {}

    def test_weight_pieces(self, com):
        free = FreeAlgebra(com, 2, 2)
        d = DerivationVector({0: free.monomial(("c", 2), (0, 1)), 1: free.monomial(("c", 3), (0, 0, 0))})
        assert sorted(d.weight_pieces(free)) == [1, 2]


class TestDivergence:
    def test_com_weight_one_rank(self, com):
        der = DerPlus(FreeAlgebra(com, 2, 1))
        m = der.divergence_matrix(1)
        assert m.cols == 6
        assert rank(m) == 2
        assert nullspace(m).dim == 4

    def test_partial_derivative_of_square(self, com):
        free = FreeAlgebra(com, 1, 1)
        # D = x² ∂ has divergence 2x, nonzero
        assert divergence(free, DerivationVector({0: free.monomial(("c", 2), (0, 0))}))

    def test_commutator_square_has_zero_divergence(self, ass):
        free = FreeAlgebra(ass, 2, 3)
        # x ↦ [x, y]², y ↦ 0
        f = free.element({
            (ASS4, (0, 1, 0, 1)): 1,
            (ASS4, (0, 1, 1, 0)): -1,
            (ASS4, (1, 0, 0, 1)): -1,
            (ASS4, (1, 0, 1, 0)): 1,
        })
        assert f
        assert divergence(free, DerivationVector({0: f})) == {}

    def test_inner_lie_derivation_has_zero_divergence(self, lie):
        free = FreeAlgebra(lie, 2, 2)
        # ad of [x, y]
        d = DerivationVector({
            0: free.monomial((0, 1, 2), (0, 1, 0)),
            1: free.monomial((0, 1, 2), (0, 1, 1)),
        })
        assert not d.is_zero()
        assert divergence(free, d) == {}

    def test_cocycle_identity(self, ass):
        der = DerPlus(FreeAlgebra(ass, 2, 2))
        ones = der.by_weight[1]
        for a in ones[:4]:
            for b in ones[4:]:
                assert check_cocycle(der, der.vector(a), der.vector(b))

    def test_cocycle_identity_com(self, com):
        der = DerPlus(FreeAlgebra(com, 2, 2))
        ones = der.by_weight[1]
        assert all(check_cocycle(der, der.vector(a), der.vector(b)) for a in ones for b in ones)


class TestSpecialDerivations:
    @pytest.mark.parametrize("name,expected", [("ass", 4), ("lie", 0), ("com", 4)])
    def test_weight_one_dims(self, request, name, expected):
        free = FreeAlgebra(request.getfixturevalue(name), 2, 1)
        sder = SDerPlus(DerPlus(free))
        assert len(sder.by_weight.get(1, [])) == expected
        assert len(sder_basis(free, 1)) == expected

    def test_kernel_vectors_are_divergence_free(self, ass):
        free = FreeAlgebra(ass, 2, 1)
        for d in sder_basis(free, 1):
            assert divergence(free, d) == {}

    def test_closed_under_bracket(self, com):
        sder = SDerPlus(DerPlus(FreeAlgebra(com, 2, 2)))
        ones = sder.by_weight[1]
        for a in ones:
            for b in ones:
                image = bracket(sder.free, sder.vector(a), sder.vector(b))
                assert divergence(sder.free, image) == {}

    def test_weight_blocks(self, lie):
        der = DerPlus(FreeAlgebra(lie, 2, 2))
        assert derivation_weight_blocks(der) == {1: 2, 2: 4}
