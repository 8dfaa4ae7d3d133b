# tests/unit/exactla/test_combinatorics.py
"""
Tests for signs, permutations and symmetric group characters.
"""
from math import factorial

import pytest

from core.exceptions import TruncationExceededError
from exactla.characters import (
    centralizer_size,
    character,
    character_table,
    cycle_type,
    irreducible_dimension,
    partitions,
    permutations_with_words,
)
from exactla.combos import add_into, perm_sign, sorting_perm, tensor_combos


class TestCombos:
    def test_add_into_drops_zeros(self):
        acc = {"a": 1, "b": 2}
        add_into(acc, {"a": -1, "c": 1})
        assert acc == {"b": 2, "c": 1}

    def test_tensor_expansion(self):
        assert tensor_combos([{"x": 2}, {"y": 1, "z": -1}]) == {("x", "y"): 2, ("x", "z"): -2}

    @pytest.mark.parametrize("seq, sign", [((0, 1, 2), 1), ((1, 0, 2), -1), ((2, 0, 1), 1)])
    def test_perm_sign(self, seq, sign):
        assert perm_sign(seq) == sign

    def test_sorting_perm_sends_old_slot_to_new(self):
        keys = ["c", "a", "b"]
        sigma = sorting_perm(keys)
        placed = [None] * 3
        for j, new in enumerate(sigma):
            placed[new] = keys[j]
        assert placed == ["a", "b", "c"]


class TestCharacters:
    def test_partitions(self):
        assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(partitions(0)) == [()]

    def test_sum_of_squares_is_order(self):
        for n in range(1, 7):
            assert sum(irreducible_dimension(lam) ** 2 for lam in partitions(n)) == factorial(n)

    def test_known_values(self):
        assert character((2, 1), (1, 1, 1)) == 2
        assert character((2, 1), (2, 1)) == 0
        assert character((2, 1), (3,)) == -1
        assert character((1, 1, 1), (2, 1)) == -1

    def test_column_orthogonality(self):
        table = character_table(5)
        for mu in partitions(5):
            total = sum(table[lam][mu] ** 2 for lam in partitions(5))
            assert total == centralizer_size(mu)

    def test_table_bound(self):
        with pytest.raises(TruncationExceededError):
            character_table(9, max_n=8)

    def test_words_generate_group(self):
        perms = permutations_with_words(4)
        assert len(perms) == 24
        assert {cycle_type(p) for p, _ in perms} == set(partitions(4))
