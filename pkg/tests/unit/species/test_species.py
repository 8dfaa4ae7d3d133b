# tests/unit/species/test_species.py
"""
Tests for species, their products and dimension series.
"""
from math import factorial

import pytest

from core.exceptions import TruncationExceededError
from species.core import Truncation
from species.products import cauchy, compose, cyc, derivative, from_dims, uass, ucom
from species.series import cauchy_power, cyc_dims, exp_dims, tree_dims


@pytest.fixture
def t4():
    return Truncation(max_arity=4, max_weight=4, max_degree=4)


class TestSpecies:
    def test_uass_has_all_words(self, t4):
        s = uass(t4)
        assert [s.dim(n) for n in range(5)] == [factorial(n) for n in range(5)]
        s.check_braid_relations()

    def test_basis_beyond_truncation(self, t4):
        with pytest.raises(TruncationExceededError):
            ucom(t4).basis(5)

    def test_cauchy_of_ucom_counts_subsets(self, t4):
        s = cauchy(ucom(t4), ucom(t4), t4)
        assert [s.dim(n) for n in range(5)] == [1, 2, 4, 8, 16]

    def test_derivative_shifts_arity(self, t4):
        s = derivative(uass(t4))
        assert s.dim(2) == 6

    def test_compose_exponential(self, t4):
        x = from_dims("x", {1: 1}, max_arity=4)
        s = compose(ucom(t4), x, t4)
        assert [s.dim(n) for n in range(1, 5)] == [1, 1, 1, 1]

    def test_cyclic_orders(self, t4):
        x = from_dims("x", {1: 1}, max_arity=4)
        s = cyc(x, t4)
        assert [s.dim(n) for n in range(1, 5)] == [1, 1, 2, 6]


class TestSeries:
    def test_cauchy_power_of_x(self, t4):
        assert cauchy_power({(1, 0, 0): 1}, 3, t4) == {(3, 0, 0): 6}

    def test_exp_of_x(self, t4):
        assert exp_dims({(1, 0, 0): 1}, t4) == {(n, 0, 0): 1 for n in range(5)}

    def test_cyclic_words_of_x(self, t4):
        assert cyc_dims({(1, 0, 0): 1}, t4) == {(n, 0, 0): factorial(n - 1) for n in range(1, 5)}

    def test_binary_trees(self, t4):
        trees = tree_dims({(2, 1, 0): 1}, t4)
        assert trees[(1, 0, 0)] == 1
        assert trees[(2, 1, 0)] == 1
        assert trees[(3, 2, 0)] == 3
        assert trees[(4, 3, 0)] == 15

    def test_exp_rejects_arity_zero(self, t4):
        with pytest.raises(ValueError):
            exp_dims({(0, 1, 0): 1}, t4)
