# tests/unit/operads/test_models.py
"""
Tests for the builtin operads, the factory and spec files.
"""
import json
import os
from fractions import Fraction

import pytest

from core.exceptions import (
    ConfigurationError,
    InvalidOperadError,
    NonPositiveWeightError,
    OperadAxiomError,
    TruncationExceededError,
)
from operads.factory import (
    OperadName,
    StructureConstants,
    builtin,
    lie_to_ass,
    load_operad_spec,
    map_combo,
    table_from_spec,
)
from operads.models.alg1 import Alg1Model, dual_numbers, unitalized_field
from operads.table import OperadTable


class TestBuiltins:
    @pytest.mark.parametrize(
        "name, dims",
        [
            ("com", [1, 1, 1, 1]),
            ("ass", [1, 2, 6, 24]),
            ("lie", [1, 1, 2, 6]),
            ("prelie", [1, 2, 9, 64]),
        ],
    )
    def test_dimensions(self, settings, name, dims):
        o = builtin(name, 4, settings=settings)
        assert [o.dim(n) for n in range(1, 5)] == dims

    @pytest.mark.parametrize("name", ["com", "ass", "lie", "prelie"])
    def test_axioms(self, settings, name):
        builtin(name, 4, settings=settings).check_axioms()

    def test_weight_is_arity_minus_one(self, lie):
        assert {lie.weight(tag) for tag in lie.basis(4)} == {3}
        assert lie.weight(lie.unit) == 0

    def test_unknown_name(self, settings):
        with pytest.raises(InvalidOperadError):
            builtin("poisson", 3, settings=settings)

    def test_beyond_truncation(self, com):
        with pytest.raises(TruncationExceededError):
            com.basis(6)

    def test_lie_antisymmetry(self, lie):
        assert lie.relabel((0, 1), (1, 0)) == {(0, 1): -1}

    def test_lie_to_ass_is_a_morphism(self, lie, ass):
        assert lie_to_ass((0, 1)) == {(0, 1): 1, (1, 0): -1}
        a, b = (0, 1), (0, 1)
        for i in range(2):
            left = map_combo(lie_to_ass, lie.compose(a, i, b))
            right = ass.compose_combos(lie_to_ass(a), i, lie_to_ass(b))
            assert left == right

    def test_composition_tensors_are_cached(self, ass):
        ass.composition_matrix(3, 0, 2)
        misses = ass.cache.misses
        ass.composition_matrix(3, 0, 2)
        assert ass.cache.misses == misses


class TestAlg1:
    def test_dual_numbers(self, settings):
        o = OperadTable(dual_numbers(), 2, settings=settings)
        assert o.graded
        assert o.compose(("e", 1), 0, ("e", 1)) == {}
        o.check_axioms()

    def test_unitalized_field_is_ungraded(self):
        model = unitalized_field()
        assert not model.graded
        assert model.compose(("e", 1), 0, ("e", 1)) == {("e", 1): 1}

    def test_rejects_nonassociative_constants(self):
        # e1 e1 = e2, e2 e1 = 0 but e1 e2 = e1: not associative
        with pytest.raises(OperadAxiomError):
            Alg1Model(3, [[1, 1, 2, 1], [1, 2, 1, 1]])

    def test_rejects_weight_zero_ideal(self):
        with pytest.raises(NonPositiveWeightError):
            Alg1Model(2, [], weights=[0, 0])

    def test_rational_constants(self):
        model = Alg1Model(2, [[1, 1, 1, "1/2"]])
        assert model.compose(("e", 1), 0, ("e", 1)) == {("e", 1): Fraction(1, 2)}

    def test_alg1_needs_constants(self, settings):
        with pytest.raises(InvalidOperadError):
            builtin(OperadName.ALG1.value, 1, settings=settings)


class TestSpecFiles:
    def test_load_alg1_spec(self, temp_dir, settings):
        path = os.path.join(temp_dir, "kplus.json")
        with open(path, "w") as f:
            json.dump({
                "name": "alg1",
                "arity1_structure_constants": {"dim": 2, "products": [[1, 1, 1, 1]]},
                "max_arity": 2,
            }, f)
        spec = load_operad_spec(path)
        assert spec.arity1_structure_constants == StructureConstants(dim=2, products=[[1, 1, 1, 1]])
        o = table_from_spec(spec, settings)
        assert o.dim(1) == 2 and o.dim(2) == 0

    def test_invalid_spec_is_configuration_error(self, temp_dir):
        path = os.path.join(temp_dir, "bad.json")
        with open(path, "w") as f:
            json.dump({"name": "poisson"}, f)
        with pytest.raises(ConfigurationError):
            load_operad_spec(path)

    def test_missing_file(self, temp_dir):
        with pytest.raises(ConfigurationError):
            load_operad_spec(os.path.join(temp_dir, "absent.json"))

