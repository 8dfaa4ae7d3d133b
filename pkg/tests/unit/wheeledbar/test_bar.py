# tests/unit/wheeledbar/test_bar.py
"""
Tests for the operadic and wheeled bar constructions.
"""
from math import comb, factorial

import pytest

from core.exceptions import TruncationExceededError
from exactla.isotypic import isotypic_homology
from operads.factory import builtin, lie_to_ass
from species.core import Truncation
from wheeledbar.assembly import bar, chain_map, trivial_wheeled_bar, wheeled_bar_split
from wheeledbar.completion import Wheeling, wheeled_operad
from wheeledbar.coprop import bigraded_homology, coprop_completion, graded_symmetric_dims, homology_of


@pytest.fixture
def t4():
    return Truncation(max_arity=4, max_weight=4, max_degree=4)


def _diagonal(dims):
    return {k: v for k, v in dims.items() if v}


class TestOperadicBar:
    def test_chain_dims_of_com_in_arity_three(self, com, t4):
        c = bar(com, t4)
        assert c.dim((3, 2, 1)) == 1
        assert c.dim((3, 2, 2)) == 3

    @pytest.mark.parametrize(
        "name, dual",
        [("com", lambda n: factorial(n - 1)), ("ass", factorial), ("lie", lambda n: 1)],
    )
    def test_koszul_duals(self, request, t4, name, dual):
        c = bar(request.getfixturevalue(name), t4)
        c.check_equivariance()
        h = _diagonal(c.homology_dims())
        expected = {(n, n - 1, n - 1): dual(n) for n in range(2, 5)}
        expected[(1, 0, 0)] = 1
        assert h == expected

    def test_com_dual_is_lie_representation(self, com, t4):
        reports = isotypic_homology(bar(com, t4), 3)
        found = {r.partition: m for r in reports for m in r.multiplicity.values() if m}
        assert found == {(2, 1): 1}


class TestWheeledBar:
    def test_operadic_part_is_the_bar_construction(self, com, t4):
        split = trivial_wheeled_bar(com, t4)
        assert _diagonal(split.operadic.homology_dims()) == _diagonal(bar(com, t4).homology_dims())

    def test_lie_wheels_give_binomials(self, settings):
        t = Truncation(max_arity=3, max_weight=3, max_degree=4)
        lie = builtin("lie", 4, settings=settings)
        h = bigraded_homology(wheeled_operad(lie, Wheeling.TRIVIAL, t), t, settings)
        for n in range(1, 4):
            for d in range(1, n + 1):
                assert h.wheeled.get((n, n, d), 0) == comb(n - 1, d - 1)

    def test_completion_squares_to_zero(self, com, settings):
        t = Truncation(max_arity=3, max_weight=3, max_degree=4)
        data = wheeled_operad(com, Wheeling.COMPLETION, t)
        split = wheeled_bar_split(data, t, settings)
        split.operadic.check_d_squared()
        split.wheeled.check_d_squared()

    def test_lie_to_ass_is_a_chain_map(self, lie, ass, settings):
        t = Truncation(max_arity=3, max_weight=3, max_degree=3)
        f = chain_map(lie_to_ass, trivial_wheeled_bar(lie, t, settings), trivial_wheeled_bar(ass, t, settings))
        f.check()
        assert f.matrices


class TestCoprop:
    def test_exterior_and_polynomial_generators(self, t4):
        assert graded_symmetric_dims({(0, 1, 1): 1}, t4) == {(0, 0, 0): 1, (0, 1, 1): 1}
        poly = graded_symmetric_dims({(0, 1, 2): 1}, t4)
        assert poly == {(0, 0, 0): 1, (0, 1, 2): 1, (0, 2, 4): 1}

    def test_weight_zero_degree_zero_generator(self, t4):
        with pytest.raises(TruncationExceededError):
            graded_symmetric_dims({(0, 0, 0): 1}, t4)

    def test_completion_rejects_large_p(self, com, t4, settings):
        h = homology_of(trivial_wheeled_bar(com, t4, settings), settings)
        with pytest.raises(TruncationExceededError):
            coprop_completion(h, 5, 0, t4)

    def test_single_tree_component(self, com, t4, settings):
        h = homology_of(trivial_wheeled_bar(com, t4, settings), settings)
        one = coprop_completion(h, 1, 1, t4)
        assert one.get((1, 1, 0, 0), 0) >= 1


def _wheels(name, n_max, settings, isotypic=False):
    o = builtin(name, n_max + 1, settings=settings)
    t = Truncation(max_arity=n_max, max_weight=n_max, max_degree=n_max + 1)
    return homology_of(trivial_wheeled_bar(o, t, settings), settings, isotypic)


def _cyclic_pairs(n):
    # Cyc(s1) ⊗ Cyc(s1), both factors non-empty
    return sum(comb(n, a) * factorial(a - 1) * factorial(n - a - 1) for a in range(1, n))


def _prelie_wheels(n, d):
    hook = comb(n - 1, d - 1) if 1 <= d <= n else 0
    # uCom(1 ⊕ s1) ⊗ Cyc(1), one degree up
    rest = sum(comb(n, k) * factorial(k - 1) * comb(n - k, d - 1) for k in range(1, n + 1)) if d >= 1 else 0
    return hook + rest


@pytest.mark.slow
class TestWheelHomology:
    def test_com_is_cyclic(self, settings):
        h = _wheels("com", 6, settings)
        for n in range(1, 7):
            found = {k: v for k, v in h.wheeled.items() if k[0] == n and v}
            assert found == {(n, n, n): factorial(n - 1)}

    def test_ass_is_almost_diagonal(self, settings):
        h = _wheels("ass", 4, settings)
        for n in range(1, 5):
            found = {k: v for k, v in h.wheeled.items() if k[0] == n and v}
            expected = {(n, n, n): 2 * factorial(n - 1) + _cyclic_pairs(n), (n, n, n - 1): _cyclic_pairs(n)}
            assert found == {k: v for k, v in expected.items() if v}

    def test_ass_euler_characteristic(self, settings):
        h = _wheels("ass", 4, settings)
        for n in range(1, 5):
            chi = sum((-1) ** d * v for (m, _, d), v in h.wheeled.items() if m == n)
            assert chi == (-1) ** n * 2 * factorial(n - 1)

    def test_prelie(self, settings):
        h = _wheels("prelie", 4, settings)
        for n in range(1, 5):
            for d in range(0, n + 2):
                assert h.wheeled.get((n, n, d), 0) == _prelie_wheels(n, d)

    def test_lie_hooks_are_multiplicity_free(self, settings):
        h = _wheels("lie", 5, settings, isotypic=True)
        for n in range(1, 6):
            found = {
                (r.partition, wd): m
                for r in h.isotypic[("wheeled", n)]
                for wd, m in r.multiplicity.items()
                if m
            }
            hooks = {((n - d + 1,) + (1,) * (d - 1), (n, d)): 1 for d in range(1, n + 1)}
            assert found == hooks
