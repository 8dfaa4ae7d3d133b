# operads/models/lie.py
"""
The Lie operad in the left-normed basis.

A basis tag (0, s_1, ..., s_{n-1}) stands for [[...[x_0, x_{s_1}], ...], x_{s_{n-1}}],
so Lie(n) has (n-1)! basis elements. Arbitrary bracket trees (a leaf is an
int, a bracket is a pair) are straightened back to this basis by
antisymmetry, which puts the smallest leaf on the left, and by the Jacobi
identity in the form [X, [C, D]] = [[X, C], D] - [[X, D], C].
"""
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Sequence, Tuple, Union

from exactla.combos import Combo, add_into, add_term

from ..base import OperadModel

Tree = Union[int, Tuple["Tree", "Tree"]]
Seq = Tuple[int, ...]


def tree_of(seq: Seq) -> Tree:
    tree: Tree = seq[0]
    for leaf in seq[1:]:
        tree = (tree, leaf)
    return tree


def map_leaves(tree: Tree, fn) -> Tree:
    if isinstance(tree, int):
        return fn(tree)
    return (map_leaves(tree[0], fn), map_leaves(tree[1], fn))


def min_leaf(tree: Tree) -> int:
    if isinstance(tree, int):
        return tree
    return min(min_leaf(tree[0]), min_leaf(tree[1]))


def _bracket_with(seq: Seq, right: Tree) -> Combo:
    """Left-normed expansion of [seq, right] where seq starts with the minimal leaf."""
    if isinstance(right, int):
        return {seq + (right,): 1}
    c, d = right
    out: Combo = {}
    for first, x in _bracket_with(seq, c).items():
        add_into(out, _bracket_with(first, d), x)
    for first, x in _bracket_with(seq, d).items():
        add_into(out, _bracket_with(first, c), -x)
    return out


@lru_cache(maxsize=None)
def straighten(tree: Tree) -> Dict[Seq, int]:
    """Coordinates of a bracket tree in the left-normed basis."""
    if isinstance(tree, int):
        return {(tree,): 1}
    left, right = tree
    if min_leaf(left) > min_leaf(right):
        return {k: -v for k, v in straighten((right, left)).items()}
    out: Combo = {}
    for seq, x in straighten(left).items():
        add_into(out, _bracket_with(seq, right), x)
    return out


def associative_expansion(tree: Tree) -> Dict[Seq, int]:
    """Image in the associative operad: [a, b] = ab - ba on words."""
    if isinstance(tree, int):
        return {(tree,): 1}
    left = associative_expansion(tree[0])
    right = associative_expansion(tree[1])
    out: Combo = {}
    for u, x in left.items():
        for v, y in right.items():
            add_term(out, u + v, x * y)
            add_term(out, v + u, -x * y)
    return out


class LieModel(OperadModel):
    name = "lie"

    def basis(self, n: int) -> List[Seq]:
        if n < 1:
            return []
        return [(0,) + tuple(p) for p in permutations(range(1, n))]

    @property
    def unit(self) -> Seq:
        return (0,)

    def compose(self, a: Seq, i: int, b: Seq) -> Combo:
        m = len(b)
        inner = map_leaves(tree_of(b), lambda x: x + i)

        def place(leaf: int) -> Tree:
            if leaf == i:
                return inner
            return leaf + m - 1 if leaf > i else leaf

        return dict(straighten(map_leaves(tree_of(a), place)))

    def relabel(self, tag: Seq, sigma: Sequence[int]) -> Combo:
        return dict(straighten(map_leaves(tree_of(tag), lambda x: sigma[x])))

    def arity(self, tag: Seq) -> int:
        return len(tag)

    def to_ass(self, tag: Seq) -> Combo:
        """The operad morphism Lie → Ass on a basis element."""
        return associative_expansion(tree_of(tag))
