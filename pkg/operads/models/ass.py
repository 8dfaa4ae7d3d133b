# operads/models/ass.py
"""
The associative operad.

A basis tag is the word (w_0, ..., w_{n-1}): the product x_{w_0} ... x_{w_{n-1}}.
"""
from itertools import permutations
from typing import List, Sequence, Tuple

from exactla.combos import Combo

from ..base import OperadModel

Word = Tuple[int, ...]


def substitute(word: Word, i: int, inner: Word) -> Word:
    """Replace letter i of word by inner (shifted to i..), renumbering the rest."""
    m = len(inner)
    out = []
    for letter in word:
        if letter == i:
            out.extend(i + x for x in inner)
        elif letter > i:
            out.append(letter + m - 1)
        else:
            out.append(letter)
    return tuple(out)


class AssModel(OperadModel):
    name = "ass"

    def basis(self, n: int) -> List[Word]:
        if n < 1:
            return []
        return [tuple(p) for p in permutations(range(n))]

    @property
    def unit(self) -> Word:
        return (0,)

    def compose(self, a: Word, i: int, b: Word) -> Combo:
        return {substitute(a, i, b): 1}

    def relabel(self, tag: Word, sigma: Sequence[int]) -> Combo:
        return {tuple(sigma[x] for x in tag): 1}

    def arity(self, tag: Word) -> int:
        return len(tag)
