# operads/models/com.py
"""The commutative operad: one operation in every positive arity."""
from typing import List, Sequence, Tuple

from exactla.combos import Combo

from ..base import OperadModel


class ComModel(OperadModel):
    name = "com"

    def basis(self, n: int) -> List[Tuple[str, int]]:
        return [("c", n)] if n >= 1 else []

    @property
    def unit(self) -> Tuple[str, int]:
        return ("c", 1)

    def compose(self, a, i: int, b) -> Combo:
        return {("c", a[1] + b[1] - 1): 1}

    def relabel(self, tag, sigma: Sequence[int]) -> Combo:
        return {tag: 1}

    def arity(self, tag) -> int:
        return tag[1]
