# operads/models/alg1.py
"""
Arity-one operads: a unital augmented associative algebra A = k·e_0 ⊕ Ā.

Structure constants are given on the basis e_0 (the unit), e_1, ..., e_{r-1};
the augmentation ideal Ā is spanned by e_1, ..., e_{r-1}. Composition is
multiplication: e_j ∘_0 e_k = e_j · e_k.

A weight rule assigns a weight to every basis vector of Ā. Without one the
algebra is ungraded: every weight is zero and blocks are bounded by degree
only.
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.exceptions import InvalidOperadError, NonPositiveWeightError, OperadAxiomError
from exactla.combos import Combo, Scalar, add_into, normalize_scalar

from ..base import OperadModel

Basis = Tuple[str, int]


def _coefficient(value: Any) -> Scalar:
    """Accepts ints and "p/q" strings."""
    return normalize_scalar(Fraction(value))


class Alg1Model(OperadModel):
    """Associative algebra with unit e_0, presented by structure constants."""

    top_arity = 1

    def __init__(
        self,
        dim: int,
        products: Sequence[Sequence[Any]],
        weights: Optional[Sequence[int]] = None,
        name: str = "alg1",
    ):
        if dim < 1:
            raise InvalidOperadError("an arity-one operad needs at least its unit", dim=dim)
        self.name = name
        self.dim = dim
        self._table: Dict[Tuple[int, int], Combo] = {}
        for row in products:
            j, k, l, c = row
            if not all(0 <= x < dim for x in (j, k, l)):
                raise InvalidOperadError(f"structure constant {row} out of range", dim=dim)
            add_into(self._table.setdefault((j, k), {}), {l: _coefficient(c)})
        self._weights = list(weights) if weights is not None else None
        if self._weights is not None and len(self._weights) != dim:
            raise InvalidOperadError("weight rule must give one weight per basis vector")
        self._products = [list(row) for row in products]
        self.validate()

    # ---------- algebra ------------------------------------------------------

    def product(self, j: int, k: int) -> Combo:
        if j == 0:
            return {k: 1}
        if k == 0:
            return {j: 1}
        return dict(self._table.get((j, k), {}))

    def validate(self) -> None:
        """
        Associativity, unit, ideal closure and the weight rule.

        Raises:
            OperadAxiomError: associativity fails or Ā is not an ideal
            NonPositiveWeightError: a declared weight rule is not positive on Ā
        """
        for (j, k) in self._table:
            if j == 0 or k == 0:
                expected = {k: 1} if j == 0 else {j: 1}
                if self._table[(j, k)] != expected:
                    raise OperadAxiomError("e_0 must act as the unit", pair=(j, k))
        for j in range(1, self.dim):
            for k in range(1, self.dim):
                if self.product(j, k).get(0):
                    raise OperadAxiomError(
                        "the augmentation ideal is not closed under products", pair=(j, k)
                    )
                for l in range(1, self.dim):
                    left: Combo = {}
                    for x, c in self.product(j, k).items():
                        add_into(left, self.product(x, l), c)
                    right: Combo = {}
                    for x, c in self.product(k, l).items():
                        add_into(right, self.product(j, x), c)
                    if left != right:
                        raise OperadAxiomError(
                            "structure constants are not associative", triple=(j, k, l)
                        )
        if self._weights is None:
            return
        if self._weights[0] != 0:
            raise NonPositiveWeightError("the unit must have weight zero")
        for j in range(1, self.dim):
            if self._weights[j] <= 0:
                raise NonPositiveWeightError(f"e_{j} has weight {self._weights[j]}", basis=j)
            for k in range(1, self.dim):
                for x in self.product(j, k):
                    if self._weights[x] != self._weights[j] + self._weights[k]:
                        raise NonPositiveWeightError(
                            "weight rule is not additive", pair=(j, k)
                        )

    # ---------- operad interface ---------------------------------------------

    def basis(self, n: int) -> List[Basis]:
        return [("e", j) for j in range(self.dim)] if n == 1 else []

    @property
    def unit(self) -> Basis:
        return ("e", 0)

    def compose(self, a: Basis, i: int, b: Basis) -> Combo:
        return {("e", x): c for x, c in self.product(a[1], b[1]).items()}

    def relabel(self, tag: Basis, sigma: Sequence[int]) -> Combo:
        return {tag: 1}

    def arity(self, tag: Basis) -> int:
        return 1

    def weight(self, tag: Basis) -> int:
        if self._weights is None:
            return 0
        return self._weights[tag[1]]

    @property
    def graded(self) -> bool:
        return self._weights is not None

    def descriptor(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "dim": self.dim,
            "products": sorted(self._products, key=repr),
            "weights": self._weights,
        }


def dual_numbers() -> Alg1Model:
    """A₊ = k[ε]/(ε²) with ε in weight 1."""
    return Alg1Model(2, [], weights=[0, 1], name="alg1")


def unitalized_field() -> Alg1Model:
    """k₊ = k ⊕ k·e with e² = e, ungraded."""
    return Alg1Model(2, [[1, 1, 1, 1]], weights=None, name="alg1")
