# operads/table.py
"""
Operad Table Module

An OperadTable wraps an operad model with a truncation, indexes its bases,
caches partial-composition tensors per (n, i, m) through the cache layer,
and checks the operad axioms on basis triples.
"""
import threading
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from core.cache import CachedComputation
from core.cache.backends import operad_fingerprint
from core.config import Settings, get_settings
from core.exceptions import NonPositiveWeightError, OperadAxiomError, TruncationExceededError
from core.logging import get_logger
from exactla.combos import Combo, Scalar, add_into
from exactla.sparse import SparseMatrix
from species.core import Species, Truncation
from species.products import from_operad

from .base import OperadModel, Tag

logger = get_logger(__name__)


def adjacent(n: int, j: int) -> Tuple[int, ...]:
    """The transposition s_j as a relabelling of n inputs."""
    return tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(n))


class OperadTable:
    """A truncated operad with indexed bases and cached composition tensors."""

    def __init__(
        self,
        model: OperadModel,
        max_arity: int,
        settings: Optional[Settings] = None,
        cache: Optional[CachedComputation] = None,
    ):
        if max_arity < 1:
            raise TruncationExceededError("operad tables need max_arity >= 1", max_arity=max_arity)
        self.model = model
        self.name = model.name
        self.max_arity = max_arity
        self.settings = settings or get_settings()
        self.cache = cache or CachedComputation(self.settings)
        self.fingerprint = operad_fingerprint(model.descriptor())
        self._bases: Dict[int, List[Tag]] = {}
        self._index: Dict[int, Dict[Tag, int]] = {}
        self._tensors: Dict[Tuple[int, int, int], Dict[Tuple[int, int], Dict[int, Scalar]]] = {}
        self._relabels: Dict[Tuple[Tag, Tuple[int, ...]], Combo] = {}
        self._lock = threading.Lock()
        logger.debug("operad_table_created", operad=self.name, max_arity=max_arity)

    # ---------- bases --------------------------------------------------------

    def basis(self, n: int) -> List[Tag]:
        if n > self.max_arity:
            raise TruncationExceededError(
                f"{self.name}({n}) is beyond the truncation {self.max_arity}",
                operad=self.name,
                arity=n,
            )
        if n not in self._bases:
            basis = list(self.model.basis(n)) if n >= 0 else []
            self._bases[n] = basis
            self._index[n] = {tag: j for j, tag in enumerate(basis)}
        return self._bases[n]

    def ideal_basis(self, n: int) -> List[Tag]:
        """Basis of the augmentation ideal Ō(n)."""
        return [tag for tag in self.basis(n) if not self.model.augmentation(tag)]

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def index(self, n: int, tag: Tag) -> int:
        self.basis(n)
        return self._index[n][tag]

    @property
    def unit(self) -> Tag:
        return self.model.unit

    @property
    def graded(self) -> bool:
        return self.model.graded

    def arity(self, tag: Tag) -> int:
        return self.model.arity(tag)

    def weight(self, tag: Tag) -> int:
        return self.model.weight(tag)

    def degree(self, tag: Tag) -> int:
        return self.model.degree(tag)

    def augmentation(self, tag: Tag) -> Scalar:
        return self.model.augmentation(tag)

    def species(self, t: Truncation, reduced: bool = False) -> Species:
        return from_operad(self, t, reduced=reduced)

    # ---------- compositions -------------------------------------------------

    def _compute_tensor(self, n: int, i: int, m: int) -> List[List]:
        target = self.index_map(n + m - 1)
        right = self.basis(m)
        triplets = []
        for ia, a in enumerate(self.basis(n)):
            for ib, b in enumerate(right):
                column = ia * len(right) + ib
                for tag, coeff in sorted(self.model.compose(a, i, b).items(), key=repr):
                    triplets.append([target[tag], column, str(coeff)])
        return triplets

    def index_map(self, n: int) -> Dict[Tag, int]:
        self.basis(n)
        return self._index[n]

    def composition_matrix(self, n: int, i: int, m: int) -> SparseMatrix:
        """∘_i : O(n) ⊗ O(m) → O(n+m-1); column ia * dim O(m) + ib."""
        if not 0 <= i < n:
            raise ValueError(f"slot {i} out of range for arity {n}")
        triplets = self.cache.fetch(
            self.fingerprint, f"comp_{n}_{i}_{m}", lambda: self._compute_tensor(n, i, m)
        )
        return SparseMatrix.from_triplets(
            self.dim(n + m - 1), self.dim(n) * self.dim(m), triplets
        )

    def _tensor(self, n: int, i: int, m: int) -> Dict[Tuple[int, int], Dict[int, Scalar]]:
        key = (n, i, m)
        with self._lock:
            found = self._tensors.get(key)
        if found is not None:
            return found
        matrix = self.composition_matrix(n, i, m)
        width = self.dim(m)
        table: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
        for r, col, v in matrix.entries():
            table.setdefault(divmod(col, width), {})[r] = v
        with self._lock:
            self._tensors[key] = table
        return table

    def compose(self, a: Tag, i: int, b: Tag) -> Combo:
        """a ∘_i b as a combination of basis tags."""
        n, m = self.arity(a), self.arity(b)
        entry = self._tensor(n, i, m).get((self.index(n, a), self.index(m, b)), {})
        target = self.basis(n + m - 1)
        return {target[r]: v for r, v in entry.items()}

    def compose_combos(self, x: Combo, i: int, y: Combo) -> Combo:
        out: Combo = {}
        for a, ca in x.items():
            for b, cb in y.items():
                add_into(out, self.compose(a, i, b), ca * cb)
        return out

    def relabel(self, tag: Tag, sigma: Sequence[int]) -> Combo:
        key = (tag, tuple(sigma))
        found = self._relabels.get(key)
        if found is None:
            found = self.model.relabel(tag, tuple(sigma))
            self._relabels[key] = found
        return dict(found)

    def relabel_combo(self, x: Combo, sigma: Sequence[int]) -> Combo:
        out: Combo = {}
        for tag, c in x.items():
            add_into(out, self.relabel(tag, sigma), c)
        return out

    # ---------- axioms -------------------------------------------------------

    def check_axioms(self, upto: Optional[int] = None) -> None:
        """
        Unit, sequential and parallel axioms, equivariance and weights on
        every basis triple with total arity at most `upto`.

        Raises:
            OperadAxiomError: the first failing identity
            NonPositiveWeightError: Ō has a weight-zero element or weights
                are not additive
        """
        top = min(upto or self.max_arity, self.max_arity)
        unit = self.unit
        arities = [n for n in range(1, top + 1) if self.dim(n)]
        for n in arities:
            for a in self.basis(n):
                if self.compose(unit, 0, a) != {a: 1}:
                    raise OperadAxiomError("left unit law fails", operad=self.name, tag=a)
                for i in range(n):
                    if self.compose(a, i, unit) != {a: 1}:
                        raise OperadAxiomError("right unit law fails", operad=self.name, tag=a)
                if self.graded and self.augmentation(a) == 0 and self.weight(a) <= 0:
                    raise NonPositiveWeightError(
                        f"{self.name} has an ideal element of weight {self.weight(a)}", tag=a
                    )
        for n, m in product(arities, repeat=2):
            if n + m - 1 > top:
                continue
            for a, b in product(self.basis(n), self.basis(m)):
                for i in range(n):
                    self._check_pair(a, i, b, n, m)
        for n, m, k in product(arities, repeat=3):
            if n + m + k - 2 > top:
                continue
            for a, b, c in product(self.basis(n), self.basis(m), self.basis(k)):
                self._check_triple(a, b, c, n, m, k)
        logger.debug("operad_axioms_checked", operad=self.name, upto=top)

    def _check_pair(self, a: Tag, i: int, b: Tag, n: int, m: int) -> None:
        composite = self.compose(a, i, b)
        for tag in composite:
            if self.weight(tag) != self.weight(a) + self.weight(b):
                raise NonPositiveWeightError(
                    "weights are not additive under composition", operad=self.name, pair=(a, b)
                )
        total = n + m - 1
        for j in range(n - 1):
            sigma = adjacent(n, j)
            # new position of old slot x of a, once b sits at sigma[i]
            target = sigma[i]
            tau = [0] * total
            for x in range(n):
                if x == i:
                    continue
                old = x if x < i else x + m - 1
                new = sigma[x] if sigma[x] < target else sigma[x] + m - 1
                tau[old] = new
            for r in range(m):
                tau[i + r] = target + r
            lhs = self.compose_combos(self.relabel(a, sigma), target, {b: 1})
            rhs = self.relabel_combo(composite, tau)
            if lhs != rhs:
                raise OperadAxiomError(
                    "composition is not equivariant in the outer operation",
                    operad=self.name, pair=(a, b), slot=i, generator=j,
                )
        for j in range(m - 1):
            rho = adjacent(m, j)
            tau = list(range(total))
            for r in range(m):
                tau[i + r] = i + rho[r]
            lhs = self.compose_combos({a: 1}, i, self.relabel(b, rho))
            rhs = self.relabel_combo(composite, tau)
            if lhs != rhs:
                raise OperadAxiomError(
                    "composition is not equivariant in the inner operation",
                    operad=self.name, pair=(a, b), slot=i, generator=j,
                )

    def _check_triple(self, a: Tag, b: Tag, c: Tag, n: int, m: int, k: int) -> None:
        for i in range(n):
            ab = self.compose(a, i, b)
            for j in range(m):
                lhs = self.compose_combos(ab, i + j, {c: 1})
                rhs = self.compose_combos({a: 1}, i, self.compose(b, j, c))
                if lhs != rhs:
                    raise OperadAxiomError(
                        "sequential axiom fails", operad=self.name, triple=(a, b, c), slots=(i, j)
                    )
            for l in range(i + 1, n):
                lhs = self.compose_combos(ab, l + m - 1, {c: 1})
                rhs = self.compose_combos(self.compose(a, l, c), i, {b: 1})
                if lhs != rhs:
                    raise OperadAxiomError(
                        "parallel axiom fails", operad=self.name, triple=(a, b, c), slots=(i, l)
                    )

    def __repr__(self) -> str:
        return f"OperadTable({self.name!r}, max_arity={self.max_arity})"
