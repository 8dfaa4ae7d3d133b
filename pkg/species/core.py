# species/core.py
"""
Linear species in skeletal form.

A species is stored arity by arity: a list of basis tags for each n, the
action of the adjacent transpositions s_i (i = 0..n-2) as linear
combinations of tags, and per-tag homological degree and weight.
"""
import json
from itertools import combinations
from typing import Any, Callable, Dict, Hashable, Iterator, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from core.exceptions import EquivarianceError, TruncationExceededError
from core.logging import get_logger
from exactla.combos import Combo, add_into
from exactla.sparse import SparseMatrix

logger = get_logger(__name__)

Tag = Hashable
Action = Callable[[int, int, Tag], Combo]


class Truncation(BaseModel):
    """Bounds on arity, weight and homological degree of materialised blocks."""

    max_arity: int = Field(..., description="Largest arity n", json_schema_extra={"example": 5})
    max_weight: int = Field(default=4, description="Largest weight w")
    max_degree: int = Field(default=5, description="Largest homological degree d")

    model_config = {"frozen": True}

    @field_validator("max_arity", "max_weight", "max_degree")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Truncation bounds must be positive."""
        if v <= 0:
            raise ValueError("truncation bounds must be positive")
        return v

    def admits(self, n: int, w: int, d: int) -> bool:
        return n <= self.max_arity and w <= self.max_weight and d <= self.max_degree

    def on_boundary(self, n: int, w: int, d: int) -> bool:
        """Blocks whose neighbour in degree d+1 may have been cut off."""
        return d >= self.max_degree or w >= self.max_weight or n >= self.max_arity


def _trivial_action(n: int, i: int, tag: Tag) -> Combo:
    return {tag: 1}


def transposition_word(sigma: Tuple[int, ...]) -> List[int]:
    """
    Adjacent transpositions whose successive application relabels by sigma.

    Applying s_i swaps the labels i and i+1; the returned list is in
    application order.
    """
    f = list(sigma)
    where = {v: j for j, v in enumerate(f)}
    undo: List[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(f) - 1):
            if where[i] > where[i + 1]:
                a, b = where[i], where[i + 1]
                f[a], f[b] = i + 1, i
                where[i], where[i + 1] = b, a
                undo.append(i)
                changed = True
    return list(reversed(undo))


class Species:
    """Arity-indexed based vector spaces with explicit S_n actions."""

    def __init__(
        self,
        name: str,
        components: Dict[int, List[Tag]],
        action: Optional[Action] = None,
        degree: Optional[Callable[[Tag], int]] = None,
        weight: Optional[Callable[[Tag], int]] = None,
        max_arity: Optional[int] = None,
    ):
        self.name = name
        self._components = {n: list(b) for n, b in sorted(components.items()) if b}
        self._index = {
            n: {tag: i for i, tag in enumerate(b)} for n, b in self._components.items()
        }
        self._action = action or _trivial_action
        self._degree = degree or (lambda tag: 0)
        self._weight = weight or (lambda tag: 0)
        self.max_arity = (
            max_arity if max_arity is not None else max(self._components, default=0)
        )
        self._matrices: Dict[Tuple[int, int], SparseMatrix] = {}

    # ---------- access -------------------------------------------------------

    def basis(self, n: int) -> List[Tag]:
        if n > self.max_arity:
            raise TruncationExceededError(
                f"{self.name}: arity {n} beyond truncation {self.max_arity}", n=n
            )
        return self._components.get(n, [])

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def dims(self) -> Dict[int, int]:
        return {n: len(self.basis(n)) for n in range(self.max_arity + 1)}

    def arities(self) -> List[int]:
        return sorted(self._components)

    def index(self, n: int, tag: Tag) -> int:
        return self._index[n][tag]

    def act(self, n: int, i: int, tag: Tag) -> Combo:
        """Action of the adjacent transposition s_i on a basis tag of arity n."""
        if not 0 <= i < n - 1:
            raise ValueError(f"s_{i} is not a generator of S_{n}")
        return self._action(n, i, tag)

    def act_perm(self, n: int, sigma: Tuple[int, ...], tag: Tag) -> Combo:
        """Relabel by sigma (old slot j goes to sigma[j]) through adjacent swaps."""
        combo: Combo = {tag: 1}
        for i in transposition_word(sigma):
            nxt: Combo = {}
            for t, c in combo.items():
                add_into(nxt, self.act(n, i, t), c)
            combo = nxt
        return combo

    def degree(self, tag: Tag) -> int:
        return self._degree(tag)

    def weight(self, tag: Tag) -> int:
        return self._weight(tag)

    def graded_dims(self) -> Dict[Tuple[int, int, int], int]:
        """(n, w, d) -> dimension."""
        out: Dict[Tuple[int, int, int], int] = {}
        for n, basis in self._components.items():
            for tag in basis:
                key = (n, self.weight(tag), self.degree(tag))
                out[key] = out.get(key, 0) + 1
        return out

    def __iter__(self) -> Iterator[Tuple[int, Tag]]:
        for n, basis in self._components.items():
            for tag in basis:
                yield n, tag

    # ---------- actions ------------------------------------------------------

    def action_matrix(self, n: int, i: int) -> SparseMatrix:
        key = (n, i)
        if key not in self._matrices:
            basis = self.basis(n)
            index = self._index.get(n, {})
            columns = []
            for tag in basis:
                columns.append({index[t]: c for t, c in self.act(n, i, tag).items()})
            self._matrices[key] = SparseMatrix.from_columns(len(basis), columns)
        return self._matrices[key]

    def check_braid_relations(self, upto: Optional[int] = None) -> None:
        """
        s_i^2 = 1, s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}, far generators commute.

        Raises:
            EquivarianceError: on the first failing relation
        """
        top = self.max_arity if upto is None else min(upto, self.max_arity)
        for n in range(2, top + 1):
            if not self.dim(n):
                continue
            ident = SparseMatrix.identity(self.dim(n))
            gens = [self.action_matrix(n, i) for i in range(n - 1)]
            for i, s in enumerate(gens):
                if s @ s != ident:
                    raise EquivarianceError(f"{self.name}: s_{i}^2 != 1 at n={n}", n=n)
                if i + 1 < len(gens):
                    t = gens[i + 1]
                    if s @ t @ s != t @ s @ t:
                        raise EquivarianceError(
                            f"{self.name}: braid relation fails for s_{i} at n={n}", n=n
                        )
            for i, j in combinations(range(len(gens)), 2):
                if j - i >= 2 and gens[i] @ gens[j] != gens[j] @ gens[i]:
                    raise EquivarianceError(
                        f"{self.name}: s_{i}, s_{j} do not commute at n={n}", n=n
                    )
        logger.debug("braid_relations_checked", species=self.name, upto=top)

    # ---------- serialization ------------------------------------------------

    def to_json(self) -> Dict[str, Any]:
        """Components, action matrices as sparse triplets, degrees and weights."""
        doc: Dict[str, Any] = {
            "name": self.name,
            "max_arity": self.max_arity,
            "components": {},
            "actions": {},
            "degrees": {},
            "weights": {},
        }
        for n, basis in self._components.items():
            doc["components"][str(n)] = [repr(tag) for tag in basis]
            doc["degrees"][str(n)] = [self.degree(tag) for tag in basis]
            doc["weights"][str(n)] = [self.weight(tag) for tag in basis]
            for i in range(n - 1):
                doc["actions"][f"{n}:{i}"] = self.action_matrix(n, i).to_triplets()
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, doc: Dict[str, Any]) -> "Species":
        """Rebuild a species whose tags are the serialized tag strings."""
        components = {int(n): list(tags) for n, tags in doc["components"].items()}
        degrees = {}
        weights = {}
        for n, tags in components.items():
            for tag, d, w in zip(tags, doc["degrees"][str(n)], doc["weights"][str(n)]):
                degrees[tag] = d
                weights[tag] = w
        matrices = {}
        for key, triplets in doc["actions"].items():
            n, i = (int(x) for x in key.split(":"))
            dim = len(components[n])
            matrices[(n, i)] = SparseMatrix.from_triplets(dim, dim, triplets)

        def action(n: int, i: int, tag: Tag) -> Combo:
            col = components[n].index(tag)
            return {
                components[n][r]: v
                for r, c, v in matrices[(n, i)].entries()
                if c == col
            }

        return cls(
            doc["name"],
            components,
            action=action,
            degree=degrees.get,
            weight=weights.get,
            max_arity=doc["max_arity"],
        )
