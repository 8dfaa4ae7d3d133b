# derlie/free_algebra.py
"""
Free algebras O(V) = O ∘ V on a finite-dimensional V.

A monomial is a pair (tag, word): tag is a basis element of O(k) and word
assigns a generator x_{word[j]} to input j. Monomials are straightened to
a sorted word; the stabiliser of a sorted word (a Young subgroup) still
acts on the tag, and the monomial is projected onto the coinvariants of
that action. The same evaluation works for any carrier that exposes
basis(k) and relabel(tag, sigma), which is how ∂(O)(V) and |∂(O)|(V) are
built as well.
"""
import threading
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from core.exceptions import TruncationExceededError
from core.logging import get_logger
from exactla.characters import centralizer_size, partitions
from exactla.combos import Combo, add_into, sorting_perm
from exactla.rank import Quotient, quotient_basis
from operads.table import OperadTable, adjacent

logger = get_logger(__name__)

Tag = Hashable
Word = Tuple[int, ...]
Monomial = Tuple[Tag, Word]


def torus_weight(word: Sequence[int], dim_v: int) -> Tuple[int, ...]:
    """Multidegree of a word in x_0 .. x_{dim_v - 1}."""
    counts = [0] * dim_v
    for letter in word:
        counts[letter] += 1
    return tuple(counts)


class Evaluation:
    """
    A species-like carrier evaluated on V: ⊕_k S(k) ⊗_{S_k} V^{⊗k}.

    Attributes:
        carrier: anything with basis(k) and relabel(tag, sigma)
        dim_v: dimension of V
    """

    def __init__(self, carrier: Any, dim_v: int, name: str = ""):
        if dim_v < 1:
            raise ValueError("dim V must be positive")
        self.carrier = carrier
        self.dim_v = dim_v
        self.name = name or getattr(carrier, "name", "carrier")
        self._sectors: Dict[Word, Tuple[List[Tag], Dict[Tag, int], Quotient]] = {}
        self._lock = threading.Lock()

    def _sector(self, word: Word) -> Tuple[List[Tag], Dict[Tag, int], Quotient]:
        """Coinvariants of the stabiliser of a sorted word."""
        with self._lock:
            found = self._sectors.get(word)
        if found is not None:
            return found
        k = len(word)
        ambient = list(self.carrier.basis(k))
        index = {tag: r for r, tag in enumerate(ambient)}
        relations = []
        for p in range(k - 1):
            if word[p] != word[p + 1]:
                continue
            sigma = adjacent(k, p)
            for tag in ambient:
                rel: Dict[int, Any] = {index[tag]: 1}
                for image, c in self.carrier.relabel(tag, sigma).items():
                    x = rel.get(index[image], 0) - c
                    if x:
                        rel[index[image]] = x
                    else:
                        rel.pop(index[image], None)
                if rel:
                    relations.append(rel)
        found = (ambient, index, quotient_basis(len(ambient), relations))
        with self._lock:
            self._sectors[word] = found
        return found

    def project(self, tag: Tag, word: Sequence[int]) -> Combo:
        """The class of (tag, word) over canonical monomials."""
        word = tuple(word)
        sigma = sorting_perm(word)
        target = tuple(sorted(word))
        if sigma == tuple(range(len(word))):
            relabelled: Combo = {tag: 1}
        else:
            relabelled = self.carrier.relabel(tag, sigma)
        ambient, index, quotient = self._sector(target)
        coords = quotient.project_vector({index[y]: c for y, c in relabelled.items()})
        return {(ambient[quotient.representatives[r]], target): c for r, c in coords.items()}

    def project_combo(self, x: Dict[Monomial, Any]) -> Combo:
        out: Combo = {}
        for (tag, word), c in x.items():
            add_into(out, self.project(tag, word), c)
        return out

    def sector_basis(self, word: Word) -> List[Monomial]:
        ambient, _, quotient = self._sector(word)
        return [(ambient[r], word) for r in quotient.representatives]

    def basis(self, k: int) -> List[Monomial]:
        """Canonical monomials with k inputs, words in lexicographic order."""
        out: List[Monomial] = []
        for word in combinations_with_replacement(range(self.dim_v), k):
            out.extend(self.sector_basis(word))
        return out

    def dim(self, k: int) -> int:
        return len(self.basis(k))

    def gl_act(self, a: int, b: int, monomial: Monomial) -> Combo:
        """E_ab: every occurrence of x_b is replaced by x_a in turn."""
        tag, word = monomial
        out: Combo = {}
        for j, letter in enumerate(word):
            if letter == b:
                add_into(out, self.project(tag, word[:j] + (a,) + word[j + 1:]))
        return out


class FreeAlgebra:
    """
    O(V) up to a weight bound.

    The weight of a monomial is the weight of its tag; for arity-graded
    operads a weight-w monomial has w + 1 inputs.
    """

    def __init__(self, table: OperadTable, dim_v: int, max_weight: int):
        self.table = table
        self.dim_v = dim_v
        self.max_weight = max_weight
        top = table.model.top_arity
        if top is None and max_weight + 1 > table.max_arity:
            raise TruncationExceededError(
                f"{table.name}({dim_v}) in weight {max_weight} needs "
                f"{table.name}({max_weight + 1})",
                arity=max_weight + 1,
            )
        self.top_arity = min(top, table.max_arity) if top is not None else max_weight + 1
        self.evaluation = Evaluation(table, dim_v, name=f"{table.name}(V)")
        self._basis: Dict[Tuple[int, bool], List[Monomial]] = {}

    @property
    def name(self) -> str:
        return f"{self.table.name}({self.dim_v})"

    def weight(self, monomial: Monomial) -> int:
        return self.table.weight(monomial[0])

    def arities(self) -> range:
        return range(1, self.top_arity + 1)

    def basis(self, w: int, reduced: bool = True) -> List[Monomial]:
        """Weight-w monomials, from Ō(V) when reduced."""
        key = (w, reduced)
        if key not in self._basis:
            if w > self.max_weight:
                raise TruncationExceededError(
                    f"weight {w} is beyond the bound {self.max_weight}", weight=w
                )
            out = []
            for k in self.arities():
                for tag, word in self.evaluation.basis(k):
                    if self.table.weight(tag) != w:
                        continue
                    if reduced and self.table.augmentation(tag):
                        continue
                    out.append((tag, word))
            self._basis[key] = out
            logger.debug("free_algebra_block", algebra=self.name, weight=w, size=len(out))
        return self._basis[key]

    def generator(self, i: int) -> Combo:
        return {(self.table.unit, (i,)): 1}

    def monomial(self, tag: Tag, word: Sequence[int]) -> Combo:
        return self.evaluation.project(tag, word)

    def element(self, terms: Dict[Monomial, Any]) -> Combo:
        """Straighten a linear combination of unstraightened monomials."""
        return self.evaluation.project_combo(terms)

    def substitute(self, monomial: Monomial, slot: int, inner: Monomial) -> Combo:
        """Plug the monomial `inner` into input `slot` of `monomial`."""
        tag, word = monomial
        inner_tag, inner_word = inner
        out: Combo = {}
        composed = self.table.compose(tag, slot, inner_tag)
        new_word = word[:slot] + inner_word + word[slot + 1:]
        for y, c in composed.items():
            add_into(out, self.evaluation.project(y, new_word), c)
        return out

    def gl_act(self, a: int, b: int, x: Combo) -> Combo:
        out: Combo = {}
        for monomial, c in x.items():
            add_into(out, self.evaluation.gl_act(a, b, monomial), c)
        return out

    def torus_weight(self, monomial: Monomial) -> Tuple[int, ...]:
        return torus_weight(monomial[1], self.dim_v)

    def dims(self, reduced: bool = True) -> Dict[int, int]:
        return {w: len(self.basis(w, reduced)) for w in range(self.max_weight + 1)}


def evaluated_dim(table: OperadTable, dim_v: int, k: int, weight: Optional[int] = None) -> int:
    """dim O(k) ⊗_{S_k} V^{⊗k} by the character inner product."""
    tags = [
        tag for tag in table.basis(k) if weight is None or table.weight(tag) == weight
    ]
    total = Fraction(0)
    for mu in partitions(k):
        sigma = _permutation_of_type(mu)
        trace = sum(table.relabel(tag, sigma).get(tag, 0) for tag in tags)
        # sigma has trace dim_v ** (number of cycles) on V^{⊗k}
        total += Fraction(trace * dim_v ** len(mu), centralizer_size(mu))
    return int(total)


def _permutation_of_type(mu: Sequence[int]) -> Tuple[int, ...]:
    sigma: List[int] = []
    start = 0
    for part in mu:
        sigma.extend(start + (j + 1) % part for j in range(part))
        start += part
    return tuple(sigma)
