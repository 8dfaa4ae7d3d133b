# operads/bimodule.py
"""
The derivative bimodule ∂(O).

∂(O)(j) = O(j+1) with the last input marked ⋆. It is a twisted associative
algebra under μ(a, b) = a ∘_⋆ b (inputs: a's unmarked inputs, then b's,
with b's ⋆ last) and a right O-module under composition into unmarked
inputs. Quotients of ∂(O) by commutators (the wheeled part of the wheeled
completion) and by the right action of Ō (∂(O)₀) are built here.
"""
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from core.exceptions import OperadAxiomError, TruncationExceededError
from core.logging import get_logger
from exactla.combos import Combo, add_into
from exactla.rank import Quotient, quotient_basis
from species.core import Truncation
from species.series import Dims, compose_dims

from .table import OperadTable

logger = get_logger(__name__)

Tag = Hashable


def shuffle_perm(left: Sequence[int], right: Sequence[int]) -> Tuple[int, ...]:
    """Relabelling that sends the concatenated inputs to the labels left + right."""
    return tuple(left) + tuple(right)


def decompositions(n: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """All ordered pairs (I, J) with I ⊔ J = {0..n-1}."""
    out = []
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            members = set(subset)
            out.append((subset, tuple(j for j in range(n) if j not in members)))
    return out


class TwistedAlgebra:
    """Interface of a twisted associative algebra with an explicit basis."""

    name = "twisted"
    max_arity = 0

    def basis(self, j: int) -> List[Tag]:
        raise NotImplementedError("Subclasses must implement basis()")

    def mu(self, a: Tag, b: Tag) -> Combo:
        """Product with a's inputs first, then b's."""
        raise NotImplementedError("Subclasses must implement mu()")

    def relabel(self, tag: Tag, sigma: Sequence[int]) -> Combo:
        raise NotImplementedError("Subclasses must implement relabel()")

    def arity(self, tag: Tag) -> int:
        raise NotImplementedError("Subclasses must implement arity()")

    def weight(self, tag: Tag) -> int:
        return 0

    def degree(self, tag: Tag) -> int:
        return 0

    def mu_at(self, a: Tag, b: Tag, left: Sequence[int], right: Sequence[int]) -> Combo:
        """Product placing a on the labels `left` and b on the labels `right`."""
        product_ = self.mu(a, b)
        sigma = shuffle_perm(left, right)
        if sigma == tuple(range(len(sigma))):
            return product_
        out: Combo = {}
        for tag, c in product_.items():
            add_into(out, self.relabel(tag, sigma), c)
        return out

    def dims(self, top: Optional[int] = None) -> Dict[int, int]:
        top = self.max_arity if top is None else top
        return {j: len(self.basis(j)) for j in range(top + 1)}

    def check_associativity(self, upto: Optional[int] = None) -> None:
        """(ab)c = a(bc) on basis triples of total arity at most `upto`."""
        top = min(upto or self.max_arity, self.max_arity)
        for j1, j2, j3 in product(range(top + 1), repeat=3):
            if j1 + j2 + j3 > top:
                continue
            for a, b, c in product(self.basis(j1), self.basis(j2), self.basis(j3)):
                left: Combo = {}
                for x, cx in self.mu(a, b).items():
                    add_into(left, self.mu(x, c), cx)
                right: Combo = {}
                for y, cy in self.mu(b, c).items():
                    add_into(right, self.mu(a, y), cy)
                if left != right:
                    raise OperadAxiomError(
                        f"{self.name} is not associative", triple=(a, b, c)
                    )

    def commutators(self, j: int) -> List[Combo]:
        """Spanning set of the commutator subspace in arity j."""
        rels = []
        for left, right in decompositions(j):
            for a in self.basis(len(left)):
                for b in self.basis(len(right)):
                    rel = dict(self.mu_at(a, b, left, right))
                    sign = -1 if (self.degree(a) * self.degree(b)) % 2 else 1
                    add_into(rel, self.mu_at(b, a, right, left), -sign)
                    if rel:
                        rels.append(rel)
        return rels


class DerivativeAlgebra(TwistedAlgebra):
    """∂(O) (or ∂(Ō) when reduced) with μ = ∘_⋆ and the right O-action ρ."""

    def __init__(self, table: OperadTable, reduced: bool = False):
        self.table = table
        self.reduced = reduced
        self.name = f"d({table.name}{'_bar' if reduced else ''})"
        self.max_arity = table.max_arity - 1

    def basis(self, j: int) -> List[Tag]:
        if j > self.max_arity:
            raise TruncationExceededError(
                f"{self.name}({j}) needs {self.table.name}({j + 1})", arity=j
            )
        return self.table.ideal_basis(j + 1) if self.reduced else self.table.basis(j + 1)

    def arity(self, tag: Tag) -> int:
        return self.table.arity(tag) - 1

    def weight(self, tag: Tag) -> int:
        return self.table.weight(tag)

    def mu(self, a: Tag, b: Tag) -> Combo:
        return self.table.compose(a, self.arity(a), b)

    def relabel(self, tag: Tag, sigma: Sequence[int]) -> Combo:
        return self.table.relabel(tag, tuple(sigma) + (len(sigma),))

    def rho(self, s: Tag, slot: int, u: Tag) -> Combo:
        """Right action: compose u into the unmarked input `slot` of s."""
        if slot >= self.arity(s):
            raise ValueError("the marked input does not take the right action")
        return self.table.compose(s, slot, u)

    def check_compatibility(self, upto: Optional[int] = None) -> None:
        """μ and ρ commute: (ab)∘_i x agrees with a(b∘_i x) or (a∘_i x)b."""
        top = min(upto or self.max_arity, self.max_arity)
        for j1, j2 in product(range(top + 1), repeat=2):
            for m in range(2, top + 2):
                if j1 + j2 + m - 1 > top:
                    continue
                for a, b, x in product(self.basis(j1), self.basis(j2), self.table.ideal_basis(m)):
                    ab = self.mu(a, b)
                    for slot in range(j1 + j2):
                        lhs: Combo = {}
                        for y, c in ab.items():
                            add_into(lhs, self.rho(y, slot, x), c)
                        rhs: Combo = {}
                        if slot < j1:
                            for y, c in self.rho(a, slot, x).items():
                                add_into(rhs, self.mu(y, b), c)
                        else:
                            for y, c in self.rho(b, slot - j1, x).items():
                                add_into(rhs, self.mu(a, y), c)
                        if lhs != rhs:
                            raise OperadAxiomError(
                                "product and right action do not commute",
                                operad=self.table.name, triple=(a, b, x), slot=slot,
                            )
        logger.debug("bimodule_checked", operad=self.table.name, upto=top)


class QuotientAlgebra(TwistedAlgebra):
    """A twisted algebra modulo a two-sided ideal, on representative tags."""

    def __init__(self, parent: TwistedAlgebra, quotients: Dict[int, Quotient], name: str):
        self.parent = parent
        self.quotients = quotients
        self.name = name
        self.max_arity = max(quotients, default=0)
        self._reps: Dict[int, List[Tag]] = {}

    def basis(self, j: int) -> List[Tag]:
        if j not in self.quotients:
            raise TruncationExceededError(f"{self.name}({j}) was not computed", arity=j)
        if j not in self._reps:
            ambient = self.parent.basis(j)
            self._reps[j] = [ambient[r] for r in self.quotients[j].representatives]
        return self._reps[j]

    def project(self, j: int, x: Combo) -> Combo:
        """Class of an element of the parent in arity j, over representatives."""
        ambient = self.parent.basis(j)
        index = {tag: r for r, tag in enumerate(ambient)}
        reps = self.basis(j)
        coords = self.quotients[j].project_vector({index[tag]: c for tag, c in x.items()})
        return {reps[r]: c for r, c in coords.items()}

    def arity(self, tag: Tag) -> int:
        return self.parent.arity(tag)

    def weight(self, tag: Tag) -> int:
        return self.parent.weight(tag)

    def degree(self, tag: Tag) -> int:
        return self.parent.degree(tag)

    def mu(self, a: Tag, b: Tag) -> Combo:
        j = self.arity(a) + self.arity(b)
        if j > self.max_arity:
            raise TruncationExceededError(f"{self.name}({j}) was not computed", arity=j)
        return self.project(j, self.parent.mu(a, b))

    def relabel(self, tag: Tag, sigma: Sequence[int]) -> Combo:
        return self.project(len(sigma), self.parent.relabel(tag, sigma))


def _quotient(algebra: TwistedAlgebra, j: int, relations: List[Combo]) -> Quotient:
    ambient = algebra.basis(j)
    index = {tag: r for r, tag in enumerate(ambient)}
    rows = [{index[tag]: c for tag, c in rel.items()} for rel in relations]
    return quotient_basis(len(ambient), rows)


def derivative_bimodule(o: OperadTable, t: Truncation, check: bool = True) -> DerivativeAlgebra:
    """
    ∂(O) as twisted algebra and right O-module, checked on basis triples.

    The returned object carries both structures: mu() and rho().
    """
    algebra = DerivativeAlgebra(o)
    top = min(t.max_arity, algebra.max_arity)
    if check:
        algebra.check_associativity(top)
        algebra.check_compatibility(top)
    return algebra


def commutator_quotient(a: TwistedAlgebra, t: Truncation) -> QuotientAlgebra:
    """|A|: each component modulo the span of graded commutators."""
    top = min(t.max_arity, a.max_arity)
    quotients = {j: _quotient(a, j, a.commutators(j)) for j in range(top + 1)}
    logger.debug(
        "commutator_quotient", algebra=a.name, dims={j: q.dim for j, q in quotients.items()}
    )
    return QuotientAlgebra(a, quotients, f"|{a.name}|")


def wheeled_part(o: OperadTable, t: Truncation, reduced: bool = True) -> QuotientAlgebra:
    """|∂(O)| (or its reduced part |∂(Ō)|), the wheeled part of the completion."""
    return commutator_quotient(DerivativeAlgebra(o, reduced=reduced), t)


@dataclass
class Indecomposables:
    """∂(O)₀ with its reduced part and the freeness witness."""

    full: QuotientAlgebra
    reduced: QuotientAlgebra
    free: bool
    dims: Dict[int, int] = field(default_factory=dict)
    expected: Dict[int, int] = field(default_factory=dict)
    recomposed: Dict[int, int] = field(default_factory=dict)


def _action_image(algebra: DerivativeAlgebra, j: int) -> List[Combo]:
    """
    Span of the right action of Ō landing in arity j, closed under S_j.

    ∘_i puts the inputs of x on consecutive labels, so every relabelling of
    the unmarked inputs is added before the quotient is taken.
    """
    table = algebra.table
    images: Dict[frozenset, Combo] = {}
    for m in range(1, j + 1):
        ideal = table.ideal_basis(m) if m <= table.max_arity else []
        if not ideal:
            continue
        source = j - m + 1
        for s in algebra.basis(source):
            for slot in range(source):
                for x in ideal:
                    image = algebra.rho(s, slot, x)
                    if image:
                        images.setdefault(frozenset(image.items()), image)
    perms = list(permutations(range(j)))
    rels: Dict[frozenset, Combo] = {}
    for image in images.values():
        for sigma in perms:
            moved: Combo = {}
            for tag, c in image.items():
                add_into(moved, algebra.relabel(tag, sigma), c)
            if moved:
                rels.setdefault(frozenset(moved.items()), moved)
    return list(rels.values())


def indecomposables_zero(o: OperadTable, t: Truncation) -> Indecomposables:
    """
    ∂(O)₀ = ∂(O) ∘_O 𝟙, the quotient by the right action of Ō.

    The freeness witness compares dim ∂(O)(j) with dim (∂(O)₀ ∘ O)(j) for
    every j inside the truncation.
    """
    top = min(t.max_arity, o.max_arity - 1)
    full_alg = DerivativeAlgebra(o)
    red_alg = DerivativeAlgebra(o, reduced=True)
    full_q = {j: _quotient(full_alg, j, _action_image(full_alg, j)) for j in range(top + 1)}
    red_q = {j: _quotient(red_alg, j, _action_image(red_alg, j)) for j in range(top + 1)}
    full = QuotientAlgebra(full_alg, full_q, f"d({o.name})_0")
    reduced = QuotientAlgebra(red_alg, red_q, f"d({o.name}_bar)_0")

    dims = {j: q.dim for j, q in full_q.items()}
    expected = {j: o.dim(j + 1) for j in range(top + 1)}
    recomposed = _recompose(dims, o, top)
    free = all(recomposed.get(j, 0) == expected[j] for j in range(top + 1))
    logger.info("indecomposables_zero", operad=o.name, dims=dims, free=free)
    return Indecomposables(full, reduced, free, dims, expected, recomposed)


def _recompose(dims: Dict[int, int], o: OperadTable, top: int) -> Dict[int, int]:
    """Arity dims of ∂(O)₀ ∘ O (weights and degrees ignored)."""
    bound = Truncation(max_arity=max(top, 1), max_weight=10**6, max_degree=10**6)
    f: Dims = {(k, 0, 0): v for k, v in dims.items() if v}
    g: Dims = {(n, 0, 0): o.dim(n) for n in range(1, top + 1) if o.dim(n)}
    out = compose_dims(f, g, bound)
    return {n: out.get((n, 0, 0), 0) for n in range(top + 1)}
