# species/products.py
"""
Products and named species.

Skeletal conventions used by every product here:

- cauchy tag (I, ta, tb): I is the sorted tuple of labels carried by the
  left factor, the complement carries the right factor.
- compose tag (ta, ((B_1, t_1), ..., (B_k, t_k))): blocks sorted by their
  minimum; the a-tag reads its k inputs in that order.
- cyc tag: the canonical rotation of a tuple of letters (B, t) whose
  blocks partition the labels.
"""
from itertools import combinations, permutations, product
from typing import Any, Callable, Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from exactla.combos import Combo, add_into, add_term, tensor_combos

from .core import Species, Tag, Truncation

Letter = Tuple[Tuple[int, ...], Tag]


# ---------- set partitions --------------------------------------------------


def set_partitions(labels: Sequence[int]) -> Iterator[List[Tuple[int, ...]]]:
    """Unordered set partitions, each listed with blocks sorted by minimum."""
    labels = sorted(labels)
    if not labels:
        yield []
        return
    first, rest = labels[0], labels[1:]
    for partition in set_partitions(rest):
        yield [(first,)] + partition
        for j in range(len(partition)):
            # first is the smallest label, so the merged block leads
            yield [(first,) + partition[j]] + partition[:j] + partition[j + 1:]


def ordered_set_partitions(labels: Sequence[int], parts: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Sequences of `parts` nonempty disjoint blocks covering labels."""
    labels = tuple(labels)
    if parts == 0:
        if not labels:
            yield ()
        return
    for size in range(1, len(labels) - parts + 2):
        for block in combinations(labels, size):
            rest = tuple(x for x in labels if x not in block)
            for tail in ordered_set_partitions(rest, parts - 1):
                yield (block,) + tail


def _sorted_blocks(partition: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    return sorted(partition, key=lambda b: b[0])


# ---------- named species ---------------------------------------------------


def unit_species(max_arity: int = 1) -> Species:
    """The composition unit: one basis vector in arity 1."""
    return Species("unit", {1: ["x"]}, max_arity=max_arity)


def monoidal_unit(max_arity: int = 0) -> Species:
    """The Cauchy unit: one basis vector in arity 0."""
    return Species("one", {0: ["1"]}, max_arity=max_arity)


def from_dims(name: str, dims: Dict[int, int], max_arity: Optional[int] = None) -> Species:
    """Species with the trivial action and anonymous basis vectors."""
    return Species(
        name,
        {n: [(name, n, j) for j in range(d)] for n, d in dims.items()},
        max_arity=max_arity,
    )


def ucom(t: Truncation) -> Species:
    """Unital commutative: one basis vector in every arity."""
    return Species("ucom", {n: [("c", n)] for n in range(t.max_arity + 1)}, max_arity=t.max_arity)


def _relabel_word(n: int, i: int, word: Tuple[int, ...]) -> Combo:
    swap = {i: i + 1, i + 1: i}
    return {tuple(swap.get(x, x) for x in word): 1}


def uass(t: Truncation) -> Species:
    """Unital associative: words using every label once, n! in arity n."""
    components = {n: [tuple(p) for p in permutations(range(n))] for n in range(t.max_arity + 1)}
    return Species("uass", components, action=_relabel_word, max_arity=t.max_arity)


def suspend(s: Species, shift: int = 1) -> Species:
    """Degree shift; the action is unchanged."""
    return Species(
        f"s{s.name}" if shift == 1 else f"s^{shift}{s.name}",
        {n: s.basis(n) for n in s.arities()},
        action=s.act,
        degree=lambda tag: s.degree(tag) + shift,
        weight=s.weight,
        max_arity=s.max_arity,
    )


def from_operad(table: Any, t: Truncation, reduced: bool = False) -> Species:
    """Underlying species of an operad table (optionally its augmentation ideal)."""
    components = {}
    for n in range(t.max_arity + 1):
        basis = table.ideal_basis(n) if reduced else table.basis(n)
        if basis:
            components[n] = basis

    def action(n: int, i: int, tag: Tag) -> Combo:
        sigma = tuple(i + 1 if j == i else i if j == i + 1 else j for j in range(n))
        return table.relabel(tag, sigma)

    return Species(
        table.name if not reduced else f"{table.name}_bar",
        components,
        action=action,
        weight=table.weight,
        max_arity=t.max_arity,
    )


# ---------- Cauchy product --------------------------------------------------


def cauchy(a: Species, b: Species, t: Truncation) -> Species:
    """(A ⊗ B)(n) = sum over decompositions I ⊔ J of A(I) ⊗ B(J)."""
    components: Dict[int, List[Tag]] = {}
    for n in range(t.max_arity + 1):
        basis = []
        for k in range(n + 1):
            left = a.basis(k)
            right = b.basis(n - k)
            if not left or not right:
                continue
            for subset in combinations(range(n), k):
                for ta in left:
                    for tb in right:
                        basis.append((subset, ta, tb))
        if basis:
            components[n] = basis

    def action(n: int, i: int, tag: Tag) -> Combo:
        subset, ta, tb = tag
        k = len(subset)
        members = set(subset)
        if i in members and i + 1 in members:
            pos = subset.index(i)
            return {(subset, x, tb): c for x, c in a.act(k, pos, ta).items()}
        if i not in members and i + 1 not in members:
            complement = [j for j in range(n) if j not in members]
            pos = complement.index(i)
            return {(subset, ta, y): c for y, c in b.act(n - k, pos, tb).items()}
        swap = {i: i + 1, i + 1: i}
        return {(tuple(sorted(swap.get(x, x) for x in subset)), ta, tb): 1}

    return Species(
        f"({a.name}*{b.name})",
        components,
        action=action,
        degree=lambda tag: a.degree(tag[1]) + b.degree(tag[2]),
        weight=lambda tag: a.weight(tag[1]) + b.weight(tag[2]),
        max_arity=t.max_arity,
    )


# ---------- derivative ------------------------------------------------------


def derivative(s: Species) -> Species:
    """∂(S)(n) = S(n+1); the last slot is the marked one and stays fixed."""
    top = s.max_arity - 1
    components = {n - 1: s.basis(n) for n in s.arities() if n >= 1}
    return Species(
        f"d{s.name}",
        components,
        action=lambda n, i, tag: s.act(n + 1, i, tag),
        degree=s.degree,
        weight=s.weight,
        max_arity=max(top, 0),
    )


# ---------- composition product ---------------------------------------------


def _normalize_blocks(
    a: Species, b: Species, ta: Tag, blocks: List[Tuple[Tuple[int, ...], Tag]]
) -> Combo:
    """Bubble the blocks into min order, acting on the a-tag and applying Koszul signs."""
    k = len(blocks)
    combo: Combo = {ta: 1}
    blocks = list(blocks)
    sign = 1
    changed = True
    while changed:
        changed = False
        for j in range(k - 1):
            if blocks[j][0][0] > blocks[j + 1][0][0]:
                if b.degree(blocks[j][1]) % 2 and b.degree(blocks[j + 1][1]) % 2:
                    sign = -sign
                blocks[j], blocks[j + 1] = blocks[j + 1], blocks[j]
                nxt: Combo = {}
                for x, c in combo.items():
                    add_into(nxt, a.act(k, j, x), c)
                combo = nxt
                changed = True
    key = tuple(blocks)
    return {(x, key): sign * c for x, c in combo.items()}


def compose(a: Species, b: Species, t: Truncation) -> Species:
    """(A ∘ B)(n): S_k-coinvariants of A(k) ⊗ B^{⊗k} over set partitions into k blocks."""
    if b.arities() and b.arities()[0] == 0:
        raise ValueError(f"{b.name} must vanish in arity 0 to be composed into")
    components: Dict[int, List[Tag]] = {}
    for n in range(t.max_arity + 1):
        basis = []
        for partition in set_partitions(range(n)):
            blocks = _sorted_blocks(partition)
            k = len(blocks)
            outer = a.basis(k)
            if not outer:
                continue
            choices = [b.basis(len(block)) for block in blocks]
            if any(not c for c in choices):
                continue
            for inner in product(*choices):
                for ta in outer:
                    basis.append((ta, tuple(zip(blocks, inner))))
        if basis:
            components[n] = sorted(basis, key=repr)

    def action(n: int, i: int, tag: Tag) -> Combo:
        ta, blocks = tag
        for index, (block, tb) in enumerate(blocks):
            if i in block and i + 1 in block:
                pos = block.index(i)
                out: Combo = {}
                for y, c in b.act(len(block), pos, tb).items():
                    new = blocks[:index] + ((block, y),) + blocks[index + 1:]
                    add_term(out, (ta, new), c)
                return out
        swap = {i: i + 1, i + 1: i}
        moved = [(tuple(sorted(swap.get(x, x) for x in block)), tb) for block, tb in blocks]
        return _normalize_blocks(a, b, ta, moved)

    def degree(tag: Tag) -> int:
        ta, blocks = tag
        return a.degree(ta) + sum(b.degree(tb) for _, tb in blocks)

    def weight(tag: Tag) -> int:
        ta, blocks = tag
        return a.weight(ta) + sum(b.weight(tb) for _, tb in blocks)

    return Species(
        f"({a.name}o{b.name})",
        components,
        action=action,
        degree=degree,
        weight=weight,
        max_arity=t.max_arity,
    )


# ---------- cyclic words ----------------------------------------------------


def canonical_rotation(
    letters: Tuple[Hashable, ...],
    degrees: Sequence[int],
    key: Callable[[Any], Any] = repr,
) -> Optional[Tuple[Tuple[Hashable, ...], int]]:
    """
    Least rotation of a cyclic word and the Koszul sign of reaching it.

    Rotating the first r letters to the back costs
    (-1)^{deg(first r) * deg(rest)}. Returns None when the word equals one
    of its own rotations with sign -1 (the class is zero).
    """
    m = len(letters)
    if m == 0:
        return (), 1
    total = sum(degrees)
    rotations = []
    prefix = 0
    for r in range(m):
        sign = -1 if (prefix * (total - prefix)) % 2 else 1
        rotations.append((letters[r:] + letters[:r], sign))
        prefix += degrees[r]
    best, best_sign = min(rotations, key=lambda item: key(item[0]))
    if any(word == best and sign != best_sign for word, sign in rotations):
        return None
    return best, best_sign


def _labelled_words(s: Species, n: int, max_length: int) -> Iterator[Tuple[Letter, ...]]:
    with_empty = bool(s.basis(0))
    for m in range(1, max_length + 1):
        shapes = _blocks_with_empty(n, m) if with_empty else ordered_set_partitions(range(n), m)
        for blocks in shapes:
            choices = [s.basis(len(block)) for block in blocks]
            if any(not c for c in choices):
                continue
            for tags in product(*choices):
                yield tuple(zip(blocks, tags))


def _blocks_with_empty(n: int, m: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    for assignment in product(range(m), repeat=n):
        yield tuple(tuple(j for j in range(n) if assignment[j] == part) for part in range(m))


def cyc(s: Species, t: Truncation) -> Species:
    """
    Cyclic words in s with the Koszul rotation sign.

    Words are capped at t.max_degree letters when s has an arity-zero part,
    otherwise the length is bounded by the arity.
    """
    degree_of = s.degree
    components: Dict[int, List[Tag]] = {}
    for n in range(t.max_arity + 1):
        cap = t.max_degree if s.basis(0) else n
        seen = set()
        for word in _labelled_words(s, n, cap):
            normal = canonical_rotation(word, [degree_of(tag) for _, tag in word])
            if normal is not None:
                seen.add(normal[0])
        if seen:
            components[n] = sorted(seen, key=repr)

    def action(n: int, i: int, tag: Tag) -> Combo:
        swap = {i: i + 1, i + 1: i}
        expansions: List[Combo] = []
        for block, letter_tag in tag:
            if i in block and i + 1 in block:
                pos = block.index(i)
                expansions.append({(block, y): c for y, c in s.act(len(block), pos, letter_tag).items()})
            else:
                expansions.append({(tuple(sorted(swap.get(x, x) for x in block)), letter_tag): 1})
        out: Combo = {}
        for word, coeff in tensor_combos(expansions).items():
            normal = canonical_rotation(word, [degree_of(lt) for _, lt in word])
            if normal is not None:
                add_term(out, normal[0], coeff * normal[1])
        return out

    def total(fn: Callable[[Tag], int]) -> Callable[[Tag], int]:
        return lambda tag: sum(fn(lt) for _, lt in tag)

    return Species(
        f"cyc({s.name})",
        components,
        action=action,
        degree=total(s.degree),
        weight=total(s.weight),
        max_arity=t.max_arity,
    )

