# cyclic/complex.py
"""
Cyclic complexes of twisted associative algebras.

A basis element of s^{-1}Cyc(sA) in arity n is a cyclic word of letters
(block, tag): the blocks partition {0..n-1} (empty blocks allowed when A has
an arity-zero part) and tag is a basis element of A on that block. Letters
carry degree 1 + deg(tag), so a word of m letters sits in degree m - 1 plus
the label degrees. The differential multiplies cyclically adjacent letters:

    d(a_1 ... a_m) = sum_{i<m} (-1)^{i-1} a_1 .. (a_i a_{i+1}) .. a_m
                     + (-1)^{m-1} (a_m a_1) a_2 .. a_{m-1}
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Tuple

from core.config import Settings, get_settings
from core.logging import get_logger
from exactla.combos import Combo, add_into, tensor_combos
from exactla.complex import BlockKey, ChainComplex, below
from exactla.isotypic import IsotypicReport, isotypic_homology
from exactla.sparse import SparseMatrix
from operads.bimodule import TwistedAlgebra, commutator_quotient
from operads.table import adjacent
from species.core import Truncation
from species.products import canonical_rotation, ordered_set_partitions
from species.series import Dims

logger = get_logger(__name__)

Letter = Tuple[Tuple[int, ...], object]
Word = Tuple[Letter, ...]


def _letter_degrees(a: TwistedAlgebra, word: Word) -> List[int]:
    return [1 + a.degree(tag) for _, tag in word]


def normal_form(a: TwistedAlgebra, word: Word) -> Combo:
    """The canonical rotation of a word with its Koszul sign, or zero."""
    normal = canonical_rotation(word, _letter_degrees(a, word))
    if normal is None:
        return {}
    return {normal[0]: normal[1]}


def _merge(a: TwistedAlgebra, x: Letter, y: Letter) -> Combo:
    """The letter x·y on the union of the two blocks."""
    (bx, tx), (by, ty) = x, y
    block = tuple(sorted(bx + by))
    local = {label: j for j, label in enumerate(block)}
    product_ = a.mu_at(tx, ty, [local[v] for v in bx], [local[v] for v in by])
    return {(block, tag): c for tag, c in product_.items()}


def word_differential(a: TwistedAlgebra, word: Word) -> Combo:
    m = len(word)
    out: Combo = {}
    if m < 2:
        return out
    degrees = _letter_degrees(a, word)
    for i in range(m - 1):
        sign = -1 if sum(degrees[:i]) % 2 else 1
        for letter, c in _merge(a, word[i], word[i + 1]).items():
            add_into(out, normal_form(a, word[:i] + (letter,) + word[i + 2:]), sign * c)
    # bring the last letter to the front, then multiply the first two
    rotation = -1 if (degrees[-1] * sum(degrees[:-1])) % 2 else 1
    for letter, c in _merge(a, word[-1], word[0]).items():
        add_into(out, normal_form(a, (letter,) + word[1:-1]), rotation * c)
    return out


def _act(a: TwistedAlgebra, word: Word, i: int) -> Combo:
    swap = {i: i + 1, i + 1: i}
    factors = []
    for block, tag in word:
        if i in block and i + 1 in block:
            pos = block.index(i)
            sigma = adjacent(len(block), pos)
            factors.append({(block, y): c for y, c in a.relabel(tag, sigma).items()})
        else:
            factors.append({(tuple(sorted(swap.get(v, v) for v in block)), tag): 1})
    out: Combo = {}
    for letters, coeff in tensor_combos(factors).items():
        add_into(out, normal_form(a, letters), coeff)
    return out


def _groupings(n: int, m: int, with_empty: bool):
    if not with_empty:
        return ordered_set_partitions(range(n), m)
    return (
        tuple(tuple(j for j in range(n) if assignment[j] == part) for part in range(m))
        for assignment in product(range(m), repeat=n)
    )


def cyclic_words(a: TwistedAlgebra, t: Truncation) -> Dict[BlockKey, List[Word]]:
    """Canonical cyclic words per (n, w, d) block."""
    top = min(t.max_arity, a.max_arity)
    with_empty = bool(a.basis(0))
    out: Dict[BlockKey, set] = {}
    for n in range(top + 1):
        cap = t.max_degree + 1 if with_empty else n
        for m in range(1, cap + 1):
            for blocks in _groupings(n, m, with_empty):
                choices = [a.basis(len(b)) for b in blocks]
                if any(not c for c in choices):
                    continue
                for tags in product(*choices):
                    word = tuple(zip(blocks, tags))
                    normal = canonical_rotation(word, _letter_degrees(a, word))
                    if normal is None:
                        continue
                    w = sum(a.weight(tag) for tag in tags)
                    d = m - 1 + sum(a.degree(tag) for tag in tags)
                    if w <= t.max_weight and d <= t.max_degree:
                        out.setdefault((n, w, d), set()).add(normal[0])
    return {k: sorted(v, key=repr) for k, v in sorted(out.items())}


def cyclic_complex(
    a: TwistedAlgebra, t: Truncation, settings: Optional[Settings] = None
) -> ChainComplex:
    """s^{-1}Cyc(sA) with its cyclic bar differential and S_n actions."""
    settings = settings or get_settings()
    blocks = cyclic_words(a, t)
    index = {b: {w: j for j, w in enumerate(words)} for b, words in blocks.items()}
    with_empty = bool(a.basis(0))

    def matrix(block: BlockKey, columns: List[Combo], target: BlockKey) -> SparseMatrix:
        rows = index.get(target, {})
        return SparseMatrix.from_columns(
            len(rows), [{rows[w]: c for w, c in col.items()} for col in columns]
        )

    def differential(block: BlockKey):
        return block, matrix(block, [word_differential(a, w) for w in blocks[block]], below(block))

    def action(item):
        block, i = item
        return block + (i,), matrix(block, [_act(a, w, i) for w in blocks[block]], block)

    with_d = [b for b in blocks if b[2] >= 1]
    with_action = [(b, i) for b in blocks for i in range(b[0] - 1)]
    if settings.parallelism > 1:
        with ThreadPoolExecutor(max_workers=settings.parallelism) as pool:
            diffs = dict(pool.map(differential, with_d))
            group = dict(pool.map(action, with_action))
    else:
        diffs = dict(map(differential, with_d))
        group = dict(map(action, with_action))
    untrusted = frozenset(
        (n, w, d) for n, w, d in blocks
        if d == t.max_degree and (with_empty or n >= d + 2)
    )
    logger.info("cyclic_complex_assembled", algebra=a.name, blocks=len(blocks))
    return ChainComplex(
        blocks={b: len(v) for b, v in blocks.items()},
        differentials=diffs,
        group_actions=group,
        bases={b: list(v) for b, v in blocks.items()},
        untrusted=untrusted,
        name=f"Cyc({a.name})",
    )


@dataclass
class CyclicHomology:
    """HC dims per (n, w, d) of a twisted algebra."""

    algebra: str
    dims: Dims = field(default_factory=dict)
    untrusted: FrozenSet[BlockKey] = frozenset()
    isotypic: Dict[int, List[IsotypicReport]] = field(default_factory=dict)

    def shifted(self) -> Dims:
        """HC_{d-1} placed in degree d, the grading of wheel homology."""
        return {(n, w, d + 1): v for (n, w, d), v in self.dims.items()}


def cyclic_homology(
    a: TwistedAlgebra,
    t: Truncation,
    settings: Optional[Settings] = None,
    isotypic: bool = False,
) -> CyclicHomology:
    settings = settings or get_settings()
    c = cyclic_complex(a, t, settings)
    c.check_equivariance()
    dims = c.homology_dims(parallelism=settings.parallelism)
    result = CyclicHomology(a.name, {k: v for k, v in dims.items() if v}, c.untrusted)
    if isotypic:
        for n in c.arities():
            if n >= 1:
                result.isotypic[n] = isotypic_homology(c, n)
    return result


def hc0_dims(a: TwistedAlgebra, t: Truncation) -> Dict[int, int]:
    """dim A/[A, A] per arity."""
    return commutator_quotient(a, t).dims(min(t.max_arity, a.max_arity))
