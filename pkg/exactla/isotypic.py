# exactla/isotypic.py
"""
Isotypic decomposition of S_n-equivariant chain complexes.

For each partition lam the central idempotent
    e_lam = (dim lam / n!) * sum_sigma chi_lam(sigma) sigma
is applied to every block; the restricted complex has homology
    rank P_d - rank(d P_d) - rank(d_{d+1} P_{d+1})
and dividing by dim lam gives the multiplicity.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from core.exceptions import EquivarianceError
from core.logging import get_logger

from .characters import (
    Partition,
    character_table,
    cycle_type,
    irreducible_dimension,
    partitions,
    permutations_with_words,
)
from .complex import ChainComplex, below
from .rank import rank
from .sparse import SparseMatrix

logger = get_logger(__name__)


@dataclass
class IsotypicReport:
    """Multiplicity of one irreducible in the homology, per (w, d)."""

    partition: Partition
    multiplicity: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return irreducible_dimension(self.partition)


def group_matrices(
    c: ChainComplex, n: int, w: int, d: int
) -> Optional[List[Tuple[Tuple[int, ...], SparseMatrix]]]:
    """rho(sigma) for every sigma in S_n on block (n, w, d)."""
    dim = c.dim((n, w, d))
    generators = {}
    for i in range(n - 1):
        action = c.group_actions.get((n, w, d, i))
        if action is None:
            return None
        generators[i] = action
    result = []
    cache: Dict[Tuple[int, ...], SparseMatrix] = {(): SparseMatrix.identity(dim)}
    for perm, word in permutations_with_words(n):
        matrix = cache.get(word)
        if matrix is None:
            # word = (i,) + shorter word, already built breadth-first
            matrix = generators[word[0]] @ _word_matrix(word[1:], generators, cache, dim)
            cache[word] = matrix
        result.append((perm, matrix))
    return result


def _word_matrix(word, generators, cache, dim) -> SparseMatrix:
    matrix = cache.get(word)
    if matrix is None:
        matrix = SparseMatrix.identity(dim)
        for i in word:
            matrix = matrix @ generators[i]
        cache[word] = matrix
    return matrix


def central_projector(
    elements: List[Tuple[Tuple[int, ...], SparseMatrix]], lam: Partition, dim: int
) -> SparseMatrix:
    """n!/dim(lam) times e_lam: an integral matrix with the same image."""
    n = sum(lam)
    table = character_table(n)[lam]
    entries: Dict[Tuple[int, int], int] = {}
    for perm, matrix in elements:
        chi = table[cycle_type(perm)]
        if not chi:
            continue
        for r, col, v in matrix.entries():
            entries[(r, col)] = entries.get((r, col), 0) + chi * v
    return SparseMatrix(dim, dim, {k: v for k, v in entries.items() if v})


def isotypic_homology(c: ChainComplex, n: int) -> List[IsotypicReport]:
    """
    Multiplicity of every irreducible of S_n in the homology of arity n.

    Raises:
        EquivarianceError: an idempotent does not commute with d, or a
            multiplicity comes out fractional
    """
    keys = [k for k in c.keys() if k[0] == n]
    projectors: Dict[Tuple[Partition, Tuple[int, int, int]], SparseMatrix] = {}
    for key in keys:
        elements = group_matrices(c, *key)
        if elements is None:
            raise EquivarianceError(f"no S_{n} action stored for block {key}", block=key)
        for lam in partitions(n):
            projectors[(lam, key)] = central_projector(elements, lam, c.dim(key))

    reports = []
    for lam in partitions(n):
        dim_lam = irreducible_dimension(lam)
        report = IsotypicReport(partition=lam)
        for key in keys:
            _, w, d = key
            p_here = projectors[(lam, key)]
            out_rank = 0
            if key in c.differentials:
                dmat = c.differentials[key]
                p_below = projectors.get((lam, below(key)))
                if p_below is not None and dmat @ p_here != p_below @ dmat:
                    raise EquivarianceError(
                        f"idempotent {lam} does not commute with d on {key}", block=key
                    )
                out_rank = rank(dmat @ p_here)
            in_rank = 0
            up = (n, w, d + 1)
            if up in c.differentials and (lam, up) in projectors:
                in_rank = rank(c.differentials[up] @ projectors[(lam, up)])
            h = rank(p_here) - out_rank - in_rank
            if h % dim_lam:
                raise EquivarianceError(
                    f"homology {h} of type {lam} not divisible by {dim_lam}", block=key
                )
            if h:
                report.multiplicity[(w, d)] = h // dim_lam
        reports.append(report)
        logger.debug("isotypic_block", n=n, partition=lam, multiplicity=report.multiplicity)
    return reports


def character_of(reports: List[IsotypicReport]) -> Dict[Tuple[int, int], Dict[Partition, int]]:
    """Per (w, d): multiplicities keyed by partition (zeros omitted)."""
    out: Dict[Tuple[int, int], Dict[Partition, int]] = {}
    for report in reports:
        for wd, mult in report.multiplicity.items():
            out.setdefault(wd, {})[report.partition] = mult
    return out
