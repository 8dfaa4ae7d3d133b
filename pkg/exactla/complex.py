# exactla/complex.py
"""
Chain complexes over Q graded by (arity n, weight w, degree d).

The differential stored at key (n, w, d) maps the degree-d block to the
degree-(d-1) block with the same (n, w).
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Sequence, Tuple

from core.exceptions import ChainComplexError, EquivarianceError
from core.logging import get_logger

from .rank import rank
from .sparse import SparseMatrix

logger = get_logger(__name__)

BlockKey = Tuple[int, int, int]


def below(key: BlockKey) -> BlockKey:
    n, w, d = key
    return n, w, d - 1


def above(key: BlockKey) -> BlockKey:
    n, w, d = key
    return n, w, d + 1


@dataclass
class ChainComplex:
    """
    Based chain complex with sparse differentials.

    Attributes:
        blocks: block dimensions
        differentials: key -> matrix from block key to block below(key)
        group_actions: (n, w, d, i) -> action of the adjacent transposition s_i
        bases: optional basis labels per block (for reports and actions)
        operators: named extra operators, e.g. gl(V) raising operators
        untrusted: blocks whose neighbours were cut off by the truncation
    """

    blocks: Dict[BlockKey, int]
    differentials: Dict[BlockKey, SparseMatrix] = field(default_factory=dict)
    group_actions: Dict[Tuple[int, int, int, int], SparseMatrix] = field(
        default_factory=dict
    )
    bases: Dict[BlockKey, List[Any]] = field(default_factory=dict)
    operators: Dict[str, Dict[BlockKey, SparseMatrix]] = field(default_factory=dict)
    untrusted: frozenset = frozenset()
    name: str = ""

    def __post_init__(self) -> None:
        for key, matrix in self.differentials.items():
            expected = (self.dim(below(key)), self.dim(key))
            if matrix.shape != expected:
                raise ChainComplexError(
                    f"differential at {key} has shape {matrix.shape}, expected {expected}",
                    block=key,
                )
        self._ranks: Dict[BlockKey, int] = {}

    # ---------- access -------------------------------------------------------

    def dim(self, key: BlockKey) -> int:
        return self.blocks.get(key, 0)

    def keys(self) -> List[BlockKey]:
        return sorted(k for k, v in self.blocks.items() if v)

    def arities(self) -> List[int]:
        return sorted({k[0] for k in self.keys()})

    def differential(self, key: BlockKey) -> SparseMatrix:
        matrix = self.differentials.get(key)
        if matrix is None:
            return SparseMatrix.zero(self.dim(below(key)), self.dim(key))
        return matrix

    def rank_of(self, key: BlockKey) -> int:
        if key not in self._ranks:
            matrix = self.differentials.get(key)
            self._ranks[key] = rank(matrix) if matrix is not None else 0
        return self._ranks[key]

    # ---------- checks -------------------------------------------------------

    def check_d_squared(self) -> None:
        """
        Assert d_{d-1} d_d = 0 entrywise on every block.

        Raises:
            ChainComplexError: with the offending block
        """
        for key in sorted(self.differentials):
            lower = self.differentials.get(below(key))
            if lower is None:
                continue
            composite = lower @ self.differentials[key]
            if not composite.is_zero():
                raise ChainComplexError(
                    f"d∘d != 0 on block {key}", block=key, nnz=composite.nnz()
                )
        logger.debug("d_squared_checked", complex=self.name, blocks=len(self.blocks))

    def check_equivariance(self) -> None:
        """Every stored s_i action commutes with the differential."""
        for (n, w, d, i), action in sorted(self.group_actions.items()):
            key = (n, w, d)
            if key not in self.differentials:
                continue
            lower = self.group_actions.get((n, w, d - 1, i))
            if lower is None:
                continue
            dmat = self.differentials[key]
            if lower @ dmat != dmat @ action:
                raise EquivarianceError(
                    f"s_{i} does not commute with d on block {key}", block=key
                )

    # ---------- homology -----------------------------------------------------

    def homology_dims(
        self, check: bool = True, parallelism: int = 1
    ) -> Dict[BlockKey, int]:
        """dim H = dim block - rank(d_out) - rank(d_in), per block."""
        if check:
            self.check_d_squared()
        keys = sorted(self.differentials)
        missing = [k for k in keys if k not in self._ranks]
        if parallelism > 1 and len(missing) > 1:
            with ThreadPoolExecutor(max_workers=parallelism) as pool:
                for key, value in zip(missing, pool.map(lambda k: rank(self.differentials[k]), missing)):
                    self._ranks[key] = value
        dims: Dict[BlockKey, int] = {}
        for key in self.keys():
            h = self.dim(key) - self.rank_of(key) - self.rank_of(above(key))
            dims[key] = h
        return dims

    def euler_characteristic(self, n: int, w: int) -> int:
        return sum(
            (-1) ** d * dim for (kn, kw, d), dim in self.blocks.items() if (kn, kw) == (n, w)
        )

    # ---------- derived complexes --------------------------------------------

    def restrict(self, keep: Callable[[BlockKey], bool], name: str = "") -> "ChainComplex":
        """Sub-family of blocks (a direct summand closed under d)."""
        blocks = {k: v for k, v in self.blocks.items() if keep(k)}
        return ChainComplex(
            blocks=blocks,
            differentials={
                k: m for k, m in self.differentials.items() if keep(k) and keep(below(k))
            },
            group_actions={
                k: m for k, m in self.group_actions.items() if keep(k[:3])
            },
            bases={k: v for k, v in self.bases.items() if keep(k)},
            operators={
                name_: {k: m for k, m in ops.items() if keep(k)}
                for name_, ops in self.operators.items()
            },
            untrusted=frozenset(k for k in self.untrusted if keep(k)),
            name=name or self.name,
        )


def direct_sum(parts: Sequence[ChainComplex], name: str = "") -> ChainComplex:
    """Blockwise direct sum, concatenating bases in the given order."""
    blocks: Dict[BlockKey, int] = {}
    offsets: List[Dict[BlockKey, int]] = []
    for part in parts:
        offset = {}
        for key, dim in part.blocks.items():
            offset[key] = blocks.get(key, 0)
            blocks[key] = blocks.get(key, 0) + dim
        offsets.append(offset)

    def shifted(part_index: int, key: BlockKey, matrix: SparseMatrix, row_key: BlockKey,
                out: Dict) -> None:
        r0 = offsets[part_index].get(row_key, 0)
        c0 = offsets[part_index].get(key, 0)
        for r, c, v in matrix.entries():
            out[(r + r0, c + c0)] = v

    diffs: Dict[BlockKey, SparseMatrix] = {}
    all_keys = sorted({k for p in parts for k in p.differentials})
    for key in all_keys:
        entries: Dict = {}
        for i, part in enumerate(parts):
            if key in part.differentials:
                shifted(i, key, part.differentials[key], below(key), entries)
        diffs[key] = SparseMatrix(blocks.get(below(key), 0), blocks.get(key, 0), entries)

    actions: Dict = {}
    action_keys = sorted({k for p in parts for k in p.group_actions})
    for akey in action_keys:
        key = akey[:3]
        entries = {}
        for i, part in enumerate(parts):
            if akey in part.group_actions:
                shifted(i, key, part.group_actions[akey], key, entries)
            elif part.dim(key):
                return _without_actions(parts, blocks, diffs, name)
        actions[akey] = SparseMatrix(blocks[key], blocks[key], entries)

    bases: Dict[BlockKey, List[Any]] = {}
    for key in blocks:
        if all(key in p.bases for p in parts if p.dim(key)):
            bases[key] = [label for p in parts if p.dim(key) for label in p.bases[key]]
    untrusted = frozenset(k for p in parts for k in p.untrusted)
    return ChainComplex(blocks, diffs, actions, bases, {}, untrusted, name)


def _without_actions(parts, blocks, diffs, name) -> ChainComplex:
    untrusted = frozenset(k for p in parts for k in p.untrusted)
    return ChainComplex(blocks, diffs, {}, {}, {}, untrusted, name)


def euler_characteristic(dims: Dict[BlockKey, int], n: int, w: int) -> int:
    """Alternating sum over degrees for one (n, w) slice of a dims table."""
    return sum((-1) ** d * v for (kn, kw, d), v in dims.items() if (kn, kw) == (n, w))
