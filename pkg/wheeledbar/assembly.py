# wheeledbar/assembly.py
"""
Assembly of the operadic bar construction B(O) and the wheeled bar
construction B^↻(U) as based chain complexes.

The differential of a graph is the sum of its edge contractions:

    tree edges    compose a vertex into the one it feeds (or into the sink)
    cycle edges   compose around the wheel through the marked input
    loop          a one-vertex wheel becomes a cul-de-sac through the trace
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from core.config import Settings, get_settings
from core.exceptions import ChainComplexError
from core.logging import get_logger
from exactla.combos import Combo, add_into
from exactla.complex import BlockKey, ChainComplex, below, direct_sum
from exactla.sparse import SparseMatrix
from operads.table import OperadTable, adjacent
from species.core import Truncation

from .basis import GraphBasis
from .completion import WheeledOperadData, trivial_wheeling
from .graphs import (
    CYCLE,
    TREE,
    Key,
    LabelContext,
    canonicalize,
    contract_cycle_edge,
    contract_tree_edge,
    decode,
    erase_loop,
    map_labels,
    relabel_leaves,
)

logger = get_logger(__name__)

PARTS = ("tree", "cycle", "loop")


def graph_differential(ctx: LabelContext, key: Key, parts: Iterable[str] = PARTS) -> Combo:
    """d(key) restricted to the requested kinds of contraction."""
    parts = set(parts)
    g = decode(key)
    terms = []
    if "tree" in parts:
        for u in sorted(g.parents()):
            if g.roles[u] == TREE:
                terms.extend(contract_tree_edge(ctx, g, u))
    if "cycle" in parts and len(g.cycle) >= 2:
        for k in range(len(g.cycle)):
            terms.extend(contract_cycle_edge(ctx, g, k))
    if "loop" in parts and len(g.cycle) == 1 and g.roles[g.cycle[0]] == CYCLE:
        terms.extend(erase_loop(ctx, g))
    out: Combo = {}
    for graph, coeff in terms:
        add_into(out, canonicalize(ctx, graph), coeff)
    return out


def _column_matrix(
    columns: Sequence[Combo], target: Dict[Key, int], rows: int, block: BlockKey
) -> SparseMatrix:
    entries = []
    for c, combo in enumerate(columns):
        column = {}
        for key, value in combo.items():
            r = target.get(key)
            if r is None:
                raise ChainComplexError(
                    "an image leaves the truncated basis", block=block, graph=repr(key)
                )
            column[r] = value
        entries.append(column)
    return SparseMatrix.from_columns(rows, entries)


def _untrusted(blocks: Dict[BlockKey, List[Key]], t: Truncation, graded: bool) -> FrozenSet[BlockKey]:
    flagged = set()
    for n, w, d in blocks:
        if d == t.max_degree and (not graded or d < w):
            flagged.add((n, w, d))
    return frozenset(flagged)


def assemble(
    ctx: LabelContext,
    blocks: Dict[BlockKey, List[Key]],
    t: Truncation,
    name: str,
    parts: Iterable[str] = PARTS,
    settings: Optional[Settings] = None,
    actions: bool = True,
) -> ChainComplex:
    """Chain complex on the given graph blocks; d² and equivariance are left to the caller."""
    settings = settings or get_settings()
    parts = tuple(parts)
    index = {block: {key: j for j, key in enumerate(keys)} for block, keys in blocks.items()}

    def differential(block: BlockKey) -> Tuple[BlockKey, SparseMatrix]:
        lower = below(block)
        columns = [graph_differential(ctx, key, parts) for key in blocks[block]]
        matrix = _column_matrix(columns, index.get(lower, {}), len(blocks.get(lower, [])), block)
        return block, matrix

    def action(item: Tuple[BlockKey, int]) -> Tuple[Tuple[int, int, int, int], SparseMatrix]:
        block, i = item
        sigma = adjacent(block[0], i)
        columns = [canonicalize(ctx, relabel_leaves(decode(key), sigma)) for key in blocks[block]]
        return block + (i,), _column_matrix(columns, index[block], len(blocks[block]), block)

    with_d = [b for b in sorted(blocks) if b[2] >= 1]
    with_action = [(b, i) for b in sorted(blocks) if actions for i in range(b[0] - 1)]
    workers = settings.parallelism
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            diffs = dict(pool.map(differential, with_d))
            group = dict(pool.map(action, with_action))
    else:
        diffs = dict(map(differential, with_d))
        group = dict(map(action, with_action))

    complex_ = ChainComplex(
        blocks={b: len(keys) for b, keys in blocks.items()},
        differentials=diffs,
        group_actions=group,
        bases={b: list(keys) for b, keys in blocks.items()},
        untrusted=_untrusted(blocks, t, ctx.table.graded),
        name=name,
    )
    logger.info(
        "complex_assembled",
        complex=name,
        blocks=len(blocks),
        size=sum(complex_.blocks.values()),
    )
    return complex_


def _context(o: OperadTable, u: Optional[WheeledOperadData], settings: Settings) -> LabelContext:
    sinks = u.wheeled if u is not None else None
    return LabelContext(o, sinks=sinks, max_vertices=settings.max_canonical_vertices)


def bar(o: OperadTable, t: Truncation, settings: Optional[Settings] = None) -> ChainComplex:
    """
    The operadic bar construction B(O): rooted trees decorated by sŌ.

    The trivial tree spans the block (1, 0, 0).
    """
    settings = settings or get_settings()
    ctx = _context(o, None, settings)
    blocks = GraphBasis(ctx, t).blocks(shapes=("T",))
    return assemble(ctx, blocks, t, f"B({o.name})", parts=("tree",), settings=settings)


@dataclass
class WheeledBar:
    """The two summands of B^↻(U); both are subcomplexes."""

    operadic: ChainComplex
    wheeled: ChainComplex
    data: WheeledOperadData
    context: LabelContext
    blocks: Dict[BlockKey, List[Key]] = field(default_factory=dict)

    def total(self) -> ChainComplex:
        return direct_sum([self.operadic, self.wheeled], name=f"B_wheeled({self.data.name})")


def wheeled_bar_split(
    u: WheeledOperadData, t: Truncation, settings: Optional[Settings] = None
) -> WheeledBar:
    """B^↻(U) assembled as its operadic part (trees) and wheeled part."""
    settings = settings or get_settings()
    ctx = _context(u.operadic, u, settings)
    basis = GraphBasis(ctx, t)
    trees = basis.blocks(shapes=("T",))
    wheeled_shapes = ("S", "W") if u.wheeled is not None else ("W",)
    wheels = basis.blocks(shapes=wheeled_shapes)
    label = f"{u.name}, {u.wheeling.value}"
    operadic = assemble(ctx, trees, t, f"B({label})_o", parts=("tree",), settings=settings)
    wheeled = assemble(ctx, wheels, t, f"B({label})_w", settings=settings)
    return WheeledBar(operadic, wheeled, u, ctx, wheels)


def wheeled_bar(
    u: WheeledOperadData, t: Truncation, settings: Optional[Settings] = None
) -> ChainComplex:
    """B^↻(U) as one complex (operadic part first in every block)."""
    return wheeled_bar_split(u, t, settings).total()


def wheeled_bar_parts(
    u: WheeledOperadData, t: Truncation, settings: Optional[Settings] = None
) -> Dict[str, ChainComplex]:
    """
    The wheeled part of B^↻(U) with one differential per kind of contraction.

    The summed differential is the one of wheeled_bar; each piece is stored
    as its own complex on the same blocks.
    """
    settings = settings or get_settings()
    ctx = _context(u.operadic, u, settings)
    shapes = ("S", "W") if u.wheeled is not None else ("W",)
    blocks = GraphBasis(ctx, t).blocks(shapes=shapes)
    return {
        part: assemble(ctx, blocks, t, f"{part}({u.name})", parts=(part,), settings=settings, actions=False)
        for part in PARTS
    }


@dataclass
class ChainMap:
    """Blockwise matrices of a chain map between two graph complexes."""

    source: ChainComplex
    target: ChainComplex
    matrices: Dict[BlockKey, SparseMatrix]

    def check(self) -> None:
        """F d = d' F on every block where both sides are defined."""
        for block, f in sorted(self.matrices.items()):
            if block[2] < 1:
                continue
            lower = self.matrices.get(below(block))
            if lower is None:
                continue
            lhs = lower @ self.source.differential(block)
            rhs = self.target.differential(block) @ f
            if lhs != rhs:
                raise ChainComplexError("map does not commute with the differentials", block=block)


def chain_map(
    morphism: Callable[[Hashable], Combo],
    source: WheeledBar,
    target: WheeledBar,
) -> ChainMap:
    """
    The map of wheeled parts induced by an operad morphism.

    Vertex labels of trees and wheels are pushed through the morphism; the
    induced map on ∂ is the same map on underlying tags. Only trivial
    wheelings are supported, since the wheeled parts must correspond.
    """
    if source.data.wheeled is not None or target.data.wheeled is not None:
        raise ChainComplexError("chain maps are built between trivial wheelings only")
    matrices: Dict[BlockKey, SparseMatrix] = {}
    target_index = {
        block: {key: j for j, key in enumerate(keys)} for block, keys in target.blocks.items()
    }
    for block, keys in sorted(source.blocks.items()):
        columns = []
        for key in keys:
            image: Combo = {}
            for graph, coeff in map_labels(decode(key), morphism):
                add_into(image, canonicalize(target.context, graph), coeff)
            columns.append(image)
        matrices[block] = _column_matrix(
            columns, target_index.get(block, {}), target.wheeled.dim(block), block
        )
    return ChainMap(source.wheeled, target.wheeled, matrices)


def trivial_wheeled_bar(o: OperadTable, t: Truncation, settings: Optional[Settings] = None) -> WheeledBar:
    return wheeled_bar_split(trivial_wheeling(o), t, settings)
