# wheeledbar/basis.py
"""
Enumeration of canonical graph keys per (n, w, d) block.

Trees and cul-de-sac trees are generated directly in canonical form
(inputs in order of their smallest leaf, labels taken from a basis).
Wheels are generated once per rotation class when they carry leaves and
deduplicated through the canonicaliser otherwise; classes killed by an
odd automorphism are dropped.
"""
from itertools import product
from typing import Dict, List, Tuple

from core.exceptions import TruncationExceededError
from core.logging import get_logger
from exactla.complex import BlockKey
from species.core import Truncation
from species.products import ordered_set_partitions, set_partitions

from .graphs import Key, LabelContext, canonicalize, decode

logger = get_logger(__name__)

Node = Tuple
Graded = Tuple[Node, int, int]  # (node, degree, weight)

SHAPES = ("T", "S", "W")


class GraphBasis:
    """Canonical keys of one wheeled bar construction, grouped by block."""

    def __init__(self, ctx: LabelContext, t: Truncation):
        self.ctx = ctx
        self.t = t
        self._trees: Dict[Tuple[Tuple[int, ...], int, int], List[Graded]] = {}

    # ---------- trees --------------------------------------------------------

    def trees(self, leaves: Tuple[int, ...], max_d: int, max_w: int) -> List[Graded]:
        """Rooted trees on `leaves` with at most max_d vertices and weight max_w."""
        memo_key = (leaves, max_d, max_w)
        if memo_key in self._trees:
            return self._trees[memo_key]
        table = self.ctx.table
        out: List[Graded] = []
        if len(leaves) == 1:
            out.append((("L", leaves[0]), 0, 0))
        if max_d >= 1:
            for blocks in set_partitions(leaves):
                k = len(blocks)
                if k > table.max_arity:
                    continue
                labels = [
                    (tag, table.weight(tag))
                    for tag in table.ideal_basis(k)
                    if table.weight(tag) <= max_w
                ]
                if not labels:
                    continue
                lightest = min(w for _, w in labels)
                for children, d, w in self.forests(blocks, max_d - 1, max_w - lightest):
                    for tag, wl in labels:
                        if w + wl <= max_w:
                            out.append((("V", tag, children), d + 1, w + wl))
        self._trees[memo_key] = out
        return out

    def forests(
        self, blocks: List[Tuple[int, ...]], max_d: int, max_w: int
    ) -> List[Tuple[Tuple[Node, ...], int, int]]:
        """Tuples of trees, one per block, within the joint bounds."""
        acc: List[Tuple[Tuple[Node, ...], int, int]] = [((), 0, 0)]
        for block in blocks:
            nxt = []
            options = self.trees(block, max_d, max_w)
            for nodes, d, w in acc:
                for node, d1, w1 in options:
                    if d + d1 <= max_d and w + w1 <= max_w:
                        nxt.append((nodes + (node,), d + d1, w + w1))
            acc = nxt
            if not acc:
                break
        return acc

    # ---------- shapes -------------------------------------------------------

    def tree_keys(self, n: int) -> List[Tuple[Key, int, int]]:
        table = self.ctx.table
        if table.model.top_arity is None and n > table.max_arity:
            raise TruncationExceededError(
                f"trees on {n} leaves need {table.name}({n})", arity=n
            )
        return [
            (("T", node), d, w)
            for node, d, w in self.trees(tuple(range(n)), self.t.max_degree, self.t.max_weight)
        ] if n >= 1 else []

    def sink_keys(self, n: int) -> List[Tuple[Key, int, int]]:
        sinks = self.ctx.sinks
        if sinks is None:
            return []
        out = []
        for blocks in set_partitions(range(n)):
            k = len(blocks)
            if k > sinks.max_arity:
                continue
            for label in sinks.basis(k):
                wl = sinks.weight(label)
                if wl > self.t.max_weight:
                    continue
                for children, d, w in self.forests(blocks, self.t.max_degree, self.t.max_weight - wl):
                    out.append((("S", label, children), d, w + wl))
        return out

    def _cycle_vertices(self, group: Tuple[int, ...], max_d: int, max_w: int) -> List[Graded]:
        """Cycle vertices owning the leaves in `group`, with their subtrees."""
        table = self.ctx.table
        out: List[Graded] = []
        if max_d < 1:
            return out
        for blocks in set_partitions(group):
            j = len(blocks)
            if j + 1 > table.max_arity:
                continue
            for tag in table.ideal_basis(j + 1):
                wl = table.weight(tag)
                if wl > max_w:
                    continue
                for children, d, w in self.forests(blocks, max_d - 1, max_w - wl):
                    out.append(((tag, children), d + 1, w + wl))
        return out

    def wheel_keys(self, n: int) -> List[Tuple[Key, int, int]]:
        table = self.ctx.table
        if n >= 1 and table.model.top_arity is None and n + 1 > table.max_arity:
            raise TruncationExceededError(
                f"wheels on {n} leaves need {table.name}({n + 1}); "
                f"the table stops at {table.max_arity}",
                arity=n,
            )
        empty_allowed = bool(table.ideal_basis(1))
        found: Dict[Key, Tuple[int, int]] = {}
        for r in range(1, self.t.max_degree + 1):
            if n >= 1:
                groupings = [
                    g for g in (_groupings(n, r, empty_allowed)) if 0 in g[0]
                ]
            else:
                groupings = [tuple(() for _ in range(r))] if empty_allowed else []
            for groups in groupings:
                options = [
                    self._cycle_vertices(g, self.t.max_degree, self.t.max_weight) for g in groups
                ]
                for choice in product(*options):
                    d = sum(c[1] for c in choice)
                    w = sum(c[2] for c in choice)
                    if d > self.t.max_degree or w > self.t.max_weight:
                        continue
                    raw = ("W", tuple(c[0] for c in choice))
                    for key in canonicalize(self.ctx, decode(raw)):
                        found[key] = (d, w)
        return [(key, d, w) for key, (d, w) in found.items()]

    # ---------- blocks -------------------------------------------------------

    def blocks(self, shapes=SHAPES) -> Dict[BlockKey, List[Key]]:
        """Sorted keys per (n, w, d) block for the requested shapes."""
        out: Dict[BlockKey, List[Key]] = {}
        for n in range(self.t.max_arity + 1):
            keyed = []
            if "T" in shapes:
                keyed += self.tree_keys(n)
            if "S" in shapes:
                keyed += self.sink_keys(n)
            if "W" in shapes:
                keyed += self.wheel_keys(n)
            for key, d, w in keyed:
                out.setdefault((n, w, d), []).append(key)
        for block in out:
            out[block] = sorted(set(out[block]), key=repr)
        logger.debug(
            "graph_basis_built",
            operad=self.ctx.table.name,
            shapes="".join(shapes),
            blocks=len(out),
            size=sum(len(v) for v in out.values()),
        )
        return out


def _groupings(n: int, r: int, empty_allowed: bool):
    if not empty_allowed:
        return ordered_set_partitions(range(n), r)
    return (
        tuple(tuple(j for j in range(n) if assignment[j] == part) for part in range(r))
        for assignment in product(range(r), repeat=n)
    )
