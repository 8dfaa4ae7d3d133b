# wheeledbar/graphs.py
"""
Decorated graphs of the (wheeled) bar construction.

Three shapes occur:

    'T'  rooted tree, every vertex odd and labelled by Ō
    'S'  cul-de-sac tree: an even sink labelled by the wheeled part Ū_w with
         rooted trees grafted onto its inputs
    'W'  wheel: a directed cycle of odd vertices labelled by ∂(Ō), the
         marked input of c_k fed by c_{k+1}, trees grafted onto the rest

A Graph is the working form: a vertex list whose order on odd vertices is
the orientation. A key is the canonical hashable form: inputs sorted by
their smallest leaf, labels relabelled to match, and vertices listed in
preorder (wheels starting at the least rotation).

    ('T', node)                          node = ('L', leaf) | ('V', label, children)
    ('S', label, children)
    ('W', ((label, children), ...))
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from core.exceptions import TruncationExceededError
from exactla.combos import Combo, add_term, perm_sign, sorting_perm, tensor_combos
from operads.bimodule import QuotientAlgebra
from operads.table import OperadTable

Ref = Tuple  # ('L', leaf) or ('V', vertex id)
Key = Tuple

TREE = "tree"
CYCLE = "cycle"
SINK = "sink"


@dataclass
class Graph:
    """Working form of a decorated graph; vertex order is the orientation."""

    shape: str
    n: int
    roles: List[str] = field(default_factory=list)
    labels: List[Hashable] = field(default_factory=list)
    inputs: List[Tuple[Ref, ...]] = field(default_factory=list)
    cycle: List[int] = field(default_factory=list)
    top: Optional[Ref] = None

    def odd_vertices(self) -> List[int]:
        return [v for v, role in enumerate(self.roles) if role != SINK]

    def odd_position(self, v: int) -> int:
        return sum(1 for u in range(v) if self.roles[u] != SINK)

    def parents(self) -> Dict[int, Tuple[int, int]]:
        """Tree edges: vertex -> (vertex it feeds, input slot)."""
        out = {}
        for v, refs in enumerate(self.inputs):
            for slot, ref in enumerate(refs):
                if ref[0] == "V":
                    out[ref[1]] = (v, slot)
        return out


class LabelContext:
    """Relabelling and composition of vertex labels by role."""

    def __init__(
        self,
        table: OperadTable,
        sinks: Optional[QuotientAlgebra] = None,
        max_vertices: int = 9,
    ):
        self.table = table
        self.sinks = sinks
        self.max_vertices = max_vertices

    def relabel(self, role: str, tag: Hashable, sigma: Tuple[int, ...]) -> Combo:
        if sigma == tuple(range(len(sigma))):
            return {tag: 1}
        if role == TREE:
            return self.table.relabel(tag, sigma)
        if role == CYCLE:
            return self.table.relabel(tag, sigma + (len(sigma),))
        return self.sinks.relabel(tag, sigma)

    def weight(self, role: str, tag: Hashable) -> int:
        return self.table.weight(tag)

    def trace(self, tag: Hashable, j: int) -> Combo:
        if self.sinks is None:
            return {}
        return self.sinks.project(j, {tag: 1})

    def sink_compose(self, tag: Hashable, slot: int, inner: Hashable) -> Combo:
        composite = self.table.compose(tag, slot, inner)
        j = self.table.arity(tag) + self.table.arity(inner) - 2
        return self.sinks.project(j, composite)


# ---------- keys ------------------------------------------------------------


def decode(key: Key) -> Graph:
    """Working graph of a canonical key, vertices in canonical order."""
    shape = key[0]
    g = Graph(shape=shape, n=0)

    def add(node, role: str = TREE) -> Ref:
        if node[0] == "L":
            g.n += 1
            return node
        vid = len(g.labels)
        g.roles.append(role)
        g.labels.append(node[1])
        g.inputs.append(())
        g.inputs[vid] = tuple(add(child) for child in node[2])
        return ("V", vid)

    if shape == "T":
        g.top = add(key[1])
    elif shape == "S":
        g.top = add(("V", key[1], key[2]), role=SINK)
    else:
        for label, children in key[1]:
            ref = add(("V", label, children), role=CYCLE)
            g.cycle.append(ref[1])
    return g


def _min_leaves(g: Graph) -> Dict[Ref, int]:
    memo: Dict[Ref, int] = {}

    def visit(ref: Ref) -> int:
        if ref in memo:
            return memo[ref]
        if ref[0] == "L":
            value = ref[1]
        else:
            value = min(visit(child) for child in g.inputs[ref[1]])
        memo[ref] = value
        return value

    for v, refs in enumerate(g.inputs):
        for ref in refs:
            visit(ref)
    return memo


def canonicalize(ctx: LabelContext, g: Graph) -> Combo:
    """Combination of canonical keys equal to the graph with its orientation."""
    if len(g.roles) > ctx.max_vertices:
        raise TruncationExceededError(
            f"graphs with {len(g.roles)} vertices exceed the canonicaliser bound",
            vertices=len(g.roles),
        )
    mins = _min_leaves(g)
    sorted_inputs: List[Tuple[Ref, ...]] = []
    choices: List[Combo] = []
    for v, refs in enumerate(g.inputs):
        keys = [mins[ref] for ref in refs]
        sigma = sorting_perm(keys)
        order = sorted(range(len(refs)), key=lambda j: keys[j])
        sorted_inputs.append(tuple(refs[j] for j in order))
        choices.append(ctx.relabel(g.roles[v], g.labels[v], sigma))

    odd = g.odd_vertices()
    odd_rank = {v: r for r, v in enumerate(odd)}
    out: Combo = {}
    for labels, coeff in tensor_combos(choices).items():
        node_memo: Dict[Ref, Tuple] = {}

        def node(ref: Ref):
            if ref[0] == "L":
                return ref
            if ref not in node_memo:
                v = ref[1]
                node_memo[ref] = ("V", labels[v], tuple(node(c) for c in sorted_inputs[v]))
            return node_memo[ref]

        def preorder(ref: Ref, acc: List[int]) -> None:
            if ref[0] == "V":
                acc.append(ref[1])
                for child in sorted_inputs[ref[1]]:
                    preorder(child, acc)

        if g.shape == "T":
            order: List[int] = []
            preorder(g.top, order)
            key = ("T", node(g.top))
            sign = _orientation_sign(order, odd_rank)
            add_term(out, key, coeff * sign)
        elif g.shape == "S":
            s = g.top[1]
            order = [s]
            for child in sorted_inputs[s]:
                preorder(child, order)
            key = ("S", labels[s], tuple(node(c) for c in sorted_inputs[s]))
            add_term(out, key, coeff * _orientation_sign(order, odd_rank))
        else:
            result = _canonical_wheel(g, labels, sorted_inputs, node, preorder, odd_rank)
            if result is not None:
                key, sign = result
                add_term(out, key, coeff * sign)
    return out


def _orientation_sign(order: Sequence[int], odd_rank: Dict[int, int]) -> int:
    return perm_sign([odd_rank[v] for v in order if v in odd_rank])


def _canonical_wheel(g, labels, sorted_inputs, node, preorder, odd_rank):
    r = len(g.cycle)
    candidates = []
    for start in range(r):
        rotated = g.cycle[start:] + g.cycle[:start]
        seq = tuple((labels[c], tuple(node(x) for x in sorted_inputs[c])) for c in rotated)
        order: List[int] = []
        for c in rotated:
            order.append(c)
            for child in sorted_inputs[c]:
                preorder(child, order)
        candidates.append((repr(seq), seq, _orientation_sign(order, odd_rank)))
    _, best, sign = min(candidates, key=lambda item: item[0])
    if any(seq == best and s != sign for _, seq, s in candidates):
        return None
    return ("W", best), sign


# ---------- gradings --------------------------------------------------------


def grading(ctx: LabelContext, key: Key) -> Tuple[int, int, int]:
    """(arity n, weight w, degree d) of a canonical key."""
    g = decode(key)
    w = sum(ctx.weight(role, label) for role, label in zip(g.roles, g.labels))
    return g.n, w, len(g.odd_vertices())


# ---------- edits -----------------------------------------------------------


def _rebuild(
    g: Graph,
    order: List[int],
    replace: Dict[int, int],
    roles: Dict[int, str],
    labels: Dict[int, Hashable],
    inputs: Dict[int, Tuple[Ref, ...]],
    shape: Optional[str] = None,
    cycle: Optional[List[int]] = None,
) -> Graph:
    """
    New graph on the old vertices listed in `order`; `replace` redirects
    removed vertices to their survivor.
    """
    new_id = {v: j for j, v in enumerate(order)}

    def ref_of(ref: Ref) -> Ref:
        if ref[0] == "L":
            return ref
        v = replace.get(ref[1], ref[1])
        return ("V", new_id[v])

    out = Graph(shape=shape or g.shape, n=g.n)
    for v in order:
        out.roles.append(roles.get(v, g.roles[v]))
        out.labels.append(labels.get(v, g.labels[v]))
        out.inputs.append(tuple(ref_of(x) for x in inputs.get(v, g.inputs[v])))
    source_cycle = g.cycle if cycle is None else cycle
    out.cycle = [new_id[replace.get(c, c)] for c in source_cycle]
    out.top = ref_of(g.top) if g.top is not None else None
    return out


def contract_tree_edge(ctx: LabelContext, g: Graph, u: int) -> List[Tuple[Graph, int]]:
    """Collapse the edge from tree vertex u into the vertex it feeds."""
    v, slot = g.parents()[u]
    sign_u = -1 if g.odd_position(u) % 2 else 1
    merged_inputs = g.inputs[v][:slot] + g.inputs[u] + g.inputs[v][slot + 1:]
    if g.roles[v] == SINK:
        out = []
        order = [x for x in range(len(g.roles)) if x != u]
        for label, c in ctx.sink_compose(g.labels[v], slot, g.labels[u]).items():
            new = _rebuild(g, order, {u: v}, {}, {v: label}, {v: merged_inputs})
            out.append((new, sign_u * c))
        return out
    composite = ctx.table.compose(g.labels[v], slot, g.labels[u])
    return _merge_odd(g, u, v, composite, merged_inputs, sign_u)


def _merge_odd(
    g: Graph, u: int, v: int, composite: Combo, merged_inputs: Tuple[Ref, ...], sign_u: int,
    cycle: Optional[List[int]] = None,
) -> List[Tuple[Graph, int]]:
    pos_v = g.odd_position(v)
    if pos_v < g.odd_position(u):
        pos_v += 1
    sign = sign_u * (-1 if (pos_v - 1) % 2 else 1)
    order = [v] + [x for x in range(len(g.roles)) if x not in (u, v)]
    out = []
    for label, c in composite.items():
        new = _rebuild(g, order, {u: v}, {}, {v: label}, {v: merged_inputs}, cycle=cycle)
        out.append((new, sign * c))
    return out


def contract_cycle_edge(ctx: LabelContext, g: Graph, k: int) -> List[Tuple[Graph, int]]:
    """Collapse the cycle edge c_{k+1} -> c_k (cycles of length at least two)."""
    r = len(g.cycle)
    v = g.cycle[k]
    u = g.cycle[(k + 1) % r]
    star = ctx.table.arity(g.labels[v]) - 1
    composite = ctx.table.compose(g.labels[v], star, g.labels[u])
    sign_u = -1 if g.odd_position(u) % 2 else 1
    merged_inputs = g.inputs[v] + g.inputs[u]
    cycle = [c for c in g.cycle if c != u]
    return _merge_odd(g, u, v, composite, merged_inputs, sign_u, cycle=cycle)


def erase_loop(ctx: LabelContext, g: Graph) -> List[Tuple[Graph, int]]:
    """A one-vertex wheel becomes a cul-de-sac labelled by the trace."""
    c = g.cycle[0]
    sign = -1 if g.odd_position(c) % 2 else 1
    out = []
    order = list(range(len(g.roles)))
    for label, coeff in ctx.trace(g.labels[c], len(g.inputs[c])).items():
        new = _rebuild(g, order, {}, {c: SINK}, {c: label}, {}, shape="S", cycle=[])
        new.top = ("V", c)
        out.append((new, sign * coeff))
    return out


def relabel_leaves(g: Graph, sigma: Sequence[int]) -> Graph:
    """Leaf j becomes leaf sigma[j]; the orientation is unchanged."""

    def move(ref: Ref) -> Ref:
        return ("L", sigma[ref[1]]) if ref[0] == "L" else ref

    out = Graph(
        shape=g.shape,
        n=g.n,
        roles=list(g.roles),
        labels=list(g.labels),
        inputs=[tuple(move(x) for x in refs) for refs in g.inputs],
        cycle=list(g.cycle),
        top=move(g.top) if g.top is not None else None,
    )
    return out


def map_labels(g: Graph, image: Callable[[Hashable], Combo]) -> List[Tuple[Graph, int]]:
    """Push every odd vertex label through a morphism of the label operad."""
    factors = [image(label) if role != SINK else {label: 1} for role, label in zip(g.roles, g.labels)]
    out = []
    for labels, coeff in tensor_combos(factors).items():
        out.append((
            Graph(
                shape=g.shape,
                n=g.n,
                roles=list(g.roles),
                labels=list(labels),
                inputs=list(g.inputs),
                cycle=list(g.cycle),
                top=g.top,
            ),
            coeff,
        ))
    return out
