# operads/models/prelie.py
"""
The pre-Lie operad of labelled rooted trees.

A basis tag is the parent tuple p of a rooted tree on the vertices
0..n-1: p[v] is the parent of v, and -1 marks the root. Composition
a ∘_i b replaces vertex i of a by the tree b and sums over all ways of
reattaching the children of i to vertices of b.
"""
from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple

from exactla.combos import Combo, add_term

from ..base import OperadModel

Parents = Tuple[int, ...]


def is_rooted_tree(parents: Parents) -> bool:
    n = len(parents)
    if sum(1 for p in parents if p == -1) != 1:
        return False
    for v in range(n):
        seen = set()
        while parents[v] != -1:
            if v in seen:
                return False
            seen.add(v)
            v = parents[v]
    return True


@lru_cache(maxsize=None)
def rooted_trees(n: int) -> Tuple[Parents, ...]:
    """All n^(n-1) labelled rooted trees on n vertices, sorted."""
    if n < 1:
        return ()
    found = []
    for root in range(n):
        others = [v for v in range(n) if v != root]
        for choice in product(range(n), repeat=len(others)):
            parents = [-1] * n
            ok = True
            for v, p in zip(others, choice):
                if p == v:
                    ok = False
                    break
                parents[v] = p
            if ok and is_rooted_tree(tuple(parents)):
                found.append(tuple(parents))
    return tuple(sorted(found))


class PreLieModel(OperadModel):
    name = "prelie"

    def basis(self, n: int) -> List[Parents]:
        return list(rooted_trees(n))

    @property
    def unit(self) -> Parents:
        return (-1,)

    def compose(self, a: Parents, i: int, b: Parents) -> Combo:
        n, m = len(a), len(b)

        def outer(v: int) -> int:
            return v if v < i else v + m - 1

        base = [0] * (n + m - 1)
        for v in range(n):
            if v == i:
                continue
            p = a[v]
            if p == -1:
                base[outer(v)] = -1
            elif p == i:
                base[outer(v)] = None  # reattached below
            else:
                base[outer(v)] = outer(p)
        for u in range(m):
            if b[u] == -1:
                base[i + u] = -1 if a[i] == -1 else outer(a[i])
            else:
                base[i + u] = i + b[u]
        children = [outer(v) for v in range(n) if a[v] == i]
        out: Combo = {}
        for targets in product(range(m), repeat=len(children)):
            parents = list(base)
            for child, target in zip(children, targets):
                parents[child] = i + target
            add_term(out, tuple(parents), 1)
        return out

    def relabel(self, tag: Parents, sigma: Sequence[int]) -> Combo:
        parents = [0] * len(tag)
        for v, p in enumerate(tag):
            parents[sigma[v]] = -1 if p == -1 else sigma[p]
        return {tuple(parents): 1}

    def arity(self, tag: Parents) -> int:
        return len(tag)
