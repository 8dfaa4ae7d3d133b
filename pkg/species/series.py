# species/series.py
"""
Dimension series of graded species.

A series maps (n, w, d) to the dimension of that block. Products are the
exponential-generating-function operations, so they are only valid where
the relevant symmetric group acts freely on the basis (reduced inner
factors); every product truncates to the given bounds.
"""
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Tuple

from .core import Species, Truncation

Dims = Dict[Tuple[int, int, int], int]


def dims_of(s: Species) -> Dims:
    return s.graded_dims()


def truncate(f: Dims, t: Truncation) -> Dims:
    return {k: v for k, v in f.items() if v and t.admits(*k)}


def add(f: Dims, g: Dims) -> Dims:
    out = dict(f)
    for k, v in g.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def shift(f: Dims, dw: int = 0, dd: int = 0) -> Dims:
    return {(n, w + dw, d + dd): v for (n, w, d), v in f.items()}


def cauchy_dims(f: Dims, g: Dims, t: Truncation) -> Dims:
    """dim (F ⊗ G)(n) = sum_k C(n, k) dim F(k) dim G(n-k), gradings adding."""
    out: Dims = {}
    for (n1, w1, d1), a in f.items():
        for (n2, w2, d2), b in g.items():
            key = (n1 + n2, w1 + w2, d1 + d2)
            if not t.admits(*key):
                continue
            out[key] = out.get(key, 0) + comb(n1 + n2, n1) * a * b
    return {k: v for k, v in out.items() if v}


def cauchy_power(g: Dims, k: int, t: Truncation) -> Dims:
    result: Dims = {(0, 0, 0): 1}
    for _ in range(k):
        result = cauchy_dims(result, g, t)
    return result


def compose_dims(f: Dims, g: Dims, t: Truncation) -> Dims:
    """
    dim (F ∘ G) = sum_k dim F(k) * dim G^{⊗k} / k!.

    G must vanish in arity 0 so that S_k permutes the blocks freely.
    """
    if any(n == 0 and v for (n, _, _), v in g.items()):
        raise ValueError("inner series must vanish in arity 0")
    out: Dict[Tuple[int, int, int], Fraction] = {}
    top = max((k for k, _, _ in f), default=0)
    powers = {0: {(0, 0, 0): 1}}
    for k in range(1, min(top, t.max_arity) + 1):
        powers[k] = cauchy_dims(powers[k - 1], g, t)
    for (k, wf, df), a in f.items():
        if k not in powers:
            continue
        for (n, w, d), b in powers[k].items():
            key = (n, w + wf, d + df)
            if not t.admits(*key):
                continue
            out[key] = out.get(key, Fraction(0)) + Fraction(a * b, factorial(k))
    return _integral(out)


def tree_dims(labels: Dims, t: Truncation) -> Dims:
    """
    Rooted trees with vertices decorated by `labels`: T = X + labels ∘ T.

    `labels` must vanish in arities 0 and 1 unless its arity-one part has
    positive weight or degree, otherwise the fixed point does not exist.
    """
    x: Dims = {(1, 0, 0): 1}
    current = dict(x)
    for _ in range(t.max_arity + t.max_weight + t.max_degree + 1):
        nxt = add(x, compose_dims(labels, current, t))
        nxt = truncate(nxt, t)
        if nxt == current:
            break
        current = nxt
    return current


def cyc_dims(g: Dims, t: Truncation) -> Dims:
    """Cyclic words in a reduced series: sum_m dim G^{⊗m} / m."""
    if any(n == 0 and v for (n, _, _), v in g.items()):
        raise ValueError("cyclic words need a series vanishing in arity 0")
    out: Dict[Tuple[int, int, int], Fraction] = {}
    power: Dims = {(0, 0, 0): 1}
    for m in range(1, t.max_arity + 1):
        power = cauchy_dims(power, g, t)
        for key, v in power.items():
            out[key] = out.get(key, Fraction(0)) + Fraction(v, m)
    return _integral(out)


def exp_dims(g: Dims, t: Truncation) -> Dims:
    """Free symmetric algebra on a reduced series: sum_k dim G^{⊗k} / k!."""
    return compose_dims({(k, 0, 0): 1 for k in range(t.max_arity + 1)}, g, t)


def free_trees(labels: Species, t: Truncation) -> Dims:
    """Dimension series of rooted trees decorated by a species."""
    return tree_dims(dims_of(labels), t)


def _integral(values: Dict[Tuple[int, int, int], Fraction]) -> Dims:
    out: Dims = {}
    for key, v in values.items():
        if v.denominator != 1:
            raise ValueError(f"non-integral dimension {v} at {key}")
        if v:
            out[key] = int(v)
    return out
