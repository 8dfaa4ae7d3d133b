# exactla/combos.py
"""
Sparse linear combinations.

A combination is a plain dict mapping hashable basis tags to nonzero
rational coefficients (int or Fraction). Helpers here never mutate their
inputs unless the name says so.
"""
from fractions import Fraction
from typing import Any, Dict, Hashable, Iterable, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
Combo = Dict[Hashable, Scalar]


def normalize_scalar(value: Scalar) -> Scalar:
    """Collapse integral Fractions back to int."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def add_into(acc: Combo, combo: Combo, scale: Scalar = 1) -> Combo:
    """acc += scale * combo (in place); zero entries are dropped."""
    if not scale:
        return acc
    for key, value in combo.items():
        new = acc.get(key, 0) + scale * value
        if new:
            acc[key] = normalize_scalar(new)
        else:
            acc.pop(key, None)
    return acc


def add_term(acc: Combo, key: Hashable, value: Scalar) -> Combo:
    """acc[key] += value (in place)."""
    if not value:
        return acc
    new = acc.get(key, 0) + value
    if new:
        acc[key] = normalize_scalar(new)
    else:
        acc.pop(key, None)
    return acc


def scaled(combo: Combo, scale: Scalar) -> Combo:
    if not scale:
        return {}
    return {k: normalize_scalar(v * scale) for k, v in combo.items()}


def linear_sum(terms: Iterable[Tuple[Scalar, Combo]]) -> Combo:
    acc: Combo = {}
    for scale, combo in terms:
        add_into(acc, combo, scale)
    return acc


def tensor_combos(factors: Sequence[Combo]) -> Dict[Tuple[Any, ...], Scalar]:
    """Expand a product of combinations into tuples of keys."""
    result: Dict[Tuple[Any, ...], Scalar] = {(): 1}
    for factor in factors:
        nxt: Dict[Tuple[Any, ...], Scalar] = {}
        for keys, coeff in result.items():
            for key, value in factor.items():
                add_term(nxt, keys + (key,), coeff * value)
        result = nxt
        if not result:
            break
    return result


def inversions(seq: Sequence[Any]) -> int:
    """Number of pairs i < j with seq[i] > seq[j]."""
    count = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                count += 1
    return count


def perm_sign(seq: Sequence[Any]) -> int:
    return -1 if inversions(seq) % 2 else 1


def invert_perm(perm: Sequence[int]) -> Tuple[int, ...]:
    inverse = [0] * len(perm)
    for i, image in enumerate(perm):
        inverse[image] = i
    return tuple(inverse)


def sorting_perm(keys: Sequence[Any]) -> Tuple[int, ...]:
    """
    sigma with sigma[j] = position of keys[j] after a stable sort.

    Used as a relabelling map: old slot j goes to new slot sigma[j].
    """
    order = sorted(range(len(keys)), key=lambda j: keys[j])
    return invert_perm(order)
