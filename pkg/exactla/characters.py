# exactla/characters.py
"""
Characters of symmetric groups.

Irreducible characters come from the Murnaghan–Nakayama rule on beta-sets;
dimensions from the hook length formula. Tables are built once per n and
cached behind a lock.
"""
import threading
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Dict, Iterator, List, Sequence, Tuple

from core.exceptions import TruncationExceededError

Partition = Tuple[int, ...]

_TABLES: Dict[int, Dict[Partition, Dict[Partition, int]]] = {}
_TABLE_LOCK = threading.Lock()


def partitions(n: int, largest: int = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def cycle_type(perm: Sequence[int]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def centralizer_size(mu: Partition) -> int:
    """z_mu = prod_i i^{m_i} m_i!"""
    counts = Counter(mu)
    return prod(i**m * factorial(m) for i, m in counts.items())


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def irreducible_dimension(lam: Partition) -> int:
    """Hook length formula."""
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


@lru_cache(maxsize=None)
def _mn(beta: Tuple[int, ...], mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    members = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in members:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = tuple(sorted((members - {b}) | {target}, reverse=True))
        total += (-1) ** height * _mn(new_beta, rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """chi_lam evaluated on the class of cycle type mu (Murnaghan–Nakayama)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} partition different integers")
    k = len(lam)
    beta = tuple(part + (k - 1 - i) for i, part in enumerate(lam))
    return _mn(beta, tuple(sorted(mu, reverse=True)))


def character_table(n: int, max_n: int = 8) -> Dict[Partition, Dict[Partition, int]]:
    """
    Full character table of S_n, table[lam][mu].

    Raises:
        TruncationExceededError: n beyond the configured table bound
    """
    if n > max_n:
        raise TruncationExceededError(
            f"character tables are limited to n <= {max_n}", n=n
        )
    with _TABLE_LOCK:
        table = _TABLES.get(n)
        if table is None:
            classes = list(partitions(n))
            table = {lam: {mu: character(lam, mu) for mu in classes} for lam in classes}
            _TABLES[n] = table
    return table


def permutations_with_words(n: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Every permutation of n letters with a word in adjacent transpositions.

    Words are found breadth-first, so sigma = s_{w[0]} s_{w[1]} ... with the
    rightmost letter applied first.
    """
    identity = tuple(range(n))
    found = {identity: ()}
    frontier = [identity]
    while frontier:
        nxt = []
        for perm in frontier:
            for i in range(n - 1):
                # left multiplication by s_i swaps the images i and i+1
                image = tuple(i + 1 if x == i else i if x == i + 1 else x for x in perm)
                if image not in found:
                    found[image] = (i,) + found[perm]
                    nxt.append(image)
        frontier = nxt
    return sorted(found.items())
