# wheeledbar/coprop.py
"""
Bigraded homology of wheeled bar constructions and its coPROP completion.

The (q, p) component of the coPROP completion of a wheeled (co)operad U is

    (U_o^{⊗q} ⊗ S(U_w))(p)

with q roots (labelled, so no symmetrisation of the tree factors), p leaves
shared out by the Cauchy product, and the graded symmetric algebra on the
wheeled part: polynomial on even generators, exterior on odd ones.
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from core.config import Settings, get_settings
from core.exceptions import ChainComplexError, TruncationExceededError
from core.logging import get_logger
from exactla.complex import BlockKey, ChainComplex
from exactla.isotypic import IsotypicReport, isotypic_homology
from species.core import Truncation
from species.series import Dims, cauchy_dims, cauchy_power, exp_dims

from .assembly import WheeledBar, wheeled_bar_split
from .completion import WheeledOperadData

logger = get_logger(__name__)

CopropKey = Tuple[int, int, int, int]  # (q, p, w, d)


@dataclass
class BigradedHomology:
    """Homology dims per (n, w, d), split into the operadic and wheeled parts."""

    operad: str
    wheeling: str
    operadic: Dims = field(default_factory=dict)
    wheeled: Dims = field(default_factory=dict)
    untrusted: FrozenSet[BlockKey] = frozenset()
    isotypic: Dict[Tuple[str, int], List[IsotypicReport]] = field(default_factory=dict)
    euler: Dict[Tuple[str, int, int], int] = field(default_factory=dict)

    def part(self, name: str) -> Dims:
        return self.operadic if name == "operadic" else self.wheeled

    def check_euler(self, chains: Dict[str, ChainComplex]) -> None:
        """Euler characteristics of homology equal those of the chains."""
        for name, complex_ in chains.items():
            dims = self.part(name)
            for n, w in {(k[0], k[1]) for k in complex_.keys()}:
                if any(k[:2] == (n, w) for k in complex_.untrusted):
                    continue
                chi = complex_.euler_characteristic(n, w)
                hom = sum((-1) ** d * v for (kn, kw, d), v in dims.items() if (kn, kw) == (n, w))
                if chi != hom:
                    raise ChainComplexError(
                        "homology disagrees with the Euler characteristic",
                        part=name, block=(n, w),
                    )
                self.euler[(name, n, w)] = chi


def homology_of(
    bar: WheeledBar,
    settings: Optional[Settings] = None,
    isotypic: bool = False,
) -> BigradedHomology:
    """Homology of both parts of an assembled wheeled bar construction."""
    settings = settings or get_settings()
    chains = {"operadic": bar.operadic, "wheeled": bar.wheeled}
    result = BigradedHomology(operad=bar.data.name, wheeling=bar.data.wheeling.value)
    for name, complex_ in chains.items():
        complex_.check_equivariance()
        dims = complex_.homology_dims(parallelism=settings.parallelism)
        setattr(result, name, {k: v for k, v in dims.items() if v})
        if isotypic:
            for n in complex_.arities():
                if n >= 1:
                    result.isotypic[(name, n)] = isotypic_homology(complex_, n)
    result.untrusted = bar.operadic.untrusted | bar.wheeled.untrusted
    result.check_euler(chains)
    logger.info(
        "wheeled_bar_homology",
        operad=result.operad,
        wheeling=result.wheeling,
        operadic=len(result.operadic),
        wheeled=len(result.wheeled),
    )
    return result


def bigraded_homology(
    u: WheeledOperadData,
    t: Truncation,
    settings: Optional[Settings] = None,
    isotypic: bool = False,
) -> BigradedHomology:
    return homology_of(wheeled_bar_split(u, t, settings), settings, isotypic)


def graded_symmetric_dims(g: Dims, t: Truncation) -> Dims:
    """
    Free graded-commutative algebra on g.

    The reduced part (n ≥ 1) is handled by the exponential formula; the
    arity-zero generators give polynomial (even d) and exterior (odd d)
    factors, which must sit in positive weight or positive degree.
    """
    reduced = {k: v for k, v in g.items() if k[0] >= 1 and v}
    result = exp_dims(reduced, t)
    for (n, w, d), count in sorted(g.items()):
        if n != 0 or not count:
            continue
        if w == 0 and d == 0:
            raise TruncationExceededError(
                "a generator in weight 0 and degree 0 has unbounded symmetric powers"
            )
        for _ in range(count):
            factor: Dims = {(0, 0, 0): 1}
            if d % 2:
                factor[(0, w, d)] = 1
            else:
                k = 1
                while t.admits(0, k * w, k * d):
                    factor[(0, k * w, k * d)] = 1
                    k += 1
            result = cauchy_dims(result, factor, t)
    return result


def coprop_completion(
    h: BigradedHomology, p: int, q: int, t: Truncation
) -> Dict[CopropKey, int]:
    """Dims of the (q, p) coPROP component per (w, d)."""
    if p > t.max_arity:
        raise TruncationExceededError(f"p = {p} exceeds max_arity {t.max_arity}", p=p)
    return _completion(h.operadic, h.wheeled, p, q, t)


def coprop_chain_dims(bar: WheeledBar, p: int, q: int, t: Truncation) -> Dict[CopropKey, int]:
    """The same completion applied to chain-level block dims."""
    return _completion(dict(bar.operadic.blocks), dict(bar.wheeled.blocks), p, q, t)


def _completion(operadic: Dims, wheeled: Dims, p: int, q: int, t: Truncation) -> Dict[CopropKey, int]:
    power = cauchy_power({k: v for k, v in operadic.items() if v}, q, t)
    total = cauchy_dims(power, graded_symmetric_dims(wheeled, t), t)
    return {(q, p, w, d): v for (n, w, d), v in sorted(total.items()) if n == p and v}
