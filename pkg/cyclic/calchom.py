# cyclic/calchom.py
"""
Wheel homology against cyclic homology of the indecomposables.

When ∂(O) is free as a right O-module, the wheeled part of B^↻(O) (trivial
wheeling) has the homology of s^{-1}Cyc applied to ∂(Ō)₀, shifted up by
one degree, and the operadic part is B(O) itself.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from core.config import Settings, get_settings
from core.logging import get_logger
from exactla.complex import BlockKey
from operads.bimodule import indecomposables_zero
from operads.table import OperadTable
from species.core import Truncation
from wheeledbar.assembly import bar, trivial_wheeled_bar
from wheeledbar.coprop import homology_of

from .complex import cyclic_homology

logger = get_logger(__name__)


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass
class BlockComparison:
    part: str
    block: BlockKey
    left: int
    right: int
    trusted: bool

    @property
    def match(self) -> bool:
        return self.left == self.right


@dataclass
class CalchomResult:
    operad: str
    status: CheckStatus
    reason: str = ""
    free: bool = True
    rows: List[BlockComparison] = field(default_factory=list)

    def mismatches(self) -> List[BlockComparison]:
        return [r for r in self.rows if r.trusted and not r.match]


def _rows(part: str, left: Dict, right: Dict, untrusted) -> List[BlockComparison]:
    rows = []
    for block in sorted(set(left) | set(right)):
        rows.append(BlockComparison(
            part, block, left.get(block, 0), right.get(block, 0), block not in untrusted
        ))
    return rows


def calchom_check(
    o: OperadTable, t: Truncation, settings: Optional[Settings] = None
) -> CalchomResult:
    """
    Compare H(B^↻(O)_o) with H(B(O)) and H(B^↻(O)_w) with HC_{•-1}(∂(Ō)₀).

    The check is skipped, with its reason, when the freeness witness fails
    inside the truncation.
    """
    settings = settings or get_settings()
    ind = indecomposables_zero(o, t)
    if not ind.free:
        logger.warning("calchom_skipped", operad=o.name, dims=ind.dims, expected=ind.expected)
        return CalchomResult(
            o.name, CheckStatus.SKIPPED, reason="d(O) is not free over O inside the truncation",
            free=False,
        )
    wheeled = homology_of(trivial_wheeled_bar(o, t, settings), settings)
    plain = bar(o, t, settings)
    plain_dims = {k: v for k, v in plain.homology_dims(parallelism=settings.parallelism).items() if v}
    hc = cyclic_homology(ind.reduced, t, settings)
    shifted = {k: v for k, v in hc.shifted().items() if k[2] <= t.max_degree}
    untrusted = set(wheeled.untrusted) | set(plain.untrusted)
    untrusted |= {(n, w, d + 1) for n, w, d in hc.untrusted}
    rows = _rows("operadic", wheeled.operadic, plain_dims, untrusted)
    rows += _rows("wheeled", wheeled.wheeled, shifted, untrusted)
    result = CalchomResult(o.name, CheckStatus.PASS, rows=rows)
    if result.mismatches():
        result.status = CheckStatus.FAIL
    logger.info("calchom_checked", operad=o.name, status=result.status.value, blocks=len(rows))
    return result
