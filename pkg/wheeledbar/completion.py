# wheeledbar/completion.py
"""
Wheeled operad data: an operad together with a wheeled part and a trace.

Two wheelings are supported: the trivial one (no wheeled part, zero trace)
and the wheeled completion O^↻ whose wheeled part is the commutator quotient
|∂(Ō)| with the canonical projection as trace.
"""
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Hashable, Optional

from core.exceptions import TraceAxiomError
from core.logging import get_logger
from exactla.combos import Combo, add_into
from operads.bimodule import QuotientAlgebra, decompositions, wheeled_part
from operads.table import OperadTable
from species.core import Truncation

logger = get_logger(__name__)


class Wheeling(str, Enum):
    """How the wheeled part of a wheeled operad is chosen."""

    TRIVIAL = "trivial"
    COMPLETION = "completion"


@dataclass
class WheeledOperadData:
    """Operadic part, wheeled part (None for the trivial wheeling) and trace."""

    operadic: OperadTable
    wheeled: Optional[QuotientAlgebra]
    wheeling: Wheeling

    @property
    def name(self) -> str:
        return self.operadic.name

    def trace(self, tag: Hashable) -> Combo:
        """Trace of a basis element of ∂(Ō) into the wheeled part."""
        if self.wheeled is None:
            return {}
        return self.wheeled.project(self.operadic.arity(tag) - 1, {tag: 1})

    def act(self, x: Combo, slot: int, inner: Hashable) -> Combo:
        """Right action of Ō on the wheeled part, on representatives."""
        out: Combo = {}
        j = None
        for rep, c in x.items():
            add_into(out, self.operadic.compose(rep, slot, inner), c)
            j = self.operadic.arity(rep) + self.operadic.arity(inner) - 2
        if j is None:
            return {}
        return self.wheeled.project(j, out)

    def check_trace_axioms(self, upto: Optional[int] = None) -> None:
        """
        The trace kills μ-commutators and intertwines the right actions.

        Raises:
            TraceAxiomError: with the offending basis elements
        """
        if self.wheeled is None:
            return
        algebra = self.wheeled.parent
        top = min(upto or self.wheeled.max_arity, self.wheeled.max_arity)
        for j in range(top + 1):
            for left, right in decompositions(j):
                for a, b in product(algebra.basis(len(left)), algebra.basis(len(right))):
                    rel = dict(algebra.mu_at(a, b, left, right))
                    add_into(rel, algebra.mu_at(b, a, right, left), -1)
                    if self.wheeled.project(j, rel):
                        raise TraceAxiomError(
                            "trace does not vanish on a commutator",
                            operad=self.name, pair=(a, b),
                        )
        table = self.operadic
        for j in range(1, top + 1):
            for m in range(1, top - j + 2):
                if m > table.max_arity:
                    continue
                for s, x in product(algebra.basis(j), table.ideal_basis(m)):
                    for slot in range(j):
                        lhs = self.wheeled.project(j + m - 1, table.compose(s, slot, x))
                        rhs = self.act(self.trace(s), slot, x)
                        if lhs != rhs:
                            raise TraceAxiomError(
                                "trace is not a right-module map",
                                operad=self.name, pair=(s, x), slot=slot,
                            )
        logger.debug("trace_axioms_checked", operad=self.name, upto=top)


def trivial_wheeling(o: OperadTable) -> WheeledOperadData:
    return WheeledOperadData(o, None, Wheeling.TRIVIAL)


def wheeled_completion(o: OperadTable, t: Truncation, check: bool = True) -> WheeledOperadData:
    """O^↻: wheeled part |∂(Ō)| and the canonical projection as trace."""
    quotient = wheeled_part(o, t, reduced=True)
    data = WheeledOperadData(o, quotient, Wheeling.COMPLETION)
    if check:
        data.check_trace_axioms()
    logger.info("wheeled_completion", operad=o.name, dims=quotient.dims())
    return data


def wheeled_operad(o: OperadTable, wheeling: Wheeling, t: Truncation) -> WheeledOperadData:
    if Wheeling(wheeling) is Wheeling.TRIVIAL:
        return trivial_wheeling(o)
    return wheeled_completion(o, t)


def full_wheeled_part(o: OperadTable, t: Truncation) -> QuotientAlgebra:
    """|∂(O)|, including the unit contributions."""
    return wheeled_part(o, t, reduced=False)
