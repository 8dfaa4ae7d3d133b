# operads/base.py
"""
Operad Model Base Module

Defines the abstract interface every operad presentation implements. A model
knows its basis in each arity, its unit, partial compositions and the
relabelling action; the table layer (operads.table) adds truncation,
caching and the axiom checks on top.

Slot conventions:
    compose(a, i, b) plugs b into input i of a. Inputs of a before i keep
    their positions, b's inputs occupy i .. i+m-1, the rest shift by m-1.
    relabel(tag, sigma) sends old input j to new input sigma[j].
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Hashable, List, Optional, Sequence

from exactla.combos import Combo, Scalar

Tag = Hashable


class OperadModel(ABC):
    """Abstract base class for operad presentations."""

    name: str = "operad"

    @abstractmethod
    def basis(self, n: int) -> List[Tag]:
        """Basis tags of O(n), in a fixed deterministic order."""

    @property
    @abstractmethod
    def unit(self) -> Tag:
        """The identity operation in arity 1."""

    @abstractmethod
    def compose(self, a: Tag, i: int, b: Tag) -> Combo:
        """Partial composition a ∘_i b on basis tags."""

    @abstractmethod
    def relabel(self, tag: Tag, sigma: Sequence[int]) -> Combo:
        """Action of a permutation on a basis tag."""

    @abstractmethod
    def arity(self, tag: Tag) -> int:
        """Number of inputs of a basis tag."""

    def weight(self, tag: Tag) -> int:
        """Arity-based weight; arity-one models override it."""
        return self.arity(tag) - 1

    def degree(self, tag: Tag) -> int:
        return 0

    def augmentation(self, tag: Tag) -> Scalar:
        """ε: O → 𝟙 on basis tags."""
        return 1 if tag == self.unit else 0

    #: Largest arity with a nonzero component; None when unbounded.
    top_arity: Optional[int] = None

    @property
    def graded(self) -> bool:
        """False for models whose weights are all zero by declaration."""
        return True

    def descriptor(self) -> Dict[str, Any]:
        """JSON-able description used as the cache fingerprint."""
        return {"name": self.name}

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name!r})"
