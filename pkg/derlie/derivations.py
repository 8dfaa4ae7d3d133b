# derlie/derivations.py
"""
Derivations of free algebras and their divergence.

A derivation D of O(V) is determined by the images D(x_i) ∈ O(V); it acts
on a monomial by the Leibniz rule, one input at a time. The pre-Lie
product is (D ◁ D′)(x_i) = D(D′(x_i)) and [D, D′] = D ◁ D′ − D′ ◁ D.

The universal derivation sends a monomial to Σ_i (∂f/∂x_i) ⊗ dx_i with
∂f/∂x_i ∈ ∂(O)(V): the input holding x_i becomes the marked input ⋆. The
divergence of D is Σ_i ∂(D(x_i))/∂x_i taken in the commutator quotient
|∂(Ō)|(V).
"""
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import ChainComplexError, TruncationExceededError
from core.logging import get_logger
from exactla.combos import Combo, Scalar, add_into, add_term, scaled
from exactla.rank import Subspace, nullspace
from exactla.sparse import SparseMatrix
from operads.bimodule import DerivativeAlgebra, QuotientAlgebra, commutator_quotient
from species.core import Truncation

from .free_algebra import Evaluation, FreeAlgebra, Monomial, torus_weight

logger = get_logger(__name__)

Torus = Tuple[int, ...]


@dataclass
class DerivationVector:
    """A derivation given by the images of the generators."""

    images: Dict[int, Combo] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.images = {i: dict(x) for i, x in self.images.items() if x}

    def is_zero(self) -> bool:
        return not self.images

    def image(self, i: int) -> Combo:
        return self.images.get(i, {})

    def __add__(self, other: "DerivationVector") -> "DerivationVector":
        out = {i: dict(x) for i, x in self.images.items()}
        for i, x in other.images.items():
            add_into(out.setdefault(i, {}), x)
        return DerivationVector(out)

    def __sub__(self, other: "DerivationVector") -> "DerivationVector":
        return self + other.scale(-1)

    def scale(self, factor: Scalar) -> "DerivationVector":
        return DerivationVector({i: scaled(x, factor) for i, x in self.images.items()})

    def weight_pieces(self, free: FreeAlgebra) -> Dict[int, "DerivationVector"]:
        """Weight-homogeneous components."""
        pieces: Dict[int, Dict[int, Combo]] = {}
        for i, x in self.images.items():
            for monomial, c in x.items():
                w = free.weight(monomial)
                add_term(pieces.setdefault(w, {}).setdefault(i, {}), monomial, c)
        return {w: DerivationVector(images) for w, images in sorted(pieces.items())}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DerivationVector):
            return NotImplemented
        return self.images == other.images


def apply_derivation(free: FreeAlgebra, d: DerivationVector, f: Combo) -> Combo:
    """D(f) by the Leibniz rule over the inputs of each monomial."""
    out: Combo = {}
    for (tag, word), c in f.items():
        for slot, letter in enumerate(word):
            for inner, ci in d.image(letter).items():
                add_into(out, free.substitute((tag, word), slot, inner), c * ci)
    return out


def prelie_product(free: FreeAlgebra, d1: DerivationVector, d2: DerivationVector) -> DerivationVector:
    return DerivationVector({i: apply_derivation(free, d1, x) for i, x in d2.images.items()})


def bracket(free: FreeAlgebra, d1: DerivationVector, d2: DerivationVector) -> DerivationVector:
    return prelie_product(free, d1, d2) - prelie_product(free, d2, d1)


# ---------- ∂(O)(V) and |∂(Ō)|(V) ---------------------------------------------


class Envelope:
    """∂(O)(V) = U_O(O(V)): monomials (tag in O(k+1), word of length k)."""

    def __init__(self, free: FreeAlgebra):
        self.free = free
        self.table = free.table
        self.evaluation = Evaluation(DerivativeAlgebra(free.table), free.dim_v, name="U(V)")

    def project(self, tag, word: Sequence[int]) -> Combo:
        return self.evaluation.project(tag, word)

    def act(self, d: DerivationVector, x: Combo) -> Combo:
        """D acting on the unmarked inputs."""
        out: Combo = {}
        for (tag, word), c in x.items():
            for slot, letter in enumerate(word):
                for (inner_tag, inner_word), ci in d.image(letter).items():
                    new_word = word[:slot] + inner_word + word[slot + 1:]
                    for y, cy in self.table.compose(tag, slot, inner_tag).items():
                        add_into(out, self.project(y, new_word), c * ci * cy)
        return out


def universal_derivation(
    free: FreeAlgebra, f: Combo, envelope: Optional[Envelope] = None
) -> Dict[int, Combo]:
    """Σ_i (∂f/∂x_i) dx_i, keyed by the generator i."""
    envelope = envelope or Envelope(free)
    out: Dict[int, Combo] = {}
    for (tag, word), c in f.items():
        k = len(word)
        for slot, letter in enumerate(word):
            sigma = tuple(k - 1 if j == slot else j if j < slot else j - 1 for j in range(k))
            rest = word[:slot] + word[slot + 1:]
            for y, cy in free.table.relabel(tag, sigma).items():
                add_into(out.setdefault(letter, {}), envelope.project(y, rest), c * cy)
    return {i: x for i, x in out.items() if x}


class TraceSpace:
    """|∂(Ō)|(V): the reduced commutator quotient evaluated on V."""

    def __init__(self, free: FreeAlgebra):
        self.free = free
        self.table = free.table
        parent = DerivativeAlgebra(free.table, reduced=True)
        top = max(0, min(free.top_arity - 1, parent.max_arity))
        bound = Truncation(max_arity=max(top, 1), max_weight=max(free.max_weight, 1))
        self.quotient: QuotientAlgebra = commutator_quotient(parent, bound)
        self.top = top
        self.evaluation = Evaluation(self.quotient, free.dim_v, name="|U(V)|")
        self._ideal = {k: set(parent.basis(k)) for k in range(top + 1)}

    def project(self, tag, word: Sequence[int]) -> Combo:
        """Class of an envelope monomial; its tag must lie in the ideal."""
        k = len(word)
        if k > self.top:
            raise TruncationExceededError(f"|d(O)|({k}) is beyond the truncation", arity=k)
        if tag not in self._ideal[k]:
            raise ValueError(f"{tag!r} is not in the augmentation ideal")
        out: Combo = {}
        for rep, c in self.quotient.project(k, {tag: 1}).items():
            add_into(out, self.evaluation.project(rep, word), c)
        return out

    def project_combo(self, x: Combo) -> Combo:
        out: Combo = {}
        for (tag, word), c in x.items():
            add_into(out, self.project(tag, word), c)
        return out

    def basis(self, w: int) -> List[Monomial]:
        out = []
        for k in range(self.top + 1):
            out.extend(m for m in self.evaluation.basis(k) if self.table.weight(m[0]) == w)
        return out

    def weight(self, monomial: Monomial) -> int:
        return self.table.weight(monomial[0])

    def act(self, d: DerivationVector, x: Combo) -> Combo:
        """The induced action D_* on representatives."""
        out: Combo = {}
        for (tag, word), c in x.items():
            for slot, letter in enumerate(word):
                for (inner_tag, inner_word), ci in d.image(letter).items():
                    new_word = word[:slot] + inner_word + word[slot + 1:]
                    for y, cy in self.table.compose(tag, slot, inner_tag).items():
                        add_into(out, self.project(y, new_word), c * ci * cy)
        return out


def divergence(
    free: FreeAlgebra,
    d: DerivationVector,
    trace: Optional[TraceSpace] = None,
    envelope: Optional[Envelope] = None,
) -> Combo:
    """Σ_i ∂(D(x_i))/∂x_i in |∂(Ō)|(V)."""
    trace = trace or TraceSpace(free)
    envelope = envelope or Envelope(free)
    out: Combo = {}
    for i, x in d.images.items():
        partial = universal_derivation(free, x, envelope).get(i, {})
        add_into(out, trace.project_combo(partial))
    return out


def induced_action(trace: TraceSpace, d: DerivationVector, x: Combo) -> Combo:
    return trace.act(d, x)


# ---------- Der⁺, SDer⁺ and the trace module ----------------------------------


class DerPlus:
    """
    Der⁺(O(V)) = Hom(V, Ō(V)) on the basis x_i ↦ monomial.

    Basis elements are numbered globally, lightest weight first. The
    bracket is cached per pair of basis indices.
    """

    kind = "der+"

    def __init__(self, free: FreeAlgebra):
        self.free = free
        self.dim_v = free.dim_v
        self.labels: List[Tuple[int, Monomial]] = []
        self.by_weight: Dict[int, List[int]] = {}
        for w in range(free.max_weight + 1):
            for monomial in free.basis(w, reduced=True):
                for i in range(self.dim_v):
                    self.by_weight.setdefault(w, []).append(len(self.labels))
                    self.labels.append((i, monomial))
        self.index = {label: j for j, label in enumerate(self.labels)}
        self.position = {j: k for members in self.by_weight.values() for k, j in enumerate(members)}
        self._weights = [free.weight(m) for _, m in self.labels]
        self._brackets: Dict[Tuple[int, int], Combo] = {}
        self._lock = threading.Lock()
        self.trace = TraceSpace(free)
        self.envelope = Envelope(free)
        logger.info(
            "derivation_algebra_built",
            algebra=self.kind,
            operad=free.table.name,
            dim_v=self.dim_v,
            dims={w: len(v) for w, v in self.by_weight.items()},
        )

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def name(self) -> str:
        return f"Der+({self.free.name})"

    def weight(self, j: int) -> int:
        return self._weights[j]

    def torus(self, j: int) -> Torus:
        i, monomial = self.labels[j]
        t = list(torus_weight(monomial[1], self.dim_v))
        t[i] -= 1
        return tuple(t)

    def vector(self, j: int) -> DerivationVector:
        i, monomial = self.labels[j]
        return DerivationVector({i: {monomial: 1}})

    def combo_vector(self, x: Combo) -> DerivationVector:
        out = DerivationVector()
        for j, c in x.items():
            out = out + self.vector(j).scale(c)
        return out

    def coordinates(self, d: DerivationVector) -> Combo:
        out: Combo = {}
        for i, x in d.images.items():
            for monomial, c in x.items():
                j = self.index.get((i, monomial))
                if j is None:
                    raise ValueError(f"{monomial!r} is not in the positive part")
                add_term(out, j, c)
        return out

    def bracket(self, a: int, b: int) -> Combo:
        if a == b:
            return {}
        if a > b:
            return scaled(self.bracket(b, a), -1)
        with self._lock:
            found = self._brackets.get((a, b))
        if found is None:
            found = self.coordinates(bracket(self.free, self.vector(a), self.vector(b)))
            with self._lock:
                self._brackets[(a, b)] = found
        return dict(found)

    def gl(self, a: int, b: int, j: int) -> Combo:
        """E_ab on x_i* ⊗ m: −δ_ia x_b* ⊗ m + x_i* ⊗ E_ab m."""
        i, monomial = self.labels[j]
        out: Combo = {}
        if i == a:
            add_term(out, self.index[(b, monomial)], -1)
        for image, c in self.free.evaluation.gl_act(a, b, monomial).items():
            add_term(out, self.index[(i, image)], c)
        return out

    def divergence_matrix(self, w: int) -> SparseMatrix:
        """Columns: weight-w basis of Der⁺; rows: weight-w basis of |∂(Ō)|(V)."""
        rows = {m: r for r, m in enumerate(self.trace.basis(w))}
        columns = []
        for j in self.by_weight.get(w, []):
            div = divergence(self.free, self.vector(j), self.trace, self.envelope)
            columns.append({rows[m]: c for m, c in div.items()})
        return SparseMatrix.from_columns(len(rows), columns)


def derivation_weight_blocks(der: DerPlus) -> Dict[int, int]:
    return {w: len(v) for w, v in sorted(der.by_weight.items())}


class SDerPlus:
    """
    SDer⁺(O(V)): the kernel of the divergence, weight by weight.

    Kernel vectors are homogeneous for the torus since the divergence is
    gl(V)-equivariant.
    """

    kind = "sder+"

    def __init__(self, der: DerPlus):
        self.der = der
        self.free = der.free
        self.dim_v = der.dim_v
        self.kernels: Dict[int, Subspace] = {}
        self.labels: List[Tuple[int, int]] = []
        self.by_weight: Dict[int, List[int]] = {}
        for w, members in sorted(der.by_weight.items()):
            kernel = nullspace(der.divergence_matrix(w))
            self.kernels[w] = kernel
            for k in range(kernel.dim):
                self.by_weight.setdefault(w, []).append(len(self.labels))
                self.labels.append((w, k))
        self.index = {label: j for j, label in enumerate(self.labels)}
        self._brackets: Dict[Tuple[int, int], Combo] = {}
        self._lock = threading.Lock()
        logger.info(
            "derivation_algebra_built",
            algebra=self.kind,
            operad=self.free.table.name,
            dim_v=self.dim_v,
            dims={w: len(v) for w, v in self.by_weight.items()},
        )

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def name(self) -> str:
        return f"SDer+({self.free.name})"

    def weight(self, j: int) -> int:
        return self.labels[j][0]

    def ambient(self, j: int) -> Combo:
        """The basis vector as a combination of Der⁺ basis indices."""
        w, k = self.labels[j]
        members = self.der.by_weight[w]
        return {members[local]: c for local, c in self.kernels[w].vectors[k].items()}

    def torus(self, j: int) -> Torus:
        return self.der.torus(next(iter(self.ambient(j))))

    def vector(self, j: int) -> DerivationVector:
        return self.der.combo_vector(self.ambient(j))

    def coordinates_of(self, x: Combo) -> Combo:
        """Coordinates of a Der⁺ combination lying in SDer⁺."""
        by_w: Dict[int, Dict[int, Scalar]] = {}
        for j, c in x.items():
            w = self.der.weight(j)
            by_w.setdefault(w, {})[self.der.position[j]] = c
        out: Combo = {}
        for w, vector in by_w.items():
            kernel = self.kernels.get(w)
            if kernel is None or not kernel.contains(vector):
                raise ChainComplexError(
                    "a bracket or action leaves the divergence-free part", weight=w
                )
            for k, c in kernel.coordinates(vector).items():
                add_term(out, self.index[(w, k)], c)
        return out

    def bracket(self, a: int, b: int) -> Combo:
        if a == b:
            return {}
        if a > b:
            return scaled(self.bracket(b, a), -1)
        with self._lock:
            found = self._brackets.get((a, b))
        if found is None:
            ambient: Combo = {}
            for x, cx in self.ambient(a).items():
                for y, cy in self.ambient(b).items():
                    add_into(ambient, self.der.bracket(x, y), cx * cy)
            found = self.coordinates_of(ambient)
            with self._lock:
                self._brackets[(a, b)] = found
        return dict(found)

    def gl(self, a: int, b: int, j: int) -> Combo:
        ambient: Combo = {}
        for x, c in self.ambient(j).items():
            add_into(ambient, self.der.gl(a, b, x), c)
        return self.coordinates_of(ambient)


def sder_basis(free: FreeAlgebra, w: int) -> List[DerivationVector]:
    """Basis of the weight-w block of SDer⁺."""
    sder = SDerPlus(DerPlus(free))
    return [sder.vector(j) for j in sder.by_weight.get(w, [])]


class TraceModule:
    """|∂(Ō)|(V) as a Der⁺-module, with the divergence as its cocycle."""

    def __init__(self, der: DerPlus):
        self.der = der
        self.trace = der.trace
        self.dim_v = der.dim_v
        self.labels: List[Monomial] = []
        self.by_weight: Dict[int, List[int]] = {}
        for w in range(der.free.max_weight + 1):
            for m in self.trace.basis(w):
                self.by_weight.setdefault(w, []).append(len(self.labels))
                self.labels.append(m)
        if self.by_weight.get(0):
            raise TruncationExceededError(
                "the trace module has weight-zero elements, so its symmetric powers are unbounded"
            )
        self.index = {m: j for j, m in enumerate(self.labels)}
        self._phi: Dict[int, Combo] = {}
        self._actions: Dict[Tuple[int, int], Combo] = {}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def weight(self, j: int) -> int:
        return self.trace.weight(self.labels[j])

    def torus(self, j: int) -> Torus:
        return torus_weight(self.labels[j][1], self.dim_v)

    def _indices(self, x: Combo) -> Combo:
        return {self.index[m]: c for m, c in x.items()}

    def phi(self, g: int) -> Combo:
        """Divergence of a Der⁺ basis element."""
        if g not in self._phi:
            div = divergence(self.der.free, self.der.vector(g), self.trace, self.der.envelope)
            self._phi[g] = self._indices(div)
        return self._phi[g]

    def action(self, g: int, j: int) -> Combo:
        if (g, j) not in self._actions:
            image = self.trace.act(self.der.vector(g), {self.labels[j]: 1})
            self._actions[(g, j)] = self._indices(image)
        return self._actions[(g, j)]

    def gl(self, a: int, b: int, j: int) -> Combo:
        return self._indices(self.trace.evaluation.gl_act(a, b, self.labels[j]))


def check_cocycle(der: DerPlus, d1: DerivationVector, d2: DerivationVector) -> bool:
    """Div([D, D′]) = D_*(Div D′) − D′_*(Div D)."""
    free, trace, env = der.free, der.trace, der.envelope
    left = divergence(free, bracket(free, d1, d2), trace, env)
    right: Combo = {}
    add_into(right, trace.act(d1, divergence(free, d2, trace, env)))
    add_into(right, trace.act(d2, divergence(free, d1, trace, env)), -1)
    return left == right
