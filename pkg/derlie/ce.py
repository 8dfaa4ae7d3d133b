# derlie/ce.py
"""
Chevalley–Eilenberg complexes of derivation Lie algebras.

Chains are S(s g) ⊗ Hom(V^{⊗p}, V^{⊗q}). A basis element is a triple
(wedge, sym, (A, B)):

    wedge   sorted indices of Lie algebra basis elements (odd after s)
    sym     sorted multiset of trace-module indices (semidirect case only,
            even after s since s^{-1}M sits in degree -1)
    A, B    the V* factors (p of them) and the V factors (q of them)

The coefficients carry the trivial action, so the differential only uses
the bracket and, for the semidirect algebra g ⋉ s^{-1}M, the divergence
and the action of g on M:

    d(g_1..g_d) = Σ_{i<j} (-1)^{i+j} [g_i, g_j] g_1..ĝ_i..ĝ_j..g_d
                + Σ_i (-1)^i Div(g_i) · (rest)
                - Σ_i Σ_l (-1)^i (g_i · m_l) · (rest without m_l)

Blocks are keyed (p, w, d) with w the total weight and d the number of
Lie algebra factors.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from core.config import Settings, get_settings
from core.exceptions import ConfigurationError
from core.logging import get_logger
from exactla.combos import Combo, add_term, perm_sign
from exactla.complex import BlockKey, ChainComplex, below
from exactla.isotypic import isotypic_homology
from exactla.rank import rank
from exactla.sparse import SparseMatrix
from operads.table import OperadTable
from species.core import Truncation

from .derivations import DerPlus, SDerPlus, TraceModule
from .free_algebra import FreeAlgebra
from .invariants import gl_invariants

logger = get_logger(__name__)

Coefficient = Tuple[Tuple[int, ...], Tuple[int, ...]]
Element = Tuple[Tuple[int, ...], Tuple[int, ...], Coefficient]


class CEAlgebra(str, Enum):
    DER_PLUS = "der+"
    SDER_PLUS = "sder+"
    SEMIDIRECT = "semidirect"


class DerivationSetup:
    """The free algebra with its Der⁺, SDer⁺ and trace module, built lazily."""

    def __init__(self, o: OperadTable, dim_v: int, max_weight: int):
        self.operad = o
        self.dim_v = dim_v
        self.max_weight = max_weight
        self.free = FreeAlgebra(o, dim_v, max_weight)

    @cached_property
    def der(self) -> DerPlus:
        return DerPlus(self.free)

    @cached_property
    def sder(self) -> SDerPlus:
        return SDerPlus(self.der)

    @cached_property
    def module(self) -> TraceModule:
        return TraceModule(self.der)

    def parts(self, algebra: CEAlgebra):
        if algebra == CEAlgebra.DER_PLUS:
            return self.der, None
        if algebra == CEAlgebra.SDER_PLUS:
            return self.sder, None
        return self.der, self.module


@lru_cache(maxsize=16)
def derivation_setup(o: OperadTable, dim_v: int, max_weight: int) -> DerivationSetup:
    return DerivationSetup(o, dim_v, max_weight)


# ---------- chain-level formulas ----------------------------------------------


def _normal_wedge(seq: Tuple[int, ...]) -> Optional[Tuple[Tuple[int, ...], int]]:
    if len(set(seq)) < len(seq):
        return None
    return tuple(sorted(seq)), perm_sign(seq)


def _sym_insert(sym: Tuple[int, ...], m: int) -> Tuple[int, ...]:
    return tuple(sorted(sym + (m,)))


def chain_differential(lie, module, element: Element) -> Combo:
    wedge, sym, coeff = element
    out: Combo = {}
    for i in range(len(wedge)):
        for j in range(i + 1, len(wedge)):
            sign = -1 if (i + j) % 2 else 1
            rest = wedge[:i] + wedge[i + 1:j] + wedge[j + 1:]
            for g, c in lie.bracket(wedge[i], wedge[j]).items():
                normal = _normal_wedge((g,) + rest)
                if normal is not None:
                    add_term(out, (normal[0], sym, coeff), sign * normal[1] * c)
    if module is None:
        return out
    for i, g in enumerate(wedge):
        sign = -1 if i % 2 else 1
        rest = wedge[:i] + wedge[i + 1:]
        for m, c in module.phi(g).items():
            add_term(out, (rest, _sym_insert(sym, m), coeff), sign * c)
        for l, m0 in enumerate(sym):
            others = sym[:l] + sym[l + 1:]
            for m, c in module.action(g, m0).items():
                add_term(out, (rest, _sym_insert(others, m), coeff), -sign * c)
    return out


def chain_gl_action(lie, module, a: int, b: int, element: Element) -> Combo:
    """E_ab on a chain, by the Leibniz rule over every tensor factor."""
    wedge, sym, (A, B) = element
    out: Combo = {}
    for i, g in enumerate(wedge):
        for h, c in lie.gl(a, b, g).items():
            normal = _normal_wedge(wedge[:i] + (h,) + wedge[i + 1:])
            if normal is not None:
                add_term(out, (normal[0], sym, (A, B)), normal[1] * c)
    for l, m0 in enumerate(sym):
        others = sym[:l] + sym[l + 1:]
        for m, c in module.gl(a, b, m0).items():
            add_term(out, (wedge, _sym_insert(others, m), (A, B)), c)
    for k, x in enumerate(A):
        if x == a:
            add_term(out, (wedge, sym, (A[:k] + (b,) + A[k + 1:], B)), -1)
    for k, x in enumerate(B):
        if x == b:
            add_term(out, (wedge, sym, (A, B[:k] + (a,) + B[k + 1:])), 1)
    return out


def coefficient_actions(
    elements: List[Element], rows: Dict[Element, int], block: BlockKey
) -> Dict[Tuple[int, int, int, int], SparseMatrix]:
    """s_i swapping the V* factors i and i+1; commutes with d and with gl(V)."""
    p = block[0]
    found = {}
    for i in range(p - 1):
        columns = []
        for wedge, sym, (A, B) in elements:
            swapped = A[:i] + (A[i + 1], A[i]) + A[i + 2:]
            columns.append({rows[(wedge, sym, (swapped, B))]: 1})
        found[block + (i,)] = SparseMatrix.from_columns(len(rows), columns)
    return found


# ---------- bases ---------------------------------------------------------------


def _wedges(lie, max_d: int, max_w: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Sorted wedges with at most max_d factors and weight at most max_w."""
    weights = [lie.weight(j) for j in range(lie.dim)]
    out: List[Tuple[Tuple[int, ...], int]] = [((), 0)]

    def grow(prefix: Tuple[int, ...], start: int, w: int) -> None:
        for j in range(start, lie.dim):
            total = w + weights[j]
            if total > max_w:
                break
            item = prefix + (j,)
            out.append((item, total))
            if len(item) < max_d:
                grow(item, j + 1, total)

    grow((), 0, 0)
    return out


def _syms(module, max_w: int) -> List[Tuple[Tuple[int, ...], int]]:
    out: List[Tuple[Tuple[int, ...], int]] = [((), 0)]
    if module is None:
        return out
    weights = [module.weight(j) for j in range(module.dim)]

    def grow(prefix: Tuple[int, ...], start: int, w: int) -> None:
        for j in range(start, module.dim):
            total = w + weights[j]
            if total > max_w:
                break
            item = prefix + (j,)
            out.append((item, total))
            grow(item, j, total)

    grow((), 0, 0)
    return out


def _add(x: Tuple[int, ...], y: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(a + b for a, b in zip(x, y))


def coefficient_basis(dim_v: int, p: int, q: int) -> List[Coefficient]:
    """Basis of Hom(V^{⊗p}, V^{⊗q}) = (V*)^{⊗p} ⊗ V^{⊗q}."""
    return [
        (A, B)
        for A in product(range(dim_v), repeat=p)
        for B in product(range(dim_v), repeat=q)
    ]


def _coefficient_torus(coeff: Coefficient, dim_v: int) -> Tuple[int, ...]:
    t = [0] * dim_v
    for x in coeff[0]:
        t[x] -= 1
    for x in coeff[1]:
        t[x] += 1
    return tuple(t)


def ce_chains(
    lie,
    module,
    dim_v: int,
    p: int,
    q: int,
    t: Truncation,
    torus_zero: bool = False,
    weights: Optional[Iterable[int]] = None,
) -> Dict[BlockKey, List[Element]]:
    allowed = set(weights) if weights is not None else None
    coefficients: Dict[Tuple[int, ...], List[Coefficient]] = {}
    for coeff in coefficient_basis(dim_v, p, q):
        coefficients.setdefault(_coefficient_torus(coeff, dim_v), []).append(coeff)
    everything = [c for cs in coefficients.values() for c in cs]
    syms = [
        (s, w, _sum_torus(module, s, dim_v)) for s, w in _syms(module, t.max_weight)
    ]
    out: Dict[BlockKey, List[Element]] = {}
    for wedge, ww in _wedges(lie, t.max_degree, t.max_weight):
        mu = _sum_torus(lie, wedge, dim_v)
        for sym, sw, nu in syms:
            w = ww + sw
            if w > t.max_weight or (allowed is not None and w not in allowed):
                continue
            if torus_zero:
                need = tuple(-x for x in _add(mu, nu))
                options = coefficients.get(need, [])
            else:
                options = everything
            for coeff in options:
                out.setdefault((p, w, len(wedge)), []).append((wedge, sym, coeff))
    return {k: sorted(v) for k, v in sorted(out.items())}


def _sum_torus(carrier, items: Tuple[int, ...], dim_v: int) -> Tuple[int, ...]:
    total = tuple([0] * dim_v)
    for j in items:
        total = _add(total, carrier.torus(j))
    return total


# ---------- complexes -----------------------------------------------------------


def ce_complex(
    algebra: Union[CEAlgebra, str],
    o: OperadTable,
    dim_v: int,
    coeff: Tuple[int, int],
    t: Truncation,
    settings: Optional[Settings] = None,
    torus_zero: bool = False,
    weights: Optional[Iterable[int]] = None,
    setup: Optional[DerivationSetup] = None,
) -> ChainComplex:
    """
    The CE complex of der+, sder+ or the semidirect dg Lie algebra.

    With torus_zero only chains of torus weight zero are kept and the
    stored gl(V) operators are the raising operators E_{a,a+1}, enough to
    cut out the invariants. Otherwise every E_ab is stored.
    """
    settings = settings or get_settings()
    try:
        algebra = CEAlgebra(algebra)
    except ValueError as e:
        raise ConfigurationError(f"unknown CE algebra {algebra!r}", algebra=str(algebra)) from e
    p, q = coeff
    if p < 0 or q < 0:
        raise ConfigurationError("coefficient arities must be non-negative", p=p, q=q)
    setup = setup or derivation_setup(o, dim_v, t.max_weight)
    lie, module = setup.parts(algebra)
    chains = ce_chains(lie, module, dim_v, p, q, t, torus_zero, weights)
    index = {k: {e: j for j, e in enumerate(v)} for k, v in chains.items()}

    def differential(block: BlockKey) -> Tuple[BlockKey, SparseMatrix]:
        rows = index.get(below(block), {})
        columns = []
        for element in chains[block]:
            image = chain_differential(lie, module, element)
            columns.append({rows[e]: c for e, c in image.items()})
        return block, SparseMatrix.from_columns(len(rows), columns)

    def operators(block: BlockKey) -> Tuple[BlockKey, Dict[str, SparseMatrix]]:
        found: Dict[str, SparseMatrix] = {}
        if torus_zero:
            pairs = [(a, a + 1) for a in range(dim_v - 1)]
        else:
            pairs = [(a, b) for a in range(dim_v) for b in range(dim_v)]
        for a, b in pairs:
            rows = {} if torus_zero else index[block]
            columns = []
            for element in chains[block]:
                column = {}
                for e, c in chain_gl_action(lie, module, a, b, element).items():
                    r = rows.setdefault(e, len(rows)) if torus_zero else rows[e]
                    column[r] = c
                columns.append(column)
            found[f"gl:{a},{b}"] = SparseMatrix.from_columns(len(rows), columns)
        return block, found

    with_d = [b for b in chains if b[2] >= 1]
    if settings.parallelism > 1:
        with ThreadPoolExecutor(max_workers=settings.parallelism) as pool:
            diffs = dict(pool.map(differential, with_d))
            ops = dict(pool.map(operators, list(chains)))
    else:
        diffs = dict(map(differential, with_d))
        ops = dict(map(operators, list(chains)))
    actions: Dict[Tuple[int, int, int, int], SparseMatrix] = {}
    for block in chains:
        actions.update(coefficient_actions(chains[block], index[block], block))
    by_name: Dict[str, Dict[BlockKey, SparseMatrix]] = {}
    for block, named in ops.items():
        for name, matrix in named.items():
            by_name.setdefault(name, {})[block] = matrix
    graded = o.graded
    untrusted = frozenset(
        (n, w, d) for n, w, d in chains
        if d == t.max_degree and (not graded or d < w)
    )
    logger.info(
        "ce_complex_assembled",
        algebra=algebra.value,
        operad=o.name,
        dim_v=dim_v,
        p=p,
        q=q,
        blocks=len(chains),
        size=sum(len(v) for v in chains.values()),
    )
    return ChainComplex(
        blocks={b: len(v) for b, v in chains.items()},
        differentials=diffs,
        bases=chains,
        operators=by_name,
        group_actions=actions,
        untrusted=untrusted,
        name=f"CE({lie.name}{' x| M' if module is not None else ''}; p={p}, q={q})",
    )


@dataclass
class CEHomology:
    """CE homology dims per (w, d) for one coefficient pair."""

    algebra: str
    operad: str
    dim_v: int
    p: int
    q: int
    invariant: bool = True
    dims: Dict[Tuple[int, int], int] = field(default_factory=dict)
    chain_dims: Dict[Tuple[int, int], int] = field(default_factory=dict)
    untrusted: FrozenSet[Tuple[int, int]] = frozenset()
    # S_p irreducible (on the V* factors) -> multiplicity per (w, d)
    isotypic: Dict[Tuple[int, ...], Dict[Tuple[int, int], int]] = field(default_factory=dict)


def coefficient_isotypic(
    c: ChainComplex, p: int, dims: Dict[Tuple[int, int], int]
) -> Dict[Tuple[int, ...], Dict[Tuple[int, int], int]]:
    """Multiplicities of the S_p irreducibles in the homology, per (w, d)."""
    if p < 2:
        return {((p,) if p else ()): dict(dims)} if dims else {}
    return {
        r.partition: dict(r.multiplicity)
        for r in isotypic_homology(c, p) if r.multiplicity
    }


def ce_homology(
    algebra: Union[CEAlgebra, str],
    o: OperadTable,
    dim_v: int,
    coeff: Tuple[int, int],
    t: Truncation,
    settings: Optional[Settings] = None,
    invariant: bool = True,
    weights: Optional[Iterable[int]] = None,
    setup: Optional[DerivationSetup] = None,
    isotypic: bool = False,
) -> CEHomology:
    """
    Homology of a CE complex, of its gl(V)-invariant part by default.

    With isotypic the homology is also split by the irreducibles of S_p
    permuting the V* factors.

    Raises:
        ChainComplexError: d∘d ≠ 0 or the differential leaves the invariants
    """
    settings = settings or get_settings()
    c = ce_complex(
        algebra, o, dim_v, coeff, t, settings,
        torus_zero=invariant, weights=weights, setup=setup,
    )
    c.check_d_squared()
    if invariant:
        c = gl_invariants(c, dim_v)
    dims = c.homology_dims(parallelism=settings.parallelism)
    result = CEHomology(
        algebra=CEAlgebra(algebra).value,
        operad=o.name,
        dim_v=dim_v,
        p=coeff[0],
        q=coeff[1],
        invariant=invariant,
        dims={(w, d): v for (_, w, d), v in dims.items() if v},
        chain_dims={(w, d): v for (_, w, d), v in c.blocks.items() if v},
        untrusted=frozenset((w, d) for _, w, d in c.untrusted),
    )
    if isotypic:
        result.isotypic = coefficient_isotypic(c, result.p, result.dims)
    logger.info(
        "ce_homology_computed",
        algebra=result.algebra,
        operad=o.name,
        dim_v=dim_v,
        p=result.p,
        q=result.q,
        dims=result.dims,
    )
    return result


def sder_homology_direct(
    o: OperadTable, dim_v: int, coeff: Tuple[int, int], t: Truncation,
    settings: Optional[Settings] = None,
) -> CEHomology:
    return ce_homology(CEAlgebra.SDER_PLUS, o, dim_v, coeff, t, settings)


def semidirect_homology(
    o: OperadTable, dim_v: int, coeff: Tuple[int, int], t: Truncation,
    settings: Optional[Settings] = None,
) -> CEHomology:
    return ce_homology(CEAlgebra.SEMIDIRECT, o, dim_v, coeff, t, settings)


@dataclass
class DerivedDivergenceRow:
    w: int
    d: int
    direct: int
    semidirect: int

    @property
    def match(self) -> bool:
        return self.direct == self.semidirect


def derived_divergence_check(
    o: OperadTable,
    dim_v: int,
    coeff: Tuple[int, int],
    t: Truncation,
    settings: Optional[Settings] = None,
) -> List[DerivedDivergenceRow]:
    """H(SDer⁺) against H(Der⁺ ⋉ s^{-1}|∂(Ō)|) in weights below dim V."""
    direct = sder_homology_direct(o, dim_v, coeff, t, settings)
    semi = semidirect_homology(o, dim_v, coeff, t, settings)
    rows = []
    for w, d in sorted(set(direct.dims) | set(semi.dims)):
        if w >= dim_v or (w, d) in direct.untrusted or (w, d) in semi.untrusted:
            continue
        rows.append(DerivedDivergenceRow(w, d, direct.dims.get((w, d), 0), semi.dims.get((w, d), 0)))
    return rows


@dataclass
class SurjectivityRow:
    w: int
    target: int
    image: int

    @property
    def full(self) -> bool:
        return self.image == self.target


def divergence_surjectivity_check(
    o: OperadTable,
    dim_v: int,
    max_weight: Optional[int] = None,
    setup: Optional[DerivationSetup] = None,
) -> List[SurjectivityRow]:
    """
    Rank of Div: Der⁺_w → |∂(Ō)|(V)_w against its target, for w < dim V.

    Below dim V the divergence is onto, so every row should be full.
    """
    top = dim_v - 1 if max_weight is None else min(max_weight, dim_v - 1)
    if top < 1:
        return []
    setup = setup or derivation_setup(o, dim_v, top)
    rows = []
    for w in range(1, top + 1):
        m = setup.der.divergence_matrix(w)
        rows.append(SurjectivityRow(w, m.rows, rank(m)))
    logger.info(
        "divergence_surjectivity_checked",
        operad=o.name, dim_v=dim_v, full=all(row.full for row in rows),
    )
    return rows


@dataclass
class KoszulCheck:
    operad: str
    dim_v: int
    weights: List[int]
    dims: Dict[Tuple[int, int], int]

    @property
    def diagonal(self) -> bool:
        return all(d == w for (w, d), v in self.dims.items() if v and w in self.weights)


def koszul_check(
    o: OperadTable, dim_v: int, t: Truncation, settings: Optional[Settings] = None
) -> KoszulCheck:
    """
    Diagonal homology of SDer⁺ with trivial coefficients in weights r < dim V / 3.

    The whole complex is used, not its invariant part.
    """
    weights = [r for r in range(1, t.max_weight + 1) if 3 * r < dim_v]
    bound = Truncation(
        max_arity=t.max_arity,
        max_weight=max(weights, default=1),
        max_degree=max(max(weights, default=1) + 1, 1),
    )
    result = ce_homology(
        CEAlgebra.SDER_PLUS, o, dim_v, (0, 0), bound, settings,
        invariant=False, weights=weights,
    )
    return KoszulCheck(o.name, dim_v, weights, result.dims)
