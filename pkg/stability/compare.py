# stability/compare.py
"""
Stable-range comparisons.

Each harness computes a left side on the derivation side (CE homology of
Der⁺, SDer⁺ or the semidirect algebra, gl(V)-invariant part with
coefficients Hom(V^{⊗p}, V^{⊗q})) and a right side on the graph side
(coPROP completion of wheeled bar homology), one row per (dim V, p, q, w, d).
Rows outside the stable range are reported but never asserted.

The invariant part of the coefficient-twisted complex is zero unless
p = w + q for arity-graded operads, so each coefficient pair pins one
weight.
"""
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from core.config import Settings, get_settings
from core.exceptions import ConfigurationError, EquivarianceError
from core.logging import get_logger
from derlie.ce import CEAlgebra, CEHomology, ce_complex, ce_homology, derivation_setup
from derlie.invariants import invariant_subspaces, restrict_to_subspaces
from cyclic.calchom import CheckStatus, calchom_check
from exactla.characters import Partition
from exactla.combos import Combo, add_term, perm_sign
from exactla.complex import BlockKey, ChainComplex, above
from exactla.rank import Subspace, nullspace, rank
from exactla.sparse import SparseMatrix
from operads.factory import StructureConstants, builtin, lie_to_ass
from operads.table import OperadTable
from species.core import Truncation
from wheeledbar.assembly import chain_map, trivial_wheeled_bar, wheeled_bar_split
from wheeledbar.completion import trivial_wheeling, wheeled_completion
from wheeledbar.coprop import (
    BigradedHomology,
    bigraded_homology,
    coprop_chain_dims,
    coprop_completion,
    homology_of,
)

from .repstab import leaf_multiplicities
from .report import ComparisonReport, ComparisonRow, ReportStatus, Theorem

logger = get_logger(__name__)

Coefficients = Sequence[Tuple[int, int]]
InRange = Callable[[int, int, int, int], bool]  # (dim_v, p, w, d)

# k₊ = k ⊕ k·e with e² = e
UNITAL_LINE = StructureConstants(dim=2, products=[[1, 1, 1, 1]])


# ---------- helpers -----------------------------------------------------------


def _check_coefficients(coeffs: Coefficients, t: Truncation) -> List[Tuple[int, int]]:
    out = sorted(set((int(p), int(q)) for p, q in coeffs))
    for p, q in out:
        if p < 0 or q < 0:
            raise ConfigurationError("coefficient arities must be non-negative", p=p, q=q)
        if p > t.max_arity:
            raise ConfigurationError(f"p = {p} exceeds max_arity {t.max_arity}", p=p)
    if not out:
        raise ConfigurationError("at least one coefficient pair is needed")
    return out


def _bar_truncation(t: Truncation, coeffs: Coefficients) -> Truncation:
    """Graph blocks only need arities up to the largest p."""
    top = max((p for p, _ in coeffs), default=1)
    return Truncation(max_arity=max(1, top), max_weight=t.max_weight, max_degree=t.max_degree)


def _pinned_weights(o: OperadTable, p: int, q: int, t: Truncation) -> Optional[List[int]]:
    """The one weight the invariants can live in, or None when ungraded."""
    if not o.graded:
        return None
    w = p - q
    return [w] if 0 <= w <= t.max_weight else []


def _touches(untrusted: FrozenSet[BlockKey], w: int, d: int) -> bool:
    """A completion block may be built from an untrusted homology block."""
    return any(bw <= w and bd <= d for _, bw, bd in untrusted)


def _invariant_side(
    algebra: CEAlgebra,
    o: OperadTable,
    dim_v: int,
    p: int,
    q: int,
    t: Truncation,
    cap: int,
    settings: Settings,
    isotypic: bool = False,
) -> Optional[CEHomology]:
    weights = _pinned_weights(o, p, q, t)
    if weights == []:
        logger.info("coefficient_skipped", operad=o.name, p=p, q=q, reason="weight out of range")
        return None
    t_ce = Truncation(max_arity=t.max_arity, max_weight=t.max_weight, max_degree=cap)
    setup = derivation_setup(o, dim_v, t.max_weight)
    return ce_homology(
        algebra, o, dim_v, (p, q), t_ce, settings,
        weights=weights, setup=setup, isotypic=isotypic,
    )


def _degree_cap(dim_v: int, p: int, t: Truncation) -> int:
    """Homology in degrees d < dim V - p needs the chains one degree up."""
    return min(t.max_degree, dim_v - p)


def _rows(
    dim_v: int,
    p: int,
    q: int,
    left: CEHomology,
    right: Dict[Tuple[int, int], int],
    bar_untrusted: FrozenSet[BlockKey],
    in_range: InRange,
    cap: int,
    cross: Optional[CEHomology] = None,
) -> List[ComparisonRow]:
    keys = set(left.dims) | set(left.chain_dims) | set(right)
    if cross is not None:
        keys |= set(cross.dims)
    rows = []
    for w, d in sorted(keys):
        if d > cap:
            continue
        trusted = (w, d) not in left.untrusted and not _touches(bar_untrusted, w, d)
        if cross is not None and (w, d) in cross.untrusted:
            trusted = False
        rows.append(ComparisonRow(
            dim_v=dim_v, w=w, d=d, p=p, q=q,
            left=left.dims.get((w, d), 0),
            right=right.get((w, d), 0),
            cross=cross.dims.get((w, d), 0) if cross is not None else None,
            in_stable_range=in_range(dim_v, p, w, d),
            trusted=trusted,
        ))
    return rows


def _isotypic_rows(
    dim_v: int,
    p: int,
    q: int,
    left: CEHomology,
    right: Dict[Partition, Dict[Tuple[int, int], int]],
    bar_untrusted: FrozenSet[BlockKey],
    in_range: InRange,
    cap: int,
) -> List[ComparisonRow]:
    """One row per S_p irreducible and block; the S_q action is forgotten."""
    rows = []
    for beta in sorted(set(left.isotypic) | set(right), reverse=True):
        lhs = left.isotypic.get(beta, {})
        rhs = right.get(beta, {})
        for w, d in sorted(set(lhs) | set(rhs)):
            if d > cap:
                continue
            rows.append(ComparisonRow(
                dim_v=dim_v, w=w, d=d, p=p, q=q,
                part=f"S_{p} {beta}",
                left=lhs.get((w, d), 0),
                right=rhs.get((w, d), 0),
                in_stable_range=in_range(dim_v, p, w, d),
                trusted=(w, d) not in left.untrusted and not _touches(bar_untrusted, w, d),
            ))
    return rows


def _completion_dims(h: BigradedHomology, p: int, q: int, t: Truncation) -> Dict[Tuple[int, int], int]:
    return {(w, d): v for (_, _, w, d), v in coprop_completion(h, p, q, t).items()}


def _run(
    theorem: Theorem,
    o: OperadTable,
    dims: Iterable[int],
    t: Truncation,
    coeffs: Coefficients,
    h: BigradedHomology,
    t_bar: Truncation,
    in_range: InRange,
    settings: Settings,
    algebra: CEAlgebra,
    cross_algebra: Optional[CEAlgebra] = None,
    isotypic: bool = False,
) -> ComparisonReport:
    report = ComparisonReport(theorem=theorem, operad=o.name)
    for dim_v in sorted(set(dims)):
        for p, q in coeffs:
            if dim_v <= p:
                logger.info("coefficient_skipped", operad=o.name, dim_v=dim_v, p=p, q=q,
                            reason="no degree inside the stable range")
                continue
            cap = _degree_cap(dim_v, p, t)
            left = _invariant_side(algebra, o, dim_v, p, q, t, cap, settings, isotypic)
            if left is None:
                continue
            cross = None
            if cross_algebra is not None:
                cross = _invariant_side(cross_algebra, o, dim_v, p, q, t, cap, settings)
            right = _completion_dims(h, p, q, t_bar)
            report.rows.extend(_rows(dim_v, p, q, left, right, h.untrusted, in_range, cap, cross))
            if isotypic:
                leaves = leaf_multiplicities(h, p, q, t_bar)
                report.rows.extend(_isotypic_rows(dim_v, p, q, left, leaves, h.untrusted, in_range, cap))
    report.finalize()
    logger.info(
        "comparison_finished",
        theorem=theorem.value,
        operad=o.name,
        status=report.status.value,
        rows=len(report.rows),
        mismatches=len(report.mismatches()),
    )
    return report


# ---------- theorems ------------------------------------------------------------


def compare_main1(
    o: OperadTable,
    dims: Iterable[int],
    t: Truncation,
    coeffs: Coefficients = ((0, 0),),
    settings: Optional[Settings] = None,
    isotypic: bool = False,
) -> ComparisonReport:
    """
    Invariant CE homology of Der⁺(O(V)) against the coPROP completion of
    H(B^↻(O)) with the trivial wheeling; asserted where dim V > d + p.

    With isotypic the S_p action on the V* factors is compared as well,
    one row per irreducible.
    """
    settings = settings or get_settings()
    coeffs = _check_coefficients(coeffs, t)
    t_bar = _bar_truncation(t, coeffs)
    h = homology_of(trivial_wheeled_bar(o, t_bar, settings), settings, isotypic=isotypic)
    return _run(
        Theorem.MAIN1, o, dims, t, coeffs, h, t_bar,
        lambda dim_v, p, w, d: dim_v > d + p,
        settings, CEAlgebra.DER_PLUS, isotypic=isotypic,
    )


def compare_main2(
    o: OperadTable,
    dims: Iterable[int],
    t: Truncation,
    coeffs: Coefficients = ((0, 0),),
    settings: Optional[Settings] = None,
    isotypic: bool = False,
) -> ComparisonReport:
    """
    Invariant CE homology of Der⁺ ⋉ s^{-1}|∂(Ō)|(V), cross-checked by
    SDer⁺ directly, against the completion of H(B^↻(O^↻)).

    Asserted where dim V > d + p and dim V > w.
    """
    settings = settings or get_settings()
    coeffs = _check_coefficients(coeffs, t)
    t_bar = _bar_truncation(t, coeffs)
    h = bigraded_homology(wheeled_completion(o, t_bar), t_bar, settings, isotypic=isotypic)
    return _run(
        Theorem.MAIN2, o, dims, t, coeffs, h, t_bar,
        lambda dim_v, p, w, d: dim_v > d + p and dim_v > w,
        settings, CEAlgebra.SEMIDIRECT, CEAlgebra.SDER_PLUS, isotypic=isotypic,
    )


def compare_graphcx(
    o: OperadTable,
    dims: Iterable[int],
    t: Truncation,
    coeffs: Coefficients = ((0, 0),),
    completion: bool = False,
    settings: Optional[Settings] = None,
) -> ComparisonReport:
    """
    Chain-level block dims: invariant CE chains against coPROP chains of
    the wheeled bar construction, asserted where dim V ≥ d + p.

    With completion the left side is the semidirect algebra and the right
    side B^↻(O^↻), asserted also only where dim V > w.
    """
    settings = settings or get_settings()
    coeffs = _check_coefficients(coeffs, t)
    t_bar = _bar_truncation(t, coeffs)
    if completion:
        theorem, algebra = Theorem.GRAPHCX2, CEAlgebra.SEMIDIRECT
        bar = wheeled_bar_split(wheeled_completion(o, t_bar), t_bar, settings)
    else:
        theorem, algebra = Theorem.GRAPHCX1, CEAlgebra.DER_PLUS
        bar = trivial_wheeled_bar(o, t_bar, settings)
    report = ComparisonReport(theorem=theorem, operad=o.name)
    for dim_v in sorted(set(dims)):
        for p, q in coeffs:
            if dim_v < p:
                continue
            cap = min(t.max_degree, max(dim_v - p, 1))
            left = _invariant_side(algebra, o, dim_v, p, q, t, cap, settings)
            if left is None:
                continue
            right = {(w, d): v for (_, _, w, d), v in coprop_chain_dims(bar, p, q, t_bar).items()}
            for w, d in sorted(set(left.chain_dims) | set(right)):
                if d > cap:
                    continue
                in_range = dim_v >= d + p and (not completion or dim_v > w)
                report.rows.append(ComparisonRow(
                    dim_v=dim_v, w=w, d=d, p=p, q=q,
                    left=left.chain_dims.get((w, d), 0),
                    right=right.get((w, d), 0),
                    in_stable_range=in_range,
                ))
    report.finalize()
    logger.info("comparison_finished", theorem=theorem.value, operad=o.name,
                status=report.status.value, rows=len(report.rows))
    return report


def compare_newfuchs(
    o: OperadTable,
    dim_v: int,
    r: int,
    settings: Optional[Settings] = None,
) -> ComparisonReport:
    """
    Weight-r homology of the whole CE complex of Der⁺(O(V)).

    Predicted: zero in degrees d ≠ r where dim V > r + 2d; in degree r the
    Euler characteristic, asserted when every other degree is predicted
    zero as well.
    """
    settings = settings or get_settings()
    if r < 1:
        raise ConfigurationError("weight must be positive", weight=r)
    t_r = Truncation(max_arity=o.max_arity, max_weight=r, max_degree=r)
    result = ce_homology(
        CEAlgebra.DER_PLUS, o, dim_v, (0, 0), t_r, settings, invariant=False, weights=[r]
    )
    chains = {d: v for (w, d), v in result.chain_dims.items() if w == r}
    chi = sum((-1) ** d * v for d, v in chains.items())
    degrees = sorted(set(chains) | {r})
    others = all(dim_v > r + 2 * d for d in degrees if d != r)
    report = ComparisonReport(theorem=Theorem.NEWFUCHS, operad=o.name)
    for d in degrees:
        on_diagonal = d == r
        report.rows.append(ComparisonRow(
            dim_v=dim_v, w=r, d=d,
            left=result.dims.get((r, d), 0),
            right=(-1) ** r * chi if on_diagonal else 0,
            in_stable_range=(others and dim_v > 3 * r) if on_diagonal else dim_v > r + 2 * d,
            trusted=(r, d) not in result.untrusted,
        ))
    report.finalize()
    logger.info("comparison_finished", theorem="newfuchs", operad=o.name, dim_v=dim_v,
                weight=r, status=report.status.value)
    return report


def compare_lqt(
    dim_v: int = 3,
    max_degree: int = 4,
    special: bool = False,
    settings: Optional[Settings] = None,
) -> ComparisonReport:
    """
    H(gl_n(k)) (or H(sl_n(k)) when special) against the (0, 0) coPROP
    component of B^↻(alg1(k₊)) (or of its wheeled completion).

    Asserted in degrees below n.
    """
    settings = settings or get_settings()
    o = builtin("alg1", 1, data=UNITAL_LINE, settings=settings)
    t = Truncation(max_arity=1, max_weight=1, max_degree=max_degree + 1)
    algebra = CEAlgebra.SDER_PLUS if special else CEAlgebra.DER_PLUS
    left = ce_homology(algebra, o, dim_v, (0, 0), t, settings)
    data = wheeled_completion(o, t) if special else trivial_wheeling(o)
    h = bigraded_homology(data, t, settings)
    right = _completion_dims(h, 0, 0, t)
    report = ComparisonReport(theorem=Theorem.LQT, operad=f"alg1(k+), {'sl' if special else 'gl'}_{dim_v}")
    for d in range(max_degree + 1):
        report.rows.append(ComparisonRow(
            dim_v=dim_v, w=0, d=d,
            left=left.dims.get((0, d), 0),
            right=right.get((0, d), 0),
            in_stable_range=dim_v > d,
            trusted=(0, d) not in left.untrusted and not _touches(h.untrusted, 0, d),
        ))
    report.finalize()
    logger.info("comparison_finished", theorem="lqt", special=special, dim_v=dim_v,
                status=report.status.value)
    return report


def compare_calchom(
    o: OperadTable, t: Truncation, settings: Optional[Settings] = None
) -> ComparisonReport:
    """Wheel homology against HC_{•-1}(∂(Ō)₀), as a comparison report."""
    result = calchom_check(o, t, settings)
    report = ComparisonReport(theorem=Theorem.CALCHOM, operad=o.name)
    if result.status == CheckStatus.SKIPPED:
        report.status = ReportStatus.SKIPPED
        report.reason = result.reason
        return report
    for row in result.rows:
        n, w, d = row.block
        report.rows.append(ComparisonRow(
            part=row.part, n=n, w=w, d=d,
            left=row.left, right=row.right, trusted=row.trusted,
        ))
    return report.finalize()


# ---------- naturality ----------------------------------------------------------


def _induced_rank(
    image_columns: List[Dict[int, object]], rows: int, boundary: Optional[SparseMatrix]
) -> int:
    """Rank of the induced map on homology: rank [f(Z) | B'] - rank B'."""
    extra = boundary.columns() if boundary is not None else []
    combined = SparseMatrix.from_columns(rows, list(image_columns) + extra)
    base = rank(boundary) if boundary is not None else 0
    return rank(combined) - base


def _cycles(c: ChainComplex, key: BlockKey) -> Subspace:
    return nullspace(c.differential(key))


def _der_map(source, target, morphism: Callable[[Hashable], Combo]) -> Dict[int, Combo]:
    """Der⁺(O(V)) → Der⁺(P(V)) on basis indices, x_i ↦ m pushed through the morphism."""
    out: Dict[int, Combo] = {}
    for j, (i, (tag, word)) in enumerate(source.der.labels):
        image: Combo = {}
        for new_tag, c in morphism(tag).items():
            for monomial, c2 in target.free.monomial(new_tag, word).items():
                add_term(image, target.der.index[(i, monomial)], c * c2)
        out[j] = image
    return out


def _chain_image(element, der_map: Dict[int, Combo]) -> Combo:
    wedge, sym, coeff = element
    terms: List[Tuple[Tuple[int, ...], object]] = [((), 1)]
    for g in wedge:
        terms = [(seq + (h,), c * c2) for seq, c in terms for h, c2 in der_map[g].items()]
    out: Combo = {}
    for seq, c in terms:
        if len(set(seq)) < len(seq):
            continue
        add_term(out, (tuple(sorted(seq)), sym, coeff), c * perm_sign(seq))
    return out


def naturality_square(
    source: OperadTable,
    target: OperadTable,
    morphism: Callable[[Hashable], Combo] = lie_to_ass,
    dim_v: int = 3,
    settings: Optional[Settings] = None,
) -> ComparisonReport:
    """
    The morphism induces maps on both sides of compare_main1; on the block
    w = 1, d = 1 with coefficients (p, q) = (1, 0) the source and target
    dims and the ranks of the induced maps must agree.

    Raises:
        EquivarianceError: the induced CE map leaves the invariants
    """
    settings = settings or get_settings()
    w, d, p, q = 1, 1, 1, 0
    key: BlockKey = (p, w, d)
    t_ce = Truncation(max_arity=source.max_arity, max_weight=w, max_degree=d + 1)
    setups = [derivation_setup(o, dim_v, w) for o in (source, target)]
    complexes = [
        ce_complex(CEAlgebra.DER_PLUS, o, dim_v, (p, q), t_ce, settings,
                   torus_zero=True, weights=[w], setup=s)
        for o, s in zip((source, target), setups)
    ]
    invariants = [invariant_subspaces(c, dim_v) for c in complexes]
    restricted = [restrict_to_subspaces(c, inv) for c, inv in zip(complexes, invariants)]
    der_map = _der_map(setups[0], setups[1], morphism)
    target_index = {e: j for j, e in enumerate(complexes[1].bases.get(key, []))}
    source_space, target_space = invariants[0].get(key), invariants[1].get(key)

    images = []
    if source_space is not None and target_space is not None:
        for z in _cycles(restricted[0], key).vectors:
            ambient: Dict[int, object] = {}
            for j, c in z.items():
                for k, v in source_space.vectors[j].items():
                    ambient[k] = ambient.get(k, 0) + c * v
            pushed: Dict[int, object] = {}
            for k, c in ambient.items():
                if not c:
                    continue
                for e, c2 in _chain_image(complexes[0].bases[key][k], der_map).items():
                    add_term(pushed, target_index[e], c * c2)
            if not target_space.contains(pushed):
                raise EquivarianceError("induced CE map leaves the invariants", block=key)
            images.append(target_space.coordinates(pushed))
    left_rank = _induced_rank(
        images, restricted[1].dim(key), restricted[1].differentials.get(above(key))
    )
    left_dims = [c.homology_dims().get(key, 0) for c in restricted]

    t_bar = Truncation(max_arity=p, max_weight=w, max_degree=d + 1)
    bars = [trivial_wheeled_bar(o, t_bar, settings) for o in (source, target)]
    cmap = chain_map(morphism, bars[0], bars[1])
    cmap.check()
    wheel_key: BlockKey = (p, w, d)
    f = cmap.matrices.get(wheel_key, SparseMatrix.zero(bars[1].wheeled.dim(wheel_key), 0))
    right_images = [f.apply(z) for z in _cycles(bars[0].wheeled, wheel_key).vectors]
    right_rank = _induced_rank(
        right_images, bars[1].wheeled.dim(wheel_key), bars[1].wheeled.differentials.get(above(wheel_key))
    )
    right_dims = [b.wheeled.homology_dims().get(wheel_key, 0) for b in bars]

    report = ComparisonReport(theorem=Theorem.NATURALITY, operad=f"{source.name}->{target.name}")
    in_range = dim_v > d + p
    for part, left, right in (
        ("source", left_dims[0], right_dims[0]),
        ("target", left_dims[1], right_dims[1]),
        ("map", left_rank, right_rank),
    ):
        report.rows.append(ComparisonRow(
            part=part, dim_v=dim_v, n=p, w=w, d=d, p=p, q=q,
            left=left, right=right, in_stable_range=in_range,
        ))
    report.finalize()
    logger.info("naturality_checked", source=source.name, target=target.name,
                ranks=(left_rank, right_rank), status=report.status.value)
    return report
