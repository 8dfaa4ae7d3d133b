# stability/repstab.py
"""
Mixed representation stability multiplicities.

The (q, p) coPROP component of the wheeled bar homology is an
S_q × S_p-module (q roots, p leaves). Its Frobenius characteristic is
assembled in the power-sum basis from the isotypic decomposition of both
homology parts:

    Σ_{nu ⊢ q} p_nu(r) / z_nu · Π_{l ∈ nu} p_l[ch H_o]  ·  Exp[ch H_w]

where p_l[-] is the graded plethysm (an odd class picks up (-1)^{l-1}),
and pairing with s_alpha(r) s_beta(x) gives the multiplicity of
S^alpha ⊠ S^beta in each (w, d).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from core.exceptions import EquivarianceError, TruncationExceededError
from core.logging import get_logger
from exactla.characters import (
    Partition,
    centralizer_size,
    character,
    irreducible_dimension,
    partitions,
)
from species.core import Truncation
from wheeledbar.coprop import BigradedHomology, coprop_completion

from .report import MultiplicityReport, MultiplicityRow

logger = get_logger(__name__)

SymKey = Tuple[Partition, int, int]  # (mu, w, d)
Sym = Dict[SymKey, Fraction]


@dataclass(frozen=True)
class _Bound:
    arity: int
    weight: int
    degree: int

    def admits(self, key: SymKey) -> bool:
        mu, w, d = key
        return sum(mu) <= self.arity and w <= self.weight and d <= self.degree


def _add(acc: Sym, key: SymKey, value: Fraction) -> None:
    total = acc.get(key, Fraction(0)) + value
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


def _merge(mu: Partition, nu: Partition) -> Partition:
    return tuple(sorted(mu + nu, reverse=True))


def multiply(f: Sym, g: Sym, bound: _Bound) -> Sym:
    out: Sym = {}
    for (mu, w1, d1), a in f.items():
        for (nu, w2, d2), b in g.items():
            key = (_merge(mu, nu), w1 + w2, d1 + d2)
            if bound.admits(key):
                _add(out, key, a * b)
    return out


def plethysm(f: Sym, l: int, bound: _Bound) -> Sym:
    """p_l[f] on a graded character."""
    out: Sym = {}
    for (mu, w, d), c in f.items():
        key = (tuple(l * m for m in mu), l * w, l * d)
        if bound.admits(key):
            _add(out, key, c * (-1) ** (d * (l - 1)))
    return out


def homology_character(h: BigradedHomology, part: str) -> Sym:
    """
    Frobenius characteristic of one part of the homology.

    Raises:
        EquivarianceError: the isotypic decomposition of an arity is missing
    """
    dims = h.part(part)
    out: Sym = {}
    for n in sorted({k[0] for k, v in dims.items() if v}):
        if n == 0:
            for (k, w, d), v in dims.items():
                if k == 0 and v:
                    _add(out, ((), w, d), Fraction(v))
            continue
        reports = h.isotypic.get((part, n))
        if reports is None:
            raise EquivarianceError(
                f"no isotypic decomposition stored for the {part} part in arity {n}",
                part=part, n=n,
            )
        for report in reports:
            for (w, d), mult in report.multiplicity.items():
                for mu in partitions(n):
                    chi = character(report.partition, mu)
                    if chi:
                        _add(out, (mu, w, d), Fraction(mult * chi, centralizer_size(mu)))
    return out


def plethystic_exp(g: Sym, bound: _Bound) -> Sym:
    """Exp[g] = Σ_k h_k[g], the character of the graded symmetric algebra."""
    if any(not mu and w == 0 and d == 0 for mu, w, d in g):
        raise TruncationExceededError(
            "a generator in arity, weight and degree 0 has unbounded symmetric powers"
        )
    top = max(bound.arity, bound.weight, bound.degree)
    y: Sym = {}
    for l in range(1, top + 1):
        for key, c in plethysm(g, l, bound).items():
            _add(y, key, c / l)
    result: Sym = {((), 0, 0): Fraction(1)}
    term = dict(result)
    for k in range(1, top + 1):
        term = {key: c / k for key, c in multiply(term, y, bound).items()}
        if not term:
            break
        for key, c in term.items():
            _add(result, key, c)
    return result


def coprop_character(
    h: BigradedHomology, p: int, q: int, t: Truncation
) -> Dict[Partition, Sym]:
    """Characteristic of the (q, p) component, keyed by the root cycle type."""
    bound = _Bound(p, t.max_weight, t.max_degree)
    operadic = homology_character(h, "operadic")
    wheeled = plethystic_exp(homology_character(h, "wheeled"), bound)
    out: Dict[Partition, Sym] = {}
    for nu in partitions(q):
        tree: Sym = {((), 0, 0): Fraction(1, centralizer_size(nu))}
        for l in nu:
            tree = multiply(tree, plethysm(operadic, l, bound), bound)
        total = multiply(tree, wheeled, bound)
        out[nu] = {key: c for key, c in total.items() if sum(key[0]) == p}
    return out


def pair(char: Dict[Partition, Sym], alpha: Sequence[int], beta: Sequence[int]) -> Dict[Tuple[int, int], int]:
    """
    ⟨char, s_alpha ⊠ s_beta⟩ per (w, d).

    Raises:
        EquivarianceError: a multiplicity is fractional or negative
    """
    alpha, beta = tuple(alpha), tuple(beta)
    totals: Dict[Tuple[int, int], Fraction] = {}
    for nu, sym in char.items():
        chi_alpha = character(alpha, nu)
        if not chi_alpha:
            continue
        for (mu, w, d), c in sym.items():
            chi_beta = character(beta, mu)
            if chi_beta:
                totals[(w, d)] = totals.get((w, d), Fraction(0)) + c * chi_alpha * chi_beta
    out: Dict[Tuple[int, int], int] = {}
    for wd, value in sorted(totals.items()):
        if value.denominator != 1 or value < 0:
            raise EquivarianceError(
                f"multiplicity {value} of {alpha} x {beta} is not a natural number",
                w=wd[0], d=wd[1],
            )
        if value:
            out[wd] = int(value)
    return out


def repstab_multiplicities(
    h: BigradedHomology, alpha: Sequence[int], beta: Sequence[int], t: Truncation
) -> Dict[Tuple[int, int], int]:
    """
    Multiplicity of S^alpha ⊠ S^beta in the (|alpha|, |beta|) coPROP
    component, per (w, d).

    alpha labels the roots (S_q) and beta the leaves (S_p). h must carry
    isotypic reports (homology_of(..., isotypic=True)).

    Raises:
        TruncationExceededError: |beta| beyond the arity bound
    """
    q, p = sum(alpha), sum(beta)
    if p > t.max_arity:
        raise TruncationExceededError(f"|beta| = {p} exceeds max_arity {t.max_arity}", p=p)
    result = pair(coprop_character(h, p, q, t), alpha, beta)
    logger.debug("multiplicities_computed", operad=h.operad, alpha=alpha, beta=beta, rows=result)
    return result


def leaf_multiplicities(
    h: BigradedHomology, p: int, q: int, t: Truncation
) -> Dict[Partition, Dict[Tuple[int, int], int]]:
    """
    S_p-isotypic decomposition of the (q, p) component with the roots
    forgotten: Σ_alpha dim S^alpha · mult(alpha, beta) for each beta.
    """
    char = coprop_character(h, p, q, t)
    out: Dict[Partition, Dict[Tuple[int, int], int]] = {}
    for beta in partitions(p):
        counted: Dict[Tuple[int, int], int] = {}
        for alpha in partitions(q):
            scale = irreducible_dimension(alpha)
            for wd, mult in pair(char, alpha, beta).items():
                counted[wd] = counted.get(wd, 0) + mult * scale
        if counted:
            out[beta] = counted
    return out

def schur_weyl_consistency(h: BigradedHomology, p: int, q: int, t: Truncation) -> bool:
    """Σ mult(alpha, beta) · dim S^alpha · dim S^beta against the coPROP dims."""
    char = coprop_character(h, p, q, t)
    counted: Dict[Tuple[int, int], int] = {}
    for alpha in partitions(q):
        for beta in partitions(p):
            scale = irreducible_dimension(alpha) * irreducible_dimension(beta)
            for wd, mult in pair(char, alpha, beta).items():
                counted[wd] = counted.get(wd, 0) + mult * scale
    expected = {(w, d): v for (_, _, w, d), v in coprop_completion(h, p, q, t).items()}
    ok = counted == expected
    if not ok:
        logger.warning(
            "schur_weyl_mismatch", operad=h.operad, p=p, q=q, counted=counted, expected=expected
        )
    return ok


def multiplicity_report(
    h: BigradedHomology,
    alpha: Sequence[int],
    beta: Sequence[int],
    t: Truncation,
    check: bool = True,
) -> MultiplicityReport:
    rows = repstab_multiplicities(h, alpha, beta, t)
    report = MultiplicityReport(
        operad=h.operad,
        wheeling=h.wheeling,
        alpha=list(alpha),
        beta=list(beta),
        rows=[MultiplicityRow(w=w, d=d, multiplicity=m) for (w, d), m in sorted(rows.items())],
    )
    if check:
        report.consistent = schur_weyl_consistency(h, sum(beta), sum(alpha), t)
    return report
