# exactla/rank.py
"""
Exact rank, row reduction and quotients over Q.

The authoritative rank is fraction-free integer elimination on sparse rows
with an approximate Markowitz pivot (shortest row, then sparsest column).
A dense sympy elimination and a two-prime modular rank serve as cross-checks.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ, nextprime
from sympy.polys.matrices import DomainMatrix

from core.exceptions import RankDisagreementError
from core.logging import get_logger

from .combos import Scalar, normalize_scalar
from .sparse import SparseMatrix

logger = get_logger(__name__)

# Primes above 2^30 for the modular cross-check.
MODULAR_PRIMES: Tuple[int, int] = (int(nextprime(2**30)), int(nextprime(nextprime(2**30))))


# ---------- helpers ---------------------------------------------------------


def _primitive(row: Mapping[int, Scalar]) -> Dict[int, int]:
    """Clear denominators and divide out the content of a rational row."""
    if not row:
        return {}
    lcm = 1
    for value in row.values():
        if isinstance(value, Fraction):
            lcm = lcm * value.denominator // gcd(lcm, value.denominator)
    ints = {c: int(v * lcm) for c, v in row.items() if v}
    content = reduce(gcd, (abs(v) for v in ints.values()), 0)
    if content > 1:
        ints = {c: v // content for c, v in ints.items()}
    return ints


# ---------- exact rank ------------------------------------------------------


def rank(m: SparseMatrix) -> int:
    """Exact rank over Q; deterministic."""
    rows: Dict[int, Dict[int, int]] = {}
    col_rows: Dict[int, set] = defaultdict(set)
    for r, row in m.row_items():
        prim = _primitive(row)
        if prim:
            rows[r] = prim
            for c in prim:
                col_rows[c].add(r)

    found = 0
    while rows:
        pid = min(rows, key=lambda i: (len(rows[i]), i))
        prow = rows.pop(pid)
        for c in prow:
            col_rows[c].discard(pid)
        pcol = min(prow, key=lambda c: (len(col_rows[c]), c))
        a = prow[pcol]
        for rid in sorted(col_rows[pcol]):
            row = rows[rid]
            b = row[pcol]
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                x = new.get(c, 0) - b * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            for c in row:
                if c not in new:
                    col_rows[c].discard(rid)
            for c in new:
                if c not in row:
                    col_rows[c].add(rid)
            if new:
                rows[rid] = _primitive(new)
            else:
                del rows[rid]
        found += 1
    return found


def dense_rank(m: SparseMatrix) -> int:
    """Oracle: dense elimination over QQ through sympy's DomainMatrix."""
    if m.rows == 0 or m.cols == 0:
        return 0
    dod = {}
    for r, row in m.row_items():
        dod[r] = {
            c: QQ(Fraction(v).numerator, Fraction(v).denominator) for c, v in row.items()
        }
    return int(DomainMatrix(dod, (m.rows, m.cols), QQ).to_dense().rank())


def modular_rank(m: SparseMatrix, prime: int) -> int:
    """Rank over F_p; never larger than the rank over Q."""
    rows: List[Dict[int, int]] = []
    for _, row in m.row_items():
        reduced = {}
        for c, v in row.items():
            v = Fraction(v)
            if v.denominator % prime == 0:
                raise ValueError(f"denominator divisible by {prime}")
            x = v.numerator * pow(v.denominator, -1, prime) % prime
            if x:
                reduced[c] = x
        if reduced:
            rows.append(reduced)

    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c not in pivots:
                inv = pow(row[c], -1, prime)
                pivots[c] = {k: v * inv % prime for k, v in row.items()}
                break
            factor = row[c]
            for k, v in pivots[c].items():
                x = (row.get(k, 0) - factor * v) % prime
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
    return len(pivots)


def certified_modular_rank(m: SparseMatrix) -> Optional[int]:
    """Rank modulo two large primes; None unless both primes agree."""
    first, second = (modular_rank(m, p) for p in MODULAR_PRIMES)
    return first if first == second else None


def checked_rank(
    m: SparseMatrix, dense_max_cols: int = 0, modular: bool = False
) -> int:
    """
    Exact rank plus optional cross-checks.

    Raises:
        RankDisagreementError: an oracle disagrees with the exact result
    """
    exact = rank(m)
    if dense_max_cols and 0 < m.cols <= dense_max_cols:
        oracle = dense_rank(m)
        if oracle != exact:
            raise RankDisagreementError(
                f"sparse rank {exact} != dense rank {oracle}", shape=m.shape
            )
    if modular:
        certified = certified_modular_rank(m)
        if certified is not None and certified != exact:
            raise RankDisagreementError(
                f"sparse rank {exact} != modular rank {certified}", shape=m.shape
            )
    logger.debug("rank_computed", shape=m.shape, nnz=m.nnz(), rank=exact)
    return exact


# ---------- row reduction, kernels, quotients -------------------------------


@dataclass
class RowEchelon:
    """Fully reduced row echelon form: pivot column -> row with 1 at the pivot."""

    cols: int
    pivots: Dict[int, Dict[int, Scalar]] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def free_columns(self) -> List[int]:
        return [c for c in range(self.cols) if c not in self.pivots]

    def reduce(self, vector: Mapping[int, Scalar]) -> Dict[int, Scalar]:
        """Remainder of a vector modulo the row space."""
        out = dict(vector)
        for c in [c for c in out if c in self.pivots]:
            factor = out.get(c, 0)
            if not factor:
                continue
            for k, v in self.pivots[c].items():
                x = out.get(k, 0) - factor * v
                if x:
                    out[k] = normalize_scalar(x)
                else:
                    out.pop(k, None)
        return out

    def add_row(self, vector: Mapping[int, Scalar], prefer_max: bool = True) -> bool:
        """Insert a relation; returns True when it raised the rank."""
        row = self.reduce(vector)
        if not row:
            return False
        pc = max(row) if prefer_max else min(row)
        inv = Fraction(1) / Fraction(row[pc])
        row = {k: normalize_scalar(v * inv) for k, v in row.items()}
        for other in self.pivots.values():
            factor = other.get(pc)
            if factor:
                for k, v in row.items():
                    x = other.get(k, 0) - factor * v
                    if x:
                        other[k] = normalize_scalar(x)
                    else:
                        other.pop(k, None)
        self.pivots[pc] = row
        return True


def row_echelon(
    cols: int, rows: Sequence[Mapping[int, Scalar]], prefer_max: bool = True
) -> RowEchelon:
    echelon = RowEchelon(cols)
    for row in rows:
        echelon.add_row(row, prefer_max=prefer_max)
    return echelon


@dataclass
class Subspace:
    """
    Span of vectors that restrict to the unit basis on `free` columns.

    Coordinates of any vector inside the subspace are its entries on the
    free columns.
    """

    dim_ambient: int
    free: List[int]
    vectors: List[Dict[int, Scalar]]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def coordinates(self, vector: Mapping[int, Scalar]) -> Dict[int, Scalar]:
        return {j: vector[f] for j, f in enumerate(self.free) if vector.get(f)}

    def contains(self, vector: Mapping[int, Scalar]) -> bool:
        rebuilt: Dict[int, Scalar] = {}
        for j, coeff in self.coordinates(vector).items():
            for k, v in self.vectors[j].items():
                rebuilt[k] = rebuilt.get(k, 0) + coeff * v
        clean = {k: v for k, v in rebuilt.items() if v}
        target = {k: v for k, v in vector.items() if v}
        return clean == target

    def as_matrix(self) -> SparseMatrix:
        return SparseMatrix.from_columns(self.dim_ambient, self.vectors)


def nullspace(m: SparseMatrix) -> Subspace:
    """Kernel of m (as a map on column space)."""
    echelon = row_echelon(m.cols, [row for _, row in m.row_items()])
    return kernel_from_echelon(echelon)


def kernel_from_echelon(echelon: RowEchelon) -> Subspace:
    free = echelon.free_columns()
    position = {f: j for j, f in enumerate(free)}
    vectors: List[Dict[int, Scalar]] = [{f: 1} for f in free]
    for pc, prow in echelon.pivots.items():
        for k, v in prow.items():
            if k != pc:
                vectors[position[k]][pc] = normalize_scalar(-v)
    return Subspace(echelon.cols, free, vectors)


def intersect_kernels(cols: int, matrices: Sequence[SparseMatrix]) -> Subspace:
    """Common kernel of several maps with the same source."""
    echelon = RowEchelon(cols)
    for m in matrices:
        if m.cols != cols:
            raise ValueError("kernel maps must share their source")
        for _, row in m.row_items():
            echelon.add_row(row)
    return kernel_from_echelon(echelon)


@dataclass
class Quotient:
    """
    Quotient of k^n by the span of relations.

    Representatives are the non-pivot basis vectors (the smallest indices
    survive, since pivots are taken at the largest column).
    """

    dim_ambient: int
    representatives: List[int]
    _projection: Dict[int, Dict[int, Scalar]]

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def project(self, index: int) -> Dict[int, Scalar]:
        """Coordinates (over representatives) of ambient basis vector `index`."""
        return self._projection[index]

    def project_vector(self, vector: Mapping[int, Scalar]) -> Dict[int, Scalar]:
        out: Dict[int, Scalar] = {}
        for index, coeff in vector.items():
            for j, v in self._projection[index].items():
                x = out.get(j, 0) + coeff * v
                if x:
                    out[j] = normalize_scalar(x)
                else:
                    out.pop(j, None)
        return out


def quotient_basis(dim: int, relations: Sequence[Mapping[int, Scalar]]) -> Quotient:
    echelon = row_echelon(dim, relations, prefer_max=True)
    reps = echelon.free_columns()
    position = {f: j for j, f in enumerate(reps)}
    projection: Dict[int, Dict[int, Scalar]] = {f: {position[f]: 1} for f in reps}
    for pc, prow in echelon.pivots.items():
        projection[pc] = {
            position[k]: normalize_scalar(-v) for k, v in prow.items() if k != pc
        }
    return Quotient(dim, reps, projection)
