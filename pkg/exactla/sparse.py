# exactla/sparse.py
"""
Sparse rational matrices stored as dict-of-dict rows.

No zero entries are ever stored; indices are range-checked on construction.
Instances are treated as immutable once built.
"""
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .combos import Scalar, normalize_scalar


class SparseMatrix:
    """rows x cols matrix over Q; column j is the image of basis vector j."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Optional[Mapping[Tuple[int, int], Scalar]] = None,
    ):
        if rows < 0 or cols < 0:
            raise ValueError("matrix shape must be non-negative")
        self.rows = rows
        self.cols = cols
        self._data: Dict[int, Dict[int, Scalar]] = {}
        if entries:
            for (r, c), value in entries.items():
                self._accumulate(r, c, value)

    # ---------- construction --------------------------------------------------

    def _accumulate(self, r: int, c: int, value: Scalar) -> None:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
        if not value:
            return
        row = self._data.setdefault(r, {})
        new = row.get(c, 0) + value
        if new:
            row[c] = normalize_scalar(new)
        else:
            del row[c]
            if not row:
                del self._data[r]

    @classmethod
    def from_columns(
        cls, rows: int, columns: Sequence[Mapping[int, Scalar]]
    ) -> "SparseMatrix":
        m = cls(rows, len(columns))
        for c, column in enumerate(columns):
            for r, value in column.items():
                m._accumulate(r, c, value)
        return m

    @classmethod
    def from_rows(cls, cols: int, rows: Sequence[Mapping[int, Scalar]]) -> "SparseMatrix":
        m = cls(len(rows), cols)
        for r, row in enumerate(rows):
            for c, value in row.items():
                m._accumulate(r, c, value)
        return m

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @classmethod
    def from_triplets(
        cls, rows: int, cols: int, triplets: Sequence[Sequence]
    ) -> "SparseMatrix":
        """Inverse of to_triplets; values may be 'p/q' strings."""
        return cls(rows, cols, {(int(r), int(c)): Fraction(v) for r, c, v in triplets})

    # ---------- access -------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    def is_zero(self) -> bool:
        return not self._data

    def get(self, r: int, c: int) -> Scalar:
        return self._data.get(r, {}).get(c, 0)

    def row(self, r: int) -> Dict[int, Scalar]:
        return dict(self._data.get(r, {}))

    def row_items(self) -> Iterator[Tuple[int, Dict[int, Scalar]]]:
        for r in sorted(self._data):
            yield r, self._data[r]

    def entries(self) -> Iterator[Tuple[int, int, Scalar]]:
        for r in sorted(self._data):
            row = self._data[r]
            for c in sorted(row):
                yield r, c, row[c]

    def columns(self) -> List[Dict[int, Scalar]]:
        cols: List[Dict[int, Scalar]] = [{} for _ in range(self.cols)]
        for r, row in self._data.items():
            for c, value in row.items():
                cols[c][r] = value
        return cols

    def to_dense(self) -> List[List[Scalar]]:
        dense: List[List[Scalar]] = [[0] * self.cols for _ in range(self.rows)]
        for r, c, value in self.entries():
            dense[r][c] = value
        return dense

    def to_triplets(self) -> List[List]:
        return [[r, c, str(value)] for r, c, value in self.entries()]

    # ---------- arithmetic ---------------------------------------------------

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols, self.rows, {(c, r): v for r, c, v in self.entries()}
        )

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        result = SparseMatrix(self.rows, other.cols)
        for r, row in self._data.items():
            acc: Dict[int, Scalar] = {}
            for k, a in row.items():
                other_row = other._data.get(k)
                if not other_row:
                    continue
                for c, b in other_row.items():
                    acc[c] = acc.get(c, 0) + a * b
            clean = {c: normalize_scalar(v) for c, v in acc.items() if v}
            if clean:
                result._data[r] = clean
        return result

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        result = SparseMatrix(self.rows, self.cols)
        for r, c, v in self.entries():
            result._accumulate(r, c, v)
        for r, c, v in other.entries():
            result._accumulate(r, c, v)
        return result

    def scale(self, factor: Scalar) -> "SparseMatrix":
        return SparseMatrix(
            self.rows, self.cols, {(r, c): v * factor for r, c, v in self.entries()}
        )

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scale(-1)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def select_columns(self, indices: Sequence[int]) -> "SparseMatrix":
        position = {c: j for j, c in enumerate(indices)}
        result = SparseMatrix(self.rows, len(indices))
        for r, c, v in self.entries():
            if c in position:
                result._accumulate(r, position[c], v)
        return result

    def apply(self, vector: Mapping[int, Scalar]) -> Dict[int, Scalar]:
        """Matrix times a sparse column vector."""
        out: Dict[int, Scalar] = {}
        for r, row in self._data.items():
            total = sum(row[c] * v for c, v in vector.items() if c in row)
            if total:
                out[r] = normalize_scalar(total)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"
