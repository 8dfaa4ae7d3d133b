# stability/report.py
"""
Report models and their renderings.

Every CLI subcommand emits one of these models. JSON output is the model
dump with sorted keys; CSV and text output are built from the same table
of rows, so all three formats carry the same numbers.
"""
import csv
import io
import json
from enum import Enum
from typing import Any, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, computed_field, field_validator

from core.exceptions import StableRangeMismatchError
from species.core import Truncation


class OutputFormat(str, Enum):
    """Rendering of a report."""
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class Theorem(str, Enum):
    """Comparison harnesses."""
    MAIN1 = "main1"
    MAIN2 = "main2"
    GRAPHCX1 = "graphcx1"
    GRAPHCX2 = "graphcx2"
    NEWFUCHS = "newfuchs"
    LQT = "lqt"
    CALCHOM = "calchom"
    NATURALITY = "naturality"


class ReportStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


Table = Tuple[List[str], List[List[Any]]]


class BlockReport(BaseModel):
    """Homology dimension of one block."""
    part: str = Field(default="", description="operadic | wheeled | cyclic | ce")
    n: int = Field(..., description="Arity (or coefficient arity p for CE runs)")
    w: int = Field(..., description="Weight")
    d: int = Field(..., description="Homological degree")
    dim: int = Field(..., description="Dimension", json_schema_extra={"example": 2})
    trusted: bool = Field(default=True, description="False on truncation boundaries")


class IsotypicRow(BaseModel):
    """Multiplicity of one irreducible of S_n in one homology block."""
    part: str = Field(..., description="operadic | wheeled")
    n: int
    partition: List[int] = Field(..., json_schema_extra={"example": [2, 1]})
    w: int
    d: int
    multiplicity: int


class HomologyReport(BaseModel):
    """Homology of one complex, blockwise."""
    kind: str = Field(..., description="bar | wbar | hc | ce", json_schema_extra={"example": "wbar"})
    operad: str = Field(..., json_schema_extra={"example": "lie"})
    wheeling: Optional[str] = Field(default=None, description="trivial | completion")
    truncation: Truncation
    algebra: Optional[str] = Field(default=None, description="der+ | sder+ | semidirect")
    dim_v: Optional[int] = Field(default=None, description="dim V for CE runs")
    p: Optional[int] = Field(default=None, description="Number of V* coefficient factors")
    q: Optional[int] = Field(default=None, description="Number of V coefficient factors")
    blocks: List[BlockReport] = Field(default_factory=list)
    isotypic: List[IsotypicRow] = Field(default_factory=list)

    def table(self) -> Table:
        if self.isotypic:
            headers = ["part", "n", "partition", "w", "d", "multiplicity"]
            rows = [
                [r.part, r.n, _partition(r.partition), r.w, r.d, r.multiplicity]
                for r in self.isotypic
            ]
            return headers, rows
        headers = ["part", "n", "w", "d", "dim", "trusted"]
        return headers, [[b.part, b.n, b.w, b.d, b.dim, b.trusted] for b in self.blocks]


class ComparisonRow(BaseModel):
    """Left and right side of a comparison on one block."""
    dim_v: Optional[int] = Field(default=None, description="dim V (None for dimension-free checks)")
    n: Optional[int] = Field(default=None, description="Arity, where the block has one")
    part: str = Field(default="", description="Which piece of the comparison the row belongs to")
    w: int
    d: int
    p: int = 0
    q: int = 0
    left: int = Field(..., description="Left-hand side dimension")
    right: int = Field(..., description="Right-hand side dimension")
    cross: Optional[int] = Field(default=None, description="Independent route to the left side")
    in_stable_range: bool = True
    trusted: bool = True

    @computed_field
    @property
    def match(self) -> bool:
        return self.left == self.right and (self.cross is None or self.cross == self.left)

    @property
    def asserted(self) -> bool:
        return self.in_stable_range and self.trusted


class ComparisonReport(BaseModel):
    """Outcome of one theorem harness run."""
    theorem: Theorem
    operad: str
    status: ReportStatus = ReportStatus.PASS
    reason: str = ""
    rows: List[ComparisonRow] = Field(default_factory=list)

    def mismatches(self) -> List[ComparisonRow]:
        return [r for r in self.rows if r.asserted and not r.match]

    def finalize(self) -> "ComparisonReport":
        """Sort rows and set the status from them."""
        self.rows.sort(key=lambda r: (r.part, r.dim_v or 0, r.p, r.q, r.n or 0, r.w, r.d))
        if self.status != ReportStatus.SKIPPED:
            self.status = ReportStatus.FAIL if self.mismatches() else ReportStatus.PASS
        return self

    def assert_stable(self) -> None:
        """
        Raises:
            StableRangeMismatchError: a trusted in-range block differs
        """
        bad = self.mismatches()
        if bad:
            first = bad[0]
            raise StableRangeMismatchError(
                f"{self.theorem.value} failed for {self.operad} on {len(bad)} block(s)",
                dim_v=first.dim_v, w=first.w, d=first.d, p=first.p, q=first.q,
                left=first.left, right=first.right,
            )

    def table(self) -> Table:
        headers = [
            "part", "dim_v", "n", "p", "q", "w", "d", "left", "right", "cross",
            "in_range", "trusted", "match",
        ]
        rows = [
            [
                r.part, _blank(r.dim_v), _blank(r.n), r.p, r.q, r.w, r.d, r.left, r.right,
                _blank(r.cross), r.in_stable_range, r.trusted, r.match,
            ]
            for r in self.rows
        ]
        return headers, rows


class MultiplicityRow(BaseModel):
    w: int
    d: int
    multiplicity: int = Field(..., ge=0)


class MultiplicityReport(BaseModel):
    """Multiplicities of S^alpha ⊠ S^beta in one coPROP component."""
    operad: str
    wheeling: str
    alpha: List[int] = Field(..., description="Partition of q (roots)", json_schema_extra={"example": []})
    beta: List[int] = Field(..., description="Partition of p (leaves)", json_schema_extra={"example": [1]})
    rows: List[MultiplicityRow] = Field(default_factory=list)
    consistent: Optional[bool] = Field(
        default=None, description="Schur-Weyl count agrees with the coPROP dims"
    )

    @field_validator("alpha", "beta")
    @classmethod
    def validate_partition(cls, v: List[int]) -> List[int]:
        """Parts must be positive and weakly decreasing."""
        if any(x <= 0 for x in v) or list(v) != sorted(v, reverse=True):
            raise ValueError(f"not a partition: {v}")
        return v

    def table(self) -> Table:
        return ["w", "d", "multiplicity"], [[r.w, r.d, r.multiplicity] for r in self.rows]


Report = Union[HomologyReport, ComparisonReport, MultiplicityReport]


def _blank(value: Optional[int]) -> Any:
    return "" if value is None else value


def _partition(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in parts) + ")"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_json(report: BaseModel) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def render_csv(report: Report) -> str:
    headers, rows = report.table()
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return buffer.getvalue()


def render_text(report: Report) -> str:
    """Fixed-width table under a one-line title."""
    headers, rows = report.table()
    cells = [headers] + [[_cell(x) for x in row] for row in rows]
    widths = [max(len(row[j]) for row in cells) for j in range(len(headers))]
    lines = [_title(report)]
    for k, row in enumerate(cells):
        lines.append("  ".join(value.rjust(widths[j]) for j, value in enumerate(row)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


def _title(report: Report) -> str:
    if isinstance(report, ComparisonReport):
        title = f"{report.theorem.value} {report.operad}: {report.status.value.upper()}"
        return f"{title} ({report.reason})" if report.reason else title
    if isinstance(report, MultiplicityReport):
        return (
            f"multiplicities {report.operad} ({report.wheeling}) "
            f"alpha={_partition(report.alpha)} beta={_partition(report.beta)}"
        )
    parts = [report.kind, report.operad]
    if report.wheeling:
        parts.append(report.wheeling)
    if report.algebra:
        parts.append(f"{report.algebra} dimV={report.dim_v} p={report.p} q={report.q}")
    return " ".join(parts)


def render(report: Report, fmt: OutputFormat) -> str:
    fmt = OutputFormat(fmt)
    if fmt == OutputFormat.JSON:
        return render_json(report)
    if fmt == OutputFormat.CSV:
        return render_csv(report)
    return render_text(report)
