# cli/config.py
"""
Run configuration for one CLI invocation.

Flags are parsed into a RunConfig; pydantic validation errors surface as
exit code 1 like every other configuration error.
"""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from core.config import Settings, get_settings
from core.exceptions import ConfigurationError
from core.logging import get_logger
from derlie.ce import CEAlgebra
from operads.factory import OperadName, builtin, load_operad_spec, table_from_spec
from operads.table import OperadTable
from species.core import Truncation
from stability.report import OutputFormat, Theorem
from wheeledbar.completion import Wheeling

logger = get_logger(__name__)


class Subcommand(str, Enum):
    """CLI subcommands."""
    BAR = "bar"
    WBAR = "wbar"
    HC = "hc"
    CE = "ce"
    COMPARE = "compare"
    MULT = "mult"


class CyclicSource(str, Enum):
    """Which twisted algebra the hc subcommand takes cyclic homology of."""
    INDECOMPOSABLES = "indecomposables"
    DERIVATIVE = "derivative"


class RunConfig(BaseModel):
    """Validated flags of one run."""
    subcommand: Subcommand
    operad: str = Field(default="com", description="Builtin operad selector", json_schema_extra={"example": "lie"})
    spec_file: Optional[str] = Field(default=None, description="Operad spec file (overrides --operad)")
    truncation: Truncation
    dims: List[int] = Field(default_factory=lambda: [4], description="dim V values")
    coefficients: List[Tuple[int, int]] = Field(
        default_factory=lambda: [(0, 0)], description="Coefficient pairs (p, q)"
    )
    output_format: OutputFormat = Field(default=OutputFormat.TEXT, description="json | csv | text")
    out: Optional[str] = Field(default=None, description="Write the report here instead of stdout")
    cache_dir: Optional[str] = Field(default=None, description="Overrides WHEELHOUSE_CACHE")
    parallelism: Optional[int] = Field(default=None, description="Worker count")
    reports_dir: Optional[str] = Field(default=None, description="Directory for compare JSON reports")
    debug: bool = False

    # subcommand options
    wheeling: Wheeling = Wheeling.TRIVIAL
    algebra: CEAlgebra = CEAlgebra.DER_PLUS
    theorem: Optional[Theorem] = None
    weight: Optional[int] = None
    full: bool = Field(default=False, description="CE homology of the whole complex, not the invariants")
    isotypic: bool = False
    cyclic_source: CyclicSource = CyclicSource.INDECOMPOSABLES
    reduced: bool = True
    alpha: List[int] = Field(default_factory=list)
    beta: List[int] = Field(default_factory=list)
    check: bool = True

    @field_validator("operad")
    @classmethod
    def validate_operad(cls, v: str) -> str:
        """Known builtin selector."""
        v = v.lower()
        if v not in {item.value for item in OperadName}:
            raise ValueError(f"unknown operad {v!r}")
        return v

    @field_validator("dims")
    @classmethod
    def validate_dims(cls, v: List[int]) -> List[int]:
        if not v or any(x < 1 for x in v):
            raise ValueError("dim V values must be positive")
        return sorted(set(v))

    @field_validator("coefficients")
    @classmethod
    def validate_coefficients(cls, v: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        if any(p < 0 or q < 0 for p, q in v):
            raise ValueError("coefficient arities must be non-negative")
        return sorted(set(v))

    @field_validator("parallelism")
    @classmethod
    def validate_positive(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v <= 0:
            raise ValueError("must be a positive integer")
        return v

    @field_validator("weight")
    @classmethod
    def validate_weight(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 0:
            raise ValueError("must be a non-negative integer")
        return v

    @field_validator("alpha", "beta")
    @classmethod
    def validate_partition(cls, v: List[int]) -> List[int]:
        if any(x <= 0 for x in v) or list(v) != sorted(v, reverse=True):
            raise ValueError(f"not a partition: {v}")
        return v

    @model_validator(mode="after")
    def validate_subcommand(self) -> "RunConfig":
        """Options every subcommand needs."""
        if self.subcommand == Subcommand.COMPARE and self.theorem is None:
            raise ValueError("compare needs --theorem")
        if self.subcommand == Subcommand.CE and len(self.dims) != 1:
            raise ValueError("ce takes exactly one --dimv")
        if self.subcommand == Subcommand.CE and len(self.coefficients) != 1:
            raise ValueError("ce takes exactly one coefficient pair")
        return self

    def settings(self) -> Settings:
        """Environment settings with this run's overrides."""
        settings = get_settings()
        update = {"debug": self.debug or settings.debug}
        if self.cache_dir is not None:
            update["cache_dir"] = self.cache_dir
        if self.parallelism is not None:
            update["parallelism"] = self.parallelism
        if self.reports_dir is not None:
            update["reports_dir"] = self.reports_dir
        return settings.model_copy(update=update)

    def table(self, settings: Settings) -> OperadTable:
        """
        The operad, one arity above the truncation.

        Wheeled constructions and free algebras evaluate O one arity past
        the blocks they build.

        Raises:
            ConfigurationError: alg1 without a spec file
        """
        arity = self.truncation.max_arity + 1
        if self.spec_file is not None:
            spec = load_operad_spec(self.spec_file)
            spec = spec.model_copy(update={"max_arity": arity})
            return table_from_spec(spec, settings)
        if self.operad == OperadName.ALG1.value:
            raise ConfigurationError("alg1 needs structure constants from --spec-file")
        return builtin(self.operad, arity, settings=settings)
