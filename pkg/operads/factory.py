# operads/factory.py
"""
Operad Factory Module

Registry of builtin operad presentations and construction of OperadTables
from names or operad spec files. Mirrors a provider registry: models are
registered under a name and instantiated on demand.
"""
import json
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from core.config import Settings
from core.exceptions import ConfigurationError, InvalidOperadError
from core.logging import get_logger
from exactla.combos import Combo, add_into

from .base import OperadModel
from .models import AssModel, ComModel, LieModel, PreLieModel
from .models.alg1 import Alg1Model
from .table import OperadTable

logger = get_logger(__name__)


class OperadName(str, Enum):
    """Builtin operads."""

    COM = "com"
    ASS = "ass"
    LIE = "lie"
    PRELIE = "prelie"
    ALG1 = "alg1"


_MODEL_REGISTRY: Dict[str, Callable[..., OperadModel]] = {}


def register_model(name: str, factory: Callable[..., OperadModel]) -> None:
    """
    Register a model factory under a builtin name.

    Args:
        name: Operad selector used on the command line
        factory: Callable returning a fresh OperadModel
    """
    _MODEL_REGISTRY[name] = factory
    logger.debug("operad_registered", operad=name)


register_model(OperadName.COM.value, ComModel)
register_model(OperadName.ASS.value, AssModel)
register_model(OperadName.LIE.value, LieModel)
register_model(OperadName.PRELIE.value, PreLieModel)


class StructureConstants(BaseModel):
    """Unital associative algebra by structure constants; index 0 is the unit."""

    dim: int = Field(..., description="Dimension including the unit")
    products: List[List[Any]] = Field(
        default_factory=list,
        description="Rows [j, k, l, c]: e_j e_k contains c e_l",
    )

    @field_validator("dim")
    @classmethod
    def validate_dim(cls, v: int) -> int:
        if v < 1:
            raise ValueError("dim must be at least 1")
        return v

    @field_validator("products")
    @classmethod
    def validate_rows(cls, v: List[List[Any]]) -> List[List[Any]]:
        for row in v:
            if len(row) != 4:
                raise ValueError(f"structure constant rows have four entries, got {row}")
        return v


class OperadSpec(BaseModel):
    """Operad spec file contents."""

    name: str = Field(..., description="Builtin operad name")
    arity1_structure_constants: Optional[StructureConstants] = Field(
        default=None, description="Required for alg1"
    )
    weight_rule: Optional[List[int]] = Field(
        default=None, description="Weights of the alg1 basis; omitted means ungraded"
    )
    max_arity: int = Field(default=5, description="Truncation arity")

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        v = v.lower()
        if v not in {item.value for item in OperadName}:
            raise ValueError(f"unknown operad {v!r}")
        return v

    @field_validator("max_arity")
    @classmethod
    def validate_max_arity(cls, v: int) -> int:
        if v < 1:
            raise ValueError("max_arity must be positive")
        return v


def load_operad_spec(path: str) -> OperadSpec:
    """
    Read and validate an operad spec file.

    Raises:
        ConfigurationError: unreadable file or invalid contents
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            payload = json.load(f)
        return OperadSpec.model_validate(payload)
    except (OSError, ValueError, ValidationError) as e:
        raise ConfigurationError(f"invalid operad spec file {path}: {e}", path=path) from e


def model_from_spec(spec: OperadSpec) -> OperadModel:
    if spec.name == OperadName.ALG1.value:
        constants = spec.arity1_structure_constants
        if constants is None:
            raise InvalidOperadError("alg1 needs arity1_structure_constants")
        return Alg1Model(constants.dim, constants.products, spec.weight_rule)
    if spec.arity1_structure_constants is not None or spec.weight_rule is not None:
        raise InvalidOperadError(f"{spec.name} takes no structure constants or weight rule")
    return _MODEL_REGISTRY[spec.name]()


def builtin(
    name: str,
    max_arity: int,
    data: Optional[StructureConstants] = None,
    weight_rule: Optional[List[int]] = None,
    settings: Optional[Settings] = None,
) -> OperadTable:
    """
    Build a truncated builtin operad.

    Args:
        name: one of com, ass, lie, prelie, alg1
        max_arity: truncation arity
        data: structure constants (alg1 only)
        weight_rule: alg1 weights; None leaves the algebra ungraded

    Raises:
        InvalidOperadError: unknown name or invalid structure constants
    """
    try:
        spec = OperadSpec(
            name=name,
            arity1_structure_constants=data,
            weight_rule=weight_rule,
            max_arity=max_arity,
        )
    except ValidationError as e:
        raise InvalidOperadError(f"invalid operad selector {name!r}: {e}", operad=name) from e
    return table_from_spec(spec, settings)


def table_from_spec(spec: OperadSpec, settings: Optional[Settings] = None) -> OperadTable:
    model = model_from_spec(spec)
    logger.info("operad_built", operad=spec.name, max_arity=spec.max_arity)
    return OperadTable(model, spec.max_arity, settings=settings)


def lie_to_ass(tag: Any) -> Combo:
    """The operad morphism Lie → Ass on left-normed basis tags."""
    return LieModel().to_ass(tag)


def map_combo(fn: Callable[[Any], Combo], x: Combo) -> Combo:
    out: Combo = {}
    for tag, c in x.items():
        add_into(out, fn(tag), c)
    return out
