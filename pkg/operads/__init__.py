"""Operads as species with partial compositions, and the derivative bimodule."""
from .base import OperadModel
from .bimodule import (
    DerivativeAlgebra,
    Indecomposables,
    QuotientAlgebra,
    TwistedAlgebra,
    commutator_quotient,
    derivative_bimodule,
    indecomposables_zero,
    wheeled_part,
)
from .factory import (
    OperadName,
    OperadSpec,
    StructureConstants,
    builtin,
    lie_to_ass,
    load_operad_spec,
    register_model,
    table_from_spec,
)
from .table import OperadTable, adjacent

__all__ = [
    'OperadModel', 'OperadTable', 'adjacent',
    'DerivativeAlgebra', 'Indecomposables', 'QuotientAlgebra', 'TwistedAlgebra',
    'commutator_quotient', 'derivative_bimodule', 'indecomposables_zero', 'wheeled_part',
    'OperadName', 'OperadSpec', 'StructureConstants', 'builtin', 'lie_to_ass',
    'load_operad_spec', 'register_model', 'table_from_spec',
]
