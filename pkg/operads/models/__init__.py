"""Builtin operad presentations."""
from .alg1 import Alg1Model, dual_numbers, unitalized_field
from .ass import AssModel
from .com import ComModel
from .lie import LieModel
from .prelie import PreLieModel

__all__ = [
    'Alg1Model', 'AssModel', 'ComModel', 'LieModel', 'PreLieModel',
    'dual_numbers', 'unitalized_field',
]
