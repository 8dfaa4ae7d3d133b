"""Exact rational linear algebra, chain complexes and S_n characters."""
from .characters import (
    character,
    character_table,
    irreducible_dimension,
    partitions,
)
from .complex import BlockKey, ChainComplex, direct_sum
from .isotypic import IsotypicReport, isotypic_homology
from .rank import (
    Quotient,
    Subspace,
    checked_rank,
    dense_rank,
    modular_rank,
    nullspace,
    quotient_basis,
    rank,
)
from .sparse import SparseMatrix

__all__ = [
    'BlockKey', 'ChainComplex', 'direct_sum',
    'IsotypicReport', 'isotypic_homology',
    'Quotient', 'Subspace', 'SparseMatrix',
    'character', 'character_table', 'irreducible_dimension', 'partitions',
    'checked_rank', 'dense_rank', 'modular_rank', 'nullspace', 'quotient_basis', 'rank',
]
