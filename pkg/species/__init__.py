"""Linear species with explicit bases, their products and dimension series."""
from .core import Species, Truncation, transposition_word
from .products import (
    canonical_rotation,
    cauchy,
    compose,
    cyc,
    derivative,
    from_dims,
    from_operad,
    monoidal_unit,
    ordered_set_partitions,
    set_partitions,
    suspend,
    uass,
    ucom,
    unit_species,
)

__all__ = [
    'Species', 'Truncation', 'transposition_word',
    'canonical_rotation', 'cauchy', 'compose', 'cyc', 'derivative',
    'from_dims', 'from_operad', 'monoidal_unit', 'ordered_set_partitions',
    'set_partitions', 'suspend', 'uass', 'ucom', 'unit_species',
]
