"""Cyclic complexes and cyclic homology of twisted associative algebras."""
from .calchom import BlockComparison, CalchomResult, CheckStatus, calchom_check
from .complex import (
    CyclicHomology,
    cyclic_complex,
    cyclic_homology,
    cyclic_words,
    hc0_dims,
    normal_form,
    word_differential,
)

__all__ = [
    'BlockComparison', 'CalchomResult', 'CheckStatus', 'calchom_check',
    'CyclicHomology', 'cyclic_complex', 'cyclic_homology', 'cyclic_words',
    'hc0_dims', 'normal_form', 'word_differential',
]
