"""Decorated graphs and the (wheeled) bar constructions built on them."""
from .assembly import (
    ChainMap,
    WheeledBar,
    bar,
    chain_map,
    graph_differential,
    trivial_wheeled_bar,
    wheeled_bar,
    wheeled_bar_parts,
    wheeled_bar_split,
)
from .basis import GraphBasis
from .completion import (
    WheeledOperadData,
    Wheeling,
    trivial_wheeling,
    wheeled_completion,
    wheeled_operad,
)
from .coprop import (
    BigradedHomology,
    bigraded_homology,
    coprop_chain_dims,
    coprop_completion,
    graded_symmetric_dims,
    homology_of,
)
from .graphs import Graph, LabelContext, canonicalize, decode

__all__ = [
    'ChainMap', 'WheeledBar', 'bar', 'chain_map', 'graph_differential',
    'trivial_wheeled_bar', 'wheeled_bar', 'wheeled_bar_parts', 'wheeled_bar_split',
    'GraphBasis',
    'WheeledOperadData', 'Wheeling', 'trivial_wheeling', 'wheeled_completion',
    'wheeled_operad',
    'BigradedHomology', 'bigraded_homology', 'coprop_chain_dims', 'coprop_completion',
    'graded_symmetric_dims', 'homology_of',
    'Graph', 'LabelContext', 'canonicalize', 'decode',
]
