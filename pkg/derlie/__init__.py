"""Derivation Lie algebras of free algebras, divergence and CE complexes."""
from .ce import (
    CEAlgebra,
    CEHomology,
    DerivationSetup,
    DerivedDivergenceRow,
    KoszulCheck,
    SurjectivityRow,
    ce_complex,
    ce_homology,
    chain_gl_action,
    coefficient_basis,
    derivation_setup,
    derived_divergence_check,
    divergence_surjectivity_check,
    koszul_check,
    sder_homology_direct,
    semidirect_homology,
)
from .derivations import (
    DerivationVector,
    DerPlus,
    Envelope,
    SDerPlus,
    TraceModule,
    TraceSpace,
    apply_derivation,
    bracket,
    check_cocycle,
    derivation_weight_blocks,
    divergence,
    induced_action,
    prelie_product,
    sder_basis,
    universal_derivation,
)
from .free_algebra import Evaluation, FreeAlgebra, evaluated_dim, torus_weight
from .invariants import gl_invariants, invariant_subspaces, restrict_to_subspaces

__all__ = [
    'CEAlgebra', 'CEHomology', 'DerivationSetup', 'DerivedDivergenceRow', 'KoszulCheck', 'SurjectivityRow',
    'ce_complex', 'ce_homology', 'chain_gl_action', 'coefficient_basis', 'derivation_setup',
    'derived_divergence_check', 'divergence_surjectivity_check', 'koszul_check',
    'sder_homology_direct', 'semidirect_homology',
    'DerivationVector', 'DerPlus', 'Envelope', 'SDerPlus', 'TraceModule', 'TraceSpace',
    'apply_derivation', 'bracket', 'check_cocycle', 'derivation_weight_blocks', 'divergence',
    'induced_action', 'prelie_product', 'sder_basis', 'universal_derivation',
    'Evaluation', 'FreeAlgebra', 'evaluated_dim', 'torus_weight',
    'gl_invariants', 'invariant_subspaces', 'restrict_to_subspaces',
]
