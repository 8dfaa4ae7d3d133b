"""Stable-range comparisons, multiplicity tables and their reports."""
from .compare import (
    compare_calchom,
    compare_graphcx,
    compare_lqt,
    compare_main1,
    compare_main2,
    compare_newfuchs,
    naturality_square,
)
from .report import (
    BlockReport,
    ComparisonReport,
    ComparisonRow,
    HomologyReport,
    IsotypicRow,
    MultiplicityReport,
    MultiplicityRow,
    OutputFormat,
    ReportStatus,
    Theorem,
    render,
)
from .repstab import (
    coprop_character,
    leaf_multiplicities,
    multiplicity_report,
    repstab_multiplicities,
    schur_weyl_consistency,
)

__all__ = [
    'compare_calchom', 'compare_graphcx', 'compare_lqt', 'compare_main1', 'compare_main2',
    'compare_newfuchs', 'naturality_square',
    'BlockReport', 'ComparisonReport', 'ComparisonRow', 'HomologyReport', 'IsotypicRow',
    'MultiplicityReport', 'MultiplicityRow', 'OutputFormat', 'ReportStatus', 'Theorem', 'render',
    'coprop_character', 'leaf_multiplicities', 'multiplicity_report', 'repstab_multiplicities', 'schur_weyl_consistency',
]
