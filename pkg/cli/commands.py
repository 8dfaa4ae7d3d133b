# cli/commands.py
"""
One function per subcommand: build the report a run asks for.

Each command takes the validated RunConfig and the run's Settings and
returns a report model; rendering and exit codes are left to cli.main.
"""
from typing import Dict, FrozenSet, List, Optional

from core.config import Settings
from core.exceptions import ConfigurationError
from core.logging import get_logger
from cyclic.complex import cyclic_homology
from derlie.ce import CEAlgebra, ce_homology
from exactla.complex import BlockKey
from exactla.isotypic import IsotypicReport, isotypic_homology
from operads.bimodule import DerivativeAlgebra, indecomposables_zero
from operads.factory import builtin
from stability.compare import (
    compare_calchom,
    compare_graphcx,
    compare_lqt,
    compare_main1,
    compare_main2,
    compare_newfuchs,
    naturality_square,
)
from stability.report import (
    BlockReport,
    ComparisonReport,
    HomologyReport,
    IsotypicRow,
    MultiplicityReport,
    Report,
    Theorem,
)
from stability.repstab import multiplicity_report
from wheeledbar.assembly import bar, wheeled_bar_split
from wheeledbar.completion import wheeled_operad
from wheeledbar.coprop import homology_of

from .config import CyclicSource, RunConfig, Subcommand

logger = get_logger(__name__)


def _blocks(
    dims: Dict[BlockKey, int], untrusted: FrozenSet[BlockKey], part: str
) -> List[BlockReport]:
    return [
        BlockReport(part=part, n=n, w=w, d=d, dim=v, trusted=(n, w, d) not in untrusted)
        for (n, w, d), v in sorted(dims.items()) if v
    ]


def _isotypic_rows(part: str, n: int, reports: List[IsotypicReport]) -> List[IsotypicRow]:
    return [
        IsotypicRow(part=part, n=n, partition=list(r.partition), w=w, d=d, multiplicity=m)
        for r in reports
        for (w, d), m in sorted(r.multiplicity.items())
    ]


def run_bar(config: RunConfig, settings: Settings) -> HomologyReport:
    o = config.table(settings)
    c = bar(o, config.truncation, settings)
    c.check_equivariance()
    dims = c.homology_dims(parallelism=settings.parallelism)
    report = HomologyReport(
        kind="bar", operad=o.name, truncation=config.truncation,
        blocks=_blocks(dims, c.untrusted, "operadic"),
    )
    if config.isotypic:
        for n in c.arities():
            report.isotypic.extend(_isotypic_rows("operadic", n, isotypic_homology(c, n)))
    return report


def run_wbar(config: RunConfig, settings: Settings) -> HomologyReport:
    o = config.table(settings)
    data = wheeled_operad(o, config.wheeling, config.truncation)
    h = homology_of(wheeled_bar_split(data, config.truncation, settings), settings, config.isotypic)
    report = HomologyReport(
        kind="wbar", operad=o.name, wheeling=config.wheeling.value, truncation=config.truncation,
        blocks=_blocks(h.operadic, h.untrusted, "operadic") + _blocks(h.wheeled, h.untrusted, "wheeled"),
    )
    for (part, n), reports in sorted(h.isotypic.items()):
        report.isotypic.extend(_isotypic_rows(part, n, reports))
    return report


def run_hc(config: RunConfig, settings: Settings) -> HomologyReport:
    """
    HC of ∂(Ō)₀ (or ∂(Ō) itself). For an alg1 spec file ∂(Ō)₀ is the
    augmentation ideal Ā, so this is how a user algebra is passed in.
    """
    o = config.table(settings)
    t = config.truncation
    if config.cyclic_source == CyclicSource.DERIVATIVE:
        algebra = DerivativeAlgebra(o, reduced=config.reduced)
    else:
        ind = indecomposables_zero(o, t)
        if not ind.free:
            logger.warning("indecomposables_not_free", operad=o.name, dims=ind.dims)
        algebra = ind.reduced if config.reduced else ind.full
    hc = cyclic_homology(algebra, t, settings, isotypic=config.isotypic)
    report = HomologyReport(
        kind="hc", operad=o.name, truncation=t, blocks=_blocks(hc.dims, hc.untrusted, "cyclic"),
    )
    for n, reports in sorted(hc.isotypic.items()):
        report.isotypic.extend(_isotypic_rows("cyclic", n, reports))
    return report


def run_ce(config: RunConfig, settings: Settings) -> HomologyReport:
    o = config.table(settings)
    dim_v = config.dims[0]
    p, q = config.coefficients[0]
    weights: Optional[List[int]] = None
    if config.weight is not None:
        weights = [config.weight]
    elif not config.full and o.graded:
        weights = [p - q] if p >= q else []
    result = ce_homology(
        config.algebra, o, dim_v, (p, q), config.truncation, settings,
        invariant=not config.full, weights=weights,
    )
    untrusted = frozenset((p, w, d) for w, d in result.untrusted)
    dims = {(p, w, d): v for (w, d), v in result.dims.items()}
    return HomologyReport(
        kind="ce", operad=o.name, truncation=config.truncation,
        algebra=result.algebra, dim_v=dim_v, p=p, q=q,
        blocks=_blocks(dims, untrusted, "ce"),
    )


def run_compare(config: RunConfig, settings: Settings) -> ComparisonReport:
    theorem = config.theorem
    t = config.truncation
    if theorem == Theorem.LQT:
        special = config.algebra == CEAlgebra.SDER_PLUS
        return _merge([
            compare_lqt(dim_v, t.max_degree, special, settings) for dim_v in config.dims
        ])
    if theorem == Theorem.NATURALITY:
        arity = t.max_arity + 1
        source = builtin("lie", arity, settings=settings)
        target = builtin("ass", arity, settings=settings)
        return _merge([naturality_square(source, target, dim_v=d, settings=settings) for d in config.dims])
    o = config.table(settings)
    if theorem == Theorem.MAIN1:
        return compare_main1(o, config.dims, t, config.coefficients, settings, config.isotypic)
    if theorem == Theorem.MAIN2:
        return compare_main2(o, config.dims, t, config.coefficients, settings, config.isotypic)
    if theorem in (Theorem.GRAPHCX1, Theorem.GRAPHCX2):
        return compare_graphcx(
            o, config.dims, t, config.coefficients,
            completion=theorem == Theorem.GRAPHCX2, settings=settings,
        )
    if theorem == Theorem.NEWFUCHS:
        weight = 1 if config.weight is None else config.weight
        return _merge([compare_newfuchs(o, dim_v, weight, settings) for dim_v in config.dims])
    if theorem == Theorem.CALCHOM:
        return compare_calchom(o, t, settings)
    raise ConfigurationError(f"unknown theorem {theorem!r}")


def _merge(reports: List[ComparisonReport]) -> ComparisonReport:
    first = reports[0]
    merged = ComparisonReport(theorem=first.theorem, operad=first.operad)
    for report in reports:
        merged.rows.extend(report.rows)
    return merged.finalize()


def run_mult(config: RunConfig, settings: Settings) -> MultiplicityReport:
    o = config.table(settings)
    t = config.truncation
    data = wheeled_operad(o, config.wheeling, t)
    h = homology_of(wheeled_bar_split(data, t, settings), settings, isotypic=True)
    return multiplicity_report(h, config.alpha, config.beta, t, check=config.check)


COMMANDS = {
    Subcommand.BAR: run_bar,
    Subcommand.WBAR: run_wbar,
    Subcommand.HC: run_hc,
    Subcommand.CE: run_ce,
    Subcommand.COMPARE: run_compare,
    Subcommand.MULT: run_mult,
}


def execute(config: RunConfig, settings: Settings) -> Report:
    return COMMANDS[config.subcommand](config, settings)
