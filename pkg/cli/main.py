# cli/main.py
"""
Command-line entry point.

    wheelhouse.py bar      --operad com --max-arity 5
    wheelhouse.py wbar     --operad lie --max-arity 5 --wheeling trivial
    wheelhouse.py hc       --operad com --max-arity 5
    wheelhouse.py ce       --operad com --algebra der+ --dimv 4 --p 1 --q 0
    wheelhouse.py compare  --theorem newfuchs --dimv 4 --weight 1
    wheelhouse.py mult     --operad lie --alpha "" --beta 3

Exit codes: 0 success, 1 invalid configuration, 2 failed check (a
stable-range mismatch, d∘d ≠ 0 or a broken equivariance).
"""
import argparse
from typing import List, NoReturn, Optional, Sequence, TextIO

from core.errors.codes import EXIT_OK
from core.errors.handlers import handle_error
from core.exceptions import ConfigurationError
from core.logging import configure_logging, get_logger
from derlie.ce import CEAlgebra
from stability.report import ComparisonReport, OutputFormat, Theorem
from wheeledbar.completion import Wheeling

from .commands import execute
from .config import CyclicSource, RunConfig, Subcommand
from .output import emit, save_comparison

logger = get_logger(__name__)

class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; here they are configuration errors."""

    def error(self, message: str) -> NoReturn:
        raise ConfigurationError(f"{self.prog}: {message}")

def _int_list(value: str) -> List[int]:
    """'3,1' -> [3, 1]; the empty string is the empty partition."""
    value = value.strip().strip("()")
    if not value:
        return []
    try:
        return [int(x) for x in value.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}") from e

def _coefficient(value: str) -> tuple:
    parts = _int_list(value)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"coefficients are written p,q; got {value!r}")
    return tuple(parts)

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--operad", default="com", help="com | ass | lie | prelie (alg1 via --spec-file)")
    common.add_argument("--spec-file", default=None, help="Operad spec file (JSON)")
    common.add_argument("--max-arity", type=int, default=4, help="Largest arity n")
    common.add_argument("--max-weight", type=int, default=4, help="Largest weight w")
    common.add_argument("--max-degree", type=int, default=5, help="Largest homological degree d")
    common.add_argument("--format", dest="output_format", default=OutputFormat.TEXT.value,
                        choices=[f.value for f in OutputFormat])
    common.add_argument("--out", default=None, help="Write the report to this file")
    common.add_argument("--cache-dir", default=None, help="Cache directory (overrides WHEELHOUSE_CACHE)")
    common.add_argument("--parallelism", type=int, default=None, help="Worker count")
    common.add_argument("--debug", action="store_true", help="Debug logging and tracebacks")

    parser = _Parser(prog="wheelhouse", description="Wheeled bar constructions and stable homology")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p_bar = sub.add_parser("bar", parents=[common], help="Operadic bar homology")
    p_bar.add_argument("--isotypic", action="store_true")

    p_wbar = sub.add_parser("wbar", parents=[common], help="Wheeled bar homology")
    p_wbar.add_argument("--wheeling", default=Wheeling.TRIVIAL.value, choices=[w.value for w in Wheeling])
    p_wbar.add_argument("--isotypic", action="store_true")

    p_hc = sub.add_parser("hc", parents=[common], help="Cyclic homology")
    p_hc.add_argument("--of", dest="cyclic_source", default=CyclicSource.INDECOMPOSABLES.value,
                      choices=[c.value for c in CyclicSource])
    p_hc.add_argument("--unreduced", dest="reduced", action="store_false")
    p_hc.add_argument("--isotypic", action="store_true")

    p_ce = sub.add_parser("ce", parents=[common], help="Chevalley-Eilenberg homology")
    p_ce.add_argument("--algebra", default=CEAlgebra.DER_PLUS.value, choices=[a.value for a in CEAlgebra])
    p_ce.add_argument("--dimv", type=int, default=4)
    p_ce.add_argument("--p", type=int, default=0, help="Number of V* coefficient factors")
    p_ce.add_argument("--q", type=int, default=0, help="Number of V coefficient factors")
    p_ce.add_argument("--weight", type=int, default=None, help="Restrict to one weight")
    p_ce.add_argument("--full", action="store_true", help="Whole complex instead of the invariants")

    p_cmp = sub.add_parser("compare", parents=[common], help="Stable-range theorem harness")
    p_cmp.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    p_cmp.add_argument("--dimv", type=int, nargs="+", default=[4])
    p_cmp.add_argument("--coeff", type=_coefficient, action="append", default=None,
                       help="Coefficient pair p,q (repeatable)")
    p_cmp.add_argument("--weight", type=int, default=None, help="Weight r (newfuchs)")
    p_cmp.add_argument("--algebra", default=CEAlgebra.DER_PLUS.value,
                       choices=[CEAlgebra.DER_PLUS.value, CEAlgebra.SDER_PLUS.value],
                       help="lqt: der+ for gl_n, sder+ for sl_n")
    p_cmp.add_argument("--isotypic", action="store_true",
                       help="main1/main2: also compare S_p multiplicities on the V* factors")
    p_cmp.add_argument("--reports-dir", default=None, help="Also write <theorem>_<operad>.json here")

    p_mult = sub.add_parser("mult", parents=[common], help="Mixed representation stability multiplicities")
    p_mult.add_argument("--alpha", type=_int_list, default=[], help="Partition of q, e.g. 2,1")
    p_mult.add_argument("--beta", type=_int_list, default=[], help="Partition of p")
    p_mult.add_argument("--wheeling", default=Wheeling.TRIVIAL.value, choices=[w.value for w in Wheeling])
    p_mult.add_argument("--no-check", dest="check", action="store_false")
    return parser

def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Raises:
        ValidationError: invalid flag values
    """
    raw = vars(args)
    subcommand = Subcommand(raw["subcommand"])
    payload = {
        "subcommand": subcommand,
        "operad": raw["operad"],
        "spec_file": raw["spec_file"],
        "truncation": {
            "max_arity": raw["max_arity"],
            "max_weight": raw["max_weight"],
            "max_degree": raw["max_degree"],
        },
        "output_format": raw["output_format"],
        "out": raw["out"],
        "cache_dir": raw["cache_dir"],
        "parallelism": raw["parallelism"],
        "debug": raw["debug"],
    }
    for key in ("isotypic", "wheeling", "cyclic_source", "reduced", "algebra", "weight",
                "full", "alpha", "beta", "check", "reports_dir"):
        if key in raw and raw[key] is not None:
            payload[key] = raw[key]
    if subcommand == Subcommand.CE:
        payload["dims"] = [raw["dimv"]]
        payload["coefficients"] = [(raw["p"], raw["q"])]
    if subcommand == Subcommand.COMPARE:
        payload["theorem"] = raw["theorem"]
        payload["dims"] = raw["dimv"]
        if raw["coeff"]:
            payload["coefficients"] = raw["coeff"]
    if subcommand == Subcommand.MULT:
        p, q = sum(raw["beta"]), sum(raw["alpha"])
        payload["coefficients"] = [(p, q)]
    return RunConfig.model_validate(payload)

def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Run one subcommand and return the process exit code.

    The report is emitted before a failed stable-range assertion turns
    into exit code 2, so failures still leave their table behind.
    """
    debug = False
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        config = config_from_args(args)
        debug = config.debug
        settings = config.settings()
        configure_logging(settings)
        logger.info("run_started", subcommand=config.subcommand.value, operad=config.operad)
        report = execute(config, settings)
        if isinstance(report, ComparisonReport):
            save_comparison(report, settings.reports_dir)
        emit(report, config.output_format, config.out, stdout)
        if isinstance(report, ComparisonReport):
            report.assert_stable()
        logger.info("run_finished", subcommand=config.subcommand.value)
        return EXIT_OK
    except Exception as e:
        return handle_error(e, stderr, debug)
