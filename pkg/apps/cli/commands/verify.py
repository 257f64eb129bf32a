"""
verify: run formula checks on a space or map
"""
import logging

from packages.strata.errors import MissingLinkData, NoDenseStratum

from ..documents.loader import load_function, load_input
from ..formulas import EXTRA_CHECKS, FORMULAS, run_formula
from .output import emit, report_exit_code

logger = logging.getLogger(__name__)


def run_all(inputs, alpha):
    """
    Every formula the input supports. Formulas that need link data or a dense
    stratum the input lacks are skipped with the reason instead of aborting the run.
    """
    reports, skipped = [], {}
    for formula in FORMULAS:
        try:
            reports.append(run_formula(formula, inputs, alpha))
        except (MissingLinkData, NoDenseStratum) as e:
            logger.warning(f"Skipping {formula}: {e}")
            skipped[formula] = str(e)
    return reports, skipped


def run(args) -> int:
    inputs = load_input(args.path, skip_validation=args.skip_kernel_validation)
    alpha = load_function(args.function, inputs.source) if args.function else None
    if args.formula == "all":
        reports, skipped = run_all(inputs, alpha)
    else:
        reports, skipped = [run_formula(args.formula, inputs, alpha)], {}
    code = report_exit_code(reports)
    payload = {
        "input": inputs.name,
        "passed": code == 0,
        "reports": [report.to_dict() for report in reports],
        "skipped": skipped,
    }
    lines = [report.explain() for report in reports]
    lines.extend(f"{formula}: skipped ({reason})" for formula, reason in skipped.items())
    emit(args, payload, "\n".join(lines))
    return code


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="Check formulas on a space or map")
    parser.add_argument("path", help="Space or map document path or catalog:<name>")
    parser.add_argument(
        "--formula", default="all", choices=FORMULAS + EXTRA_CHECKS + ("all",),
        help="Formula to check (default all; with all, formulas the input lacks data for are skipped)",
    )
    parser.add_argument("--function", metavar="PATH", help="Function document on the source (default 1)")
    parser.set_defaults(func=run)
