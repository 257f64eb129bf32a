"""
pushforward: f_*(alpha) and the check chi(f_*(alpha)) = chi(alpha)
"""
import logging

from packages.strata.functions import as_function
from packages.strata.pushforward import pushforward, verify_pushforward_euler

from ..documents.loader import load_function, load_input
from .output import emit, report_exit_code

logger = logging.getLogger(__name__)


def run(args) -> int:
    inputs = load_input(args.path, skip_validation=args.skip_kernel_validation)
    alpha = load_function(args.function, inputs.source) if args.function else as_function(inputs.source, None)
    image = pushforward(inputs.kernel, alpha)
    report = verify_pushforward_euler(inputs.kernel, alpha)
    payload = {"function": alpha.to_dict(), "pushforward": image.to_dict(), "report": report.to_dict()}
    emit(args, payload, f"f_*{alpha} = {image}\n{report.explain()}")
    return report_exit_code([report])


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("pushforward", parents=parents, help="Push a function forward along a map")
    parser.add_argument("path", help="Map document path or catalog:<name>")
    parser.add_argument("--function", metavar="PATH", help="Function document on the source (default 1)")
    parser.set_defaults(func=run)
