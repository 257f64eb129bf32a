"""
catalog: list or run the built-in worked examples
"""
import logging

from packages.strata.errors import InputError

from ..catalog.examples import EXAMPLES, get_example
from ..documents.loader import load_input
from ..formulas import run_formula
from .output import emit, report_exit_code

logger = logging.getLogger(__name__)


def run(args) -> int:
    if args.action == "list":
        payload = [
            {"name": e.name, "description": e.description, "input": e.reference, "formulas": list(e.formulas)}
            for e in EXAMPLES.values()
        ]
        emit(args, payload, "\n".join(f"{e.name:<20} {e.description}" for e in EXAMPLES.values()))
        return 0

    if not args.name:
        raise InputError("catalog run needs an example name")
    example = get_example(args.name)
    inputs = load_input(example.reference)
    reports = [run_formula(formula, inputs) for formula in example.formulas]
    code = report_exit_code(reports)
    payload = {
        "example": example.name,
        "passed": code == 0,
        "reports": [report.to_dict() for report in reports],
    }
    text = "\n".join([f"{example.name}: {example.description}"] + [report.explain() for report in reports])
    emit(args, payload, text)
    return code


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("catalog", parents=parents, help="List or run the worked examples")
    parser.add_argument("action", choices=("list", "run"))
    parser.add_argument("name", nargs="?", help="Example to run")
    parser.set_defaults(func=run)
