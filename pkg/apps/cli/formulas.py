"""
Formula selectors and their dispatch onto the calculus
"""
import logging
from typing import Callable, Dict, Optional

from packages.strata.class_formulas import verify_class_formula, verify_degree
from packages.strata.functions import ConstrFn, constant
from packages.strata.ic import verify_ic_decomposition
from packages.strata.pushforward import (
    decompose_pushforward_hat,
    pushforward,
    verify_chi_mult,
    verify_compare,
    verify_fibration,
    verify_ic_pushforward,
    verify_ichi_mult,
    verify_pushforward_euler,
)
from packages.strata.reports import FormulaReport

from .documents.loader import LoadedInput

logger = logging.getLogger(__name__)

FORMULAS = (
    "eq3", "eq4", "eq5", "eq6", "eq7",
    "eq11", "eq12", "eq13", "eq14", "eq15", "eq16", "eq17", "eq18",
    "c1", "c2",
)
EXTRA_CHECKS = ("fibration", "pushforward-euler", "degree")

Runner = Callable[[LoadedInput, Optional[ConstrFn]], FormulaReport]


def _target_alpha(inputs: LoadedInput, alpha: Optional[ConstrFn]) -> ConstrFn:
    """eq11 decomposes a function on the target: alpha itself for a space, f_*(alpha) for a map"""
    if alpha is None:
        return constant(inputs.target, 1)
    if inputs.kind == "space":
        return alpha
    return pushforward(inputs.kernel, alpha)


RUNNERS: Dict[str, Runner] = {
    "eq3": lambda i, a: decompose_pushforward_hat(i.kernel, a),
    "eq4": lambda i, a: verify_chi_mult(i.kernel, a, "eq4"),
    "eq5": lambda i, a: verify_class_formula("eq5", i.kernel, a),
    "eq6": lambda i, a: verify_chi_mult(i.kernel, None, "eq6"),
    "eq7": lambda i, a: verify_class_formula("eq7", i.kernel, None),
    "eq11": lambda i, a: verify_ic_decomposition(i.target_links, _target_alpha(i, a)),
    "eq12": lambda i, a: verify_ic_pushforward(i.kernel, a, i.target_links),
    "eq13": lambda i, a: verify_ichi_mult(i.kernel, a, i.target_links, "eq13"),
    "eq14": lambda i, a: verify_class_formula("eq14", i.kernel, a, i.target_links),
    "eq15": lambda i, a: verify_ichi_mult(i.kernel, None, i.target_links, "eq15"),
    "eq16": lambda i, a: verify_class_formula("eq16", i.kernel, None, i.target_links),
    "eq17": lambda i, a: verify_ichi_mult(i.kernel, None, i.target_links, "eq17", i.source_links),
    "eq18": lambda i, a: verify_class_formula("eq18", i.kernel, None, i.target_links, source_links=i.source_links),
    "c1": lambda i, a: verify_compare(i.target_links),
    "c2": lambda i, a: verify_class_formula("c2", None, None, i.target_links),
    "fibration": lambda i, a: verify_fibration(i.kernel),
    "pushforward-euler": lambda i, a: verify_pushforward_euler(i.kernel, a),
    "degree": lambda i, a: verify_degree(a if a is not None else constant(i.source, 1)),
}


def run_formula(formula: str, inputs: LoadedInput, alpha: Optional[ConstrFn] = None) -> FormulaReport:
    """
    Run one check. alpha lives on the source; formulas fixed to 1_X or ic_X ignore it.

    Raises:
        KeyError: unknown selector
        InputError: the inputs do not support the formula
    """
    report = RUNNERS[formula](inputs, alpha)
    level = logging.DEBUG if report.passed else logging.ERROR
    logger.log(level, report.summary())
    return report
