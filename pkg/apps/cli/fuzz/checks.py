"""
Everything a fuzz trial checks: the formula reports plus independent oracles
"""
import logging
from typing import Callable, Collection, Dict, Optional

from packages.strata.class_formulas import verify_class_formula, verify_degree
from packages.strata.errors import StrataError
from packages.strata.functions import (
    ConstrFn,
    decompose_closed,
    decompose_hat,
    decompose_hat_dense,
    hat_function,
    indicator,
)
from packages.strata.homs import chi_hom, hat_value, ichat_value, ichi_hom
from packages.strata.ic import (
    KClass,
    class_function,
    decompose_ic,
    decompose_ic_basis,
    ic_hat_function,
    ic_transition_matrix,
    k_decompose,
    k_stalks,
    verify_ic_decomposition,
)
from packages.strata.matrix import brute_force_inverse, invert_unipotent, transition_matrix
from packages.strata.pushforward import (
    compose_kernels,
    identity_kernel,
    point_kernel,
    pushforward,
    verify_chi_mult,
    verify_compare,
    verify_ichi_mult,
)

from ..formulas import EXTRA_CHECKS, FORMULAS, RUNNERS
from .generators import Instance

logger = logging.getLogger(__name__)


def _inverse(instance: Instance, kernel) -> bool:
    return all(
        invert_unipotent(matrix) == brute_force_inverse(matrix)
        for matrix in (transition_matrix(instance.target), ic_transition_matrix(instance.target_links))
    )


def _round_trip(instance: Instance, kernel) -> bool:
    alpha = ConstrFn(instance.target, dict(instance.alpha_target))
    links = instance.target_links
    expansions = (
        decompose_hat(alpha),
        decompose_hat_dense(alpha),
        decompose_closed(alpha),
        decompose_ic_basis(links, alpha),
        decompose_ic(links, alpha),
    )
    return all(expansion.recompose() == alpha for expansion in expansions)


def _pointwise_hat(instance: Instance, kernel) -> bool:
    space = instance.target
    return all(
        hat_function(space, s) == indicator(space, s) == ic_hat_function(instance.target_links, s)
        for s in space.strata
    )


def _hat_values(instance: Instance, kernel) -> bool:
    space = instance.target
    chi, ichi = chi_hom(space), ichi_hom(instance.target_links)
    return all(
        hat_value(chi, s) == space.chi_c[s] == ichat_value(instance.target_links, ichi, s)
        for s in space.strata
    )


def _k_round_trip(instance: Instance, kernel) -> bool:
    links = instance.target_links
    cls = KClass(instance.target, dict(instance.alpha_target))
    stalks = k_stalks(cls, links)
    return (
        k_decompose(stalks, links) == cls
        and k_stalks(k_decompose(instance.alpha_target, links), links) == instance.alpha_target
        and class_function(cls, links).to_dict() == stalks
    )


def _functoriality(instance: Instance, kernel) -> bool:
    alpha = ConstrFn(instance.source, dict(instance.alpha))
    to_point = point_kernel(instance.target)
    composite = compose_kernels(to_point, kernel)
    return pushforward(composite, alpha) == pushforward(to_point, pushforward(kernel, alpha))


def _specialization(instance: Instance, kernel) -> bool:
    links = instance.target_links
    identity = verify_ichi_mult(identity_kernel(instance.target), None, links, "eq15")
    compare = verify_compare(links)
    return (identity.left, identity.right, identity.terms) == (compare.left, compare.right, compare.terms)


def _degree_substitution(instance: Instance, kernel) -> bool:
    """Class formulas under chi reproduce the chi-level reports"""
    links = instance.target_links
    chi = chi_hom(instance.target)
    pairs = (
        (verify_class_formula("eq7", kernel, None, hom=chi), verify_chi_mult(kernel)),
        (verify_class_formula("eq16", kernel, None, links, hom=chi), verify_ichi_mult(kernel, None, links, "eq15")),
        (verify_class_formula("c2", None, None, links, hom=chi), verify_compare(links)),
    )
    return all((c.left, c.right) == (r.left, r.right) for c, r in pairs)


def _degree(instance: Instance, kernel) -> bool:
    alpha = ConstrFn(instance.target, dict(instance.alpha_target))
    return verify_degree(alpha).passed and verify_degree(alpha, instance.target_links).passed


def _target_ic_decomposition(instance: Instance, kernel) -> bool:
    alpha = ConstrFn(instance.target, dict(instance.alpha_target))
    return verify_ic_decomposition(instance.target_links, alpha).passed


ORACLES: Dict[str, Callable[[Instance, object], bool]] = {
    "oracle:inverse": _inverse,
    "oracle:round-trip": _round_trip,
    "oracle:pointwise-hat": _pointwise_hat,
    "oracle:hat-values": _hat_values,
    "oracle:k-round-trip": _k_round_trip,
    "oracle:functoriality": _functoriality,
    "oracle:specialization": _specialization,
    "oracle:degree-substitution": _degree_substitution,
    "oracle:degree": _degree,
    "oracle:eq11-target": _target_ic_decomposition,
}

CHECK_NAMES = FORMULAS + EXTRA_CHECKS + tuple(ORACLES)


def evaluate_instance(instance: Instance, only: Optional[Collection[str]] = None) -> Dict[str, bool]:
    """
    Run every check, or just those named in only; an error inside a check
    counts as a failure. The fibration check only applies to one-stratum targets.
    """
    kernel = instance.kernel()
    inputs = instance.as_input()
    alpha = ConstrFn(instance.source, dict(instance.alpha))
    outcomes: Dict[str, bool] = {}
    for name in FORMULAS + EXTRA_CHECKS:
        if only is not None and name not in only:
            continue
        if name == "fibration" and len(instance.target) != 1:
            continue
        try:
            outcomes[name] = RUNNERS[name](inputs, alpha).passed
        except (StrataError, ArithmeticError) as e:
            logger.debug(f"Trial {instance.trial}: {name} raised {type(e).__name__}: {e}")
            outcomes[name] = False
    for name, oracle in ORACLES.items():
        if only is not None and name not in only:
            continue
        try:
            outcomes[name] = bool(oracle(instance, kernel))
        except (StrataError, ArithmeticError) as e:
            logger.debug(f"Trial {instance.trial}: {name} raised {type(e).__name__}: {e}")
            outcomes[name] = False
    return outcomes
