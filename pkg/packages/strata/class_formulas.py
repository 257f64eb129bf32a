"""Class-level formulas checked under the universal homomorphisms"""

import logging
from typing import Optional

from .errors import InputError, MissingLinkData, SpaceMismatch
from .functions import ConstrFn, as_function, constant, euler
from .homs import (
    HomSpec,
    closed_weights,
    degree,
    evaluate,
    hat_expansion,
    ic_hat_expansion,
    ic_weights,
    ic_universal_hom,
    universal_hom,
)
from .ic import LinkSystem
from .pushforward import ProperMapKernel, pushforward, source_alpha
from .reports import FormulaReport, Term, make_report

logger = logging.getLogger(__name__)

CLOSED_FORMULAS = ("eq5", "eq7")
IC_FORMULAS = ("eq14", "eq16", "eq18")
CLASS_FORMULAS = CLOSED_FORMULAS + IC_FORMULAS + ("c2",)


def verify_class_formula(
    which: str,
    kernel: Optional[ProperMapKernel],
    alpha: Optional[ConstrFn],
    links: Optional[LinkSystem] = None,
    hom: Optional[HomSpec] = None,
    source_links: Optional[LinkSystem] = None,
) -> FormulaReport:
    """
    Check a class-level formula coefficientwise.

    The left side is phi(f_*(alpha)) evaluated through phi's basis; the right
    side is assembled from phi-hat (closed formulas) or phi-ic-hat (ic
    formulas) values. phi defaults to the universal homomorphism of the
    matching symbol family; passing a numeric hom such as chi_hom reproduces
    the chi-level report.

    Args:
        which: eq5, eq7, eq14, eq16, eq18 or c2
        kernel: The map (unused for c2)
        alpha: Function on the source; defaults per formula (1_X, or ic_X for eq18)
        links: Target link system (ic formulas and c2)
        hom: Optional homomorphism on the target replacing the universal one
        source_links: Source link system, needed for eq18's ic_X

    Raises:
        NoDenseStratum, MissingLinkData, SpaceMismatch
    """
    if which not in CLASS_FORMULAS:
        raise InputError(f"Unknown class formula {which!r}; expected one of {', '.join(CLASS_FORMULAS)}")

    if which == "c2":
        if links is None:
            raise MissingLinkData([])
        beta = constant(links.space, 1)
    else:
        if kernel is None:
            raise InputError(f"{which} needs a map kernel")
        if which in ("eq5", "eq14"):
            source = as_function(kernel.source, alpha)
        else:
            source = source_alpha(kernel, alpha, which, source_links)
        beta = pushforward(kernel, source)

    target = beta.space
    if which in CLOSED_FORMULAS:
        phi = hom or universal_hom(target)
        if phi.space != target:
            raise SpaceMismatch("Homomorphism does not live on the target of the map")
        right, terms = hat_expansion(phi, beta)
    else:
        if links is None:
            raise MissingLinkData([])
        if links.space != target:
            raise SpaceMismatch("Link system does not live on the target of the map")
        phi = hom or ic_universal_hom(links)
        right, terms = ic_hat_expansion(phi, links, beta)

    left = evaluate(phi, beta)
    logger.debug(f"{which}: {left} against {right}")
    return make_report(which, left, right, terms, {"fiber_chi": beta.to_dict(), "hom": phi.name})


def verify_degree(alpha: ConstrFn, links: Optional[LinkSystem] = None) -> FormulaReport:
    """
    chi(alpha) = deg c_*(alpha). With links given the class is taken in the ic
    family and pushed to a point through Ichi of each closure.
    """
    space = alpha.space
    if links is not None:
        if links.space != space:
            raise SpaceMismatch("Link system and function live on different spaces")
        cls = evaluate(ic_universal_hom(links), alpha)
    else:
        cls = evaluate(universal_hom(space), alpha)
    right = degree(cls, space, links)
    weights = ic_weights(links) if links is not None else closed_weights(space)
    label = "Ichi(V closure)" if links is not None else "chi(V closure)"
    terms = [Term(stratum, label, coefficient, weights[stratum])
             for stratum, coefficient in sorted(cls.coefficients.items())]
    return make_report("degree", euler(alpha), right, terms, {"class": cls})
