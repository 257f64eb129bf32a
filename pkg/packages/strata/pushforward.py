"""
Proper maps as fiberwise Euler-characteristic kernels, the pushforward f_*
and the stratified multiplicative formulas.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .arith import checked, checked_mul, checked_sum
from .errors import InputError, KernelInconsistent, SpaceMismatch
from .functions import ConstrFn, as_function, constant, decompose_hat_dense, euler, hat_function
from .homs import chi_hom, hat_expansion, ic_hat_expansion, ichi_hom
from .ic import LinkSystem, decompose_ic, ic_function, ic_hat_function, ic_total
from .poset import StratPoset, StratumId, build_poset
from .reports import FormulaReport, Term, make_report

logger = logging.getLogger(__name__)

Pair = Tuple[StratumId, StratumId]
Defect = Tuple[StratumId, int, int]


@dataclass(frozen=True, eq=False)
class ProperMapKernel:
    """
    k(V, U) = chi_c(f^-1(v) cap U) for a point v of the target stratum V.

    Entries are keyed (target stratum, source stratum); absent pairs are 0.
    validated records whether column consistency was checked on construction.
    """
    source: StratPoset
    target: StratPoset
    entries: Dict[Pair, int]
    validated: bool = True

    def k(self, target_stratum: StratumId, source_stratum: StratumId) -> int:
        self.target.require(target_stratum)
        self.source.require(source_stratum)
        return self.entries.get((target_stratum, source_stratum), 0)

    def to_rows(self) -> List[List[int]]:
        """Dense matrix, rows target strata and columns source strata, canonical order"""
        return [[self.k(v, u) for u in self.source.strata] for v in self.target.strata]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProperMapKernel):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.entries == other.entries and self.validated == other.validated)

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted(self.entries.items()))))


def column_defects(kernel: ProperMapKernel) -> List[Defect]:
    """Source strata U where sum_V chi_c(V) k(V, U) differs from chi_c(U)"""
    defects = []
    for source_stratum in kernel.source.strata:
        pushed = checked_sum(
            checked_mul(kernel.target.chi_c[v], kernel.entries.get((v, source_stratum), 0))
            for v in kernel.target.strata
        )
        expected = kernel.source.chi_c[source_stratum]
        if pushed != expected:
            defects.append((source_stratum, pushed, expected))
    return defects


def build_kernel(
    source: StratPoset,
    target: StratPoset,
    entries: Mapping[Pair, int],
    validate: bool = True,
) -> ProperMapKernel:
    """
    Build a proper-map kernel.

    Args:
        entries: (target stratum, source stratum) -> fiber chi_c
        validate: enforce column consistency; when False, defects are only logged

    Raises:
        UnknownStratum, KernelInconsistent
    """
    cleaned: Dict[Pair, int] = {}
    for (target_stratum, source_stratum), value in entries.items():
        if target_stratum not in target:
            raise InputError(f"Kernel entry names unknown target stratum {target_stratum!r}")
        if source_stratum not in source:
            raise InputError(f"Kernel entry names unknown source stratum {source_stratum!r}")
        value = checked(int(value))
        if value:
            cleaned[(target_stratum, source_stratum)] = value
    kernel = ProperMapKernel(source=source, target=target, entries=cleaned, validated=validate)
    defects = column_defects(kernel)
    if defects:
        if validate:
            raise KernelInconsistent(defects)
        logger.warning(f"Kernel validation waived with {len(defects)} inconsistent columns: {defects}")
    return kernel


def identity_kernel(space: StratPoset) -> ProperMapKernel:
    return ProperMapKernel(source=space, target=space, entries={(s, s): 1 for s in space.strata})


def point_kernel(space: StratPoset) -> ProperMapKernel:
    """The constant map to a point; the fiber over it is the whole space."""
    point = build_poset([("pt", 0, 1)], [], name="point")
    entries = {("pt", s): space.chi_c[s] for s in space.strata if space.chi_c[s]}
    return ProperMapKernel(source=space, target=point, entries=entries)


def compose_kernels(second: ProperMapKernel, first: ProperMapKernel) -> ProperMapKernel:
    """
    Kernel of g o f from those of f: X -> Y and g: Y -> Z, the matrix product
    (g o f)(Z, U) = sum_W g(Z, W) f(W, U).

    Raises:
        SpaceMismatch: the target of f is not the source of g
    """
    if second.source != first.target:
        raise SpaceMismatch("Kernels are not composable: target of the first map is not the source of the second")
    entries: Dict[Pair, int] = {}
    for outer in second.target.strata:
        for inner in first.source.strata:
            total = checked_sum(
                checked_mul(second.entries.get((outer, middle), 0), first.entries.get((middle, inner), 0))
                for middle in first.target.strata
            )
            if total:
                entries[(outer, inner)] = total
    return ProperMapKernel(
        source=first.source,
        target=second.target,
        entries=entries,
        validated=first.validated and second.validated,
    )


def pushforward(kernel: ProperMapKernel, alpha: ConstrFn) -> ConstrFn:
    """f_*(alpha)(V) = sum_U alpha(U) k(V, U)"""
    if alpha.space != kernel.source:
        raise SpaceMismatch("Function does not live on the source of the map")
    values = {
        v: checked_sum(checked_mul(alpha.values[u], kernel.entries.get((v, u), 0)) for u in kernel.source.strata)
        for v in kernel.target.strata
    }
    return ConstrFn(kernel.target, values)


def _fiber_context(beta: ConstrFn) -> Dict[str, Dict[StratumId, int]]:
    return {"fiber_chi": beta.to_dict()}


def decompose_pushforward_hat(kernel: ProperMapKernel, alpha: Optional[ConstrFn] = None) -> FormulaReport:
    """
    f_*(alpha) = chi(alpha|F) 1_Y + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F)) hat(V),
    with chi(alpha|F_V) read off as f_*(alpha)(V).

    Raises:
        NoDenseStratum
    """
    alpha = as_function(kernel.source, alpha)
    beta = pushforward(kernel, alpha)
    decomposition = decompose_hat_dense(beta)
    target = kernel.target
    dense = target.require_dense()
    terms = [Term(dense, "chi(F) 1_Y", decomposition.coefficients[dense], constant(target, 1))]
    for stratum in target.strictly_below(dense):
        terms.append(Term(
            stratum, "(chi(F_V) - chi(F)) hat(V)", decomposition.coefficients[stratum], hat_function(target, stratum),
        ))
    return make_report("eq3", beta, decomposition.recompose(), terms, _fiber_context(beta))


def verify_chi_mult(
    kernel: ProperMapKernel,
    alpha: Optional[ConstrFn] = None,
    formula: Optional[str] = None,
) -> FormulaReport:
    """
    chi(alpha) = chi(alpha|F) chi(Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F)) chi-hat(V).

    With alpha omitted it is 1_X and the report is the eq6 specialization.
    """
    formula = formula or ("eq6" if alpha is None else "eq4")
    alpha = as_function(kernel.source, alpha)
    beta = pushforward(kernel, alpha)
    right, terms = hat_expansion(chi_hom(kernel.target), beta)
    return make_report(formula, euler(alpha), right, terms, _fiber_context(beta))


def verify_ic_pushforward(
    kernel: ProperMapKernel,
    alpha: Optional[ConstrFn],
    links: LinkSystem,
) -> FormulaReport:
    """
    f_*(alpha) = chi(alpha|F) ic_Y + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F) cone(V, S)) ic-hat(V).

    Raises:
        NoDenseStratum, MissingLinkData
    """
    if links.space != kernel.target:
        raise SpaceMismatch("Link system does not live on the target of the map")
    links.require_complete()
    alpha = as_function(kernel.source, alpha)
    beta = pushforward(kernel, alpha)
    decomposition = decompose_ic(links, beta)
    dense = links.space.require_dense()
    terms = [Term(dense, "chi(F) ic_Y", decomposition.coefficients[dense], ic_function(links, dense))]
    for stratum in links.space.strictly_below(dense):
        terms.append(Term(
            stratum,
            "(chi(F_V) - chi(F) Ichi(cL)) ic-hat(V)",
            decomposition.coefficients[stratum],
            ic_hat_function(links, stratum),
        ))
    return make_report("eq12", beta, decomposition.recompose(), terms, _fiber_context(beta))


def source_alpha(
    kernel: ProperMapKernel,
    alpha: Optional[ConstrFn],
    formula: str,
    source_links: Optional[LinkSystem] = None,
) -> ConstrFn:
    """
    The function a formula is evaluated on: the given alpha, ic_X for the
    pure-dimensional variants (eq17, eq18) and 1_X otherwise.
    """
    if alpha is not None:
        return as_function(kernel.source, alpha)
    if formula in ("eq17", "eq18"):
        if source_links is None:
            raise InputError(f"{formula} needs link data on the source to build ic_X")
        if source_links.space != kernel.source:
            raise SpaceMismatch("Source link system does not live on the source of the map")
        return ic_total(source_links)
    return constant(kernel.source, 1)


def verify_ichi_mult(
    kernel: ProperMapKernel,
    alpha: Optional[ConstrFn],
    links: LinkSystem,
    formula: str = "eq13",
    source_links: Optional[LinkSystem] = None,
) -> FormulaReport:
    """
    chi(alpha) = chi(alpha|F) Ichi(Y)
        + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F) Ichi(cL_{V,Y})) Ichi-hat(V).

    formula selects the specialization: eq13 (any alpha), eq15 (alpha = 1_X)
    or eq17 (alpha = ic_X, the fiber cone terms being f_*(ic_X)(V)).

    Raises:
        NoDenseStratum, MissingLinkData
    """
    if formula not in ("eq13", "eq15", "eq17"):
        raise InputError(f"verify_ichi_mult does not handle {formula}")
    if links.space != kernel.target:
        raise SpaceMismatch("Link system does not live on the target of the map")
    if formula != "eq13" and alpha is None:
        alpha = source_alpha(kernel, None, formula, source_links)
    alpha = as_function(kernel.source, alpha)
    beta = pushforward(kernel, alpha)
    right, terms = ic_hat_expansion(ichi_hom(links), links, beta)
    return make_report(formula, euler(alpha), right, terms, _fiber_context(beta))


def verify_compare(links: LinkSystem) -> FormulaReport:
    """
    chi(Y) = Ichi(Y) + sum_{V<S} (1 - Ichi(cL_{V,Y})) Ichi-hat(V).

    Raises:
        NoDenseStratum, MissingLinkData
    """
    one = constant(links.space, 1)
    right, terms = ic_hat_expansion(ichi_hom(links), links, one)
    return make_report("c1", euler(one), right, terms, _fiber_context(one))


def verify_fibration(kernel: ProperMapKernel) -> FormulaReport:
    """chi(X) = chi(Y) chi(F) for a map onto a single stratum."""
    target = kernel.target
    if len(target) != 1:
        raise InputError(f"Fibration check needs a one-stratum target, got {len(target)} strata")
    (base,) = target.strata
    one = constant(kernel.source, 1)
    fiber = pushforward(kernel, one).values[base]
    terms = [Term(base, "chi(Y) chi(F)", fiber, target.chi_c[base])]
    return make_report("fibration", euler(one), checked_mul(target.chi_c[base], fiber), terms)


def verify_pushforward_euler(kernel: ProperMapKernel, alpha: Optional[ConstrFn] = None) -> FormulaReport:
    alpha = as_function(kernel.source, alpha)
    beta = pushforward(kernel, alpha)
    terms = [Term(v, "chi_c(V) f_*(alpha)(V)", beta.values[v], kernel.target.chi_c[v]) for v in kernel.target.strata]
    return make_report("pushforward-euler", euler(alpha), euler(beta), terms, _fiber_context(beta))
