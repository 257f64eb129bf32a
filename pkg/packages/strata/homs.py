"""
Group homomorphisms on constructible functions, given by their values on a basis.

A HomSpec fixes phi(1_{V closure}) (closed basis) or phi(ic_{V closure})
(ic basis) for every stratum. The target is the integers or a FormalClass
family; FormalClass symbols make the universal homomorphisms.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from . import formal
from .arith import checked, checked_mul
from .errors import InputError, MissingLinkData, SpaceMismatch
from .formal import FormalClass
from .functions import Basis, ConstrFn, closed_indicator, decompose_closed, euler, euler_closed
from .ic import LinkSystem, decompose_ic_basis, ic_function
from .poset import StratPoset, StratumId, down_set
from .reports import Term

logger = logging.getLogger(__name__)

Value = Union[int, FormalClass]


def _scale(value: Value, coefficient: int) -> Value:
    if isinstance(value, FormalClass):
        return value * coefficient
    return checked_mul(value, coefficient)


def _add(left: Value, right: Value) -> Value:
    if isinstance(left, FormalClass) or isinstance(right, FormalClass):
        return left + right
    return checked(left + right)


@dataclass(frozen=True)
class HomSpec:
    """
    A homomorphism phi given on the closed-indicator basis or on the ic basis.

    Attributes:
        space: Domain poset
        basis: Basis.CLOSED or Basis.IC
        values: phi of each basis element, keyed by stratum
        zero: Additive identity of the target (0 or an empty FormalClass)
        links: Link system, required for the ic basis
        name: Label used in reports
    """
    space: StratPoset
    basis: Basis
    values: Dict[StratumId, Value]
    zero: Value = 0
    links: Optional[LinkSystem] = None
    name: str = "phi"

    def __post_init__(self):
        if self.basis not in (Basis.CLOSED, Basis.IC):
            raise InputError(f"A homomorphism is given on the closed or ic basis, not {self.basis.value!r}")
        if self.basis == Basis.IC:
            if self.links is None:
                raise MissingLinkData([])
            if self.links.space != self.space:
                raise SpaceMismatch("Homomorphism and link system live on different spaces")
        missing = [s for s in self.space.strata if s not in self.values]
        if missing:
            raise InputError(f"Homomorphism {self.name} has no value on strata {missing}")

    @property
    def is_formal(self) -> bool:
        return isinstance(self.zero, FormalClass)


def evaluate(phi: HomSpec, alpha: ConstrFn) -> Value:
    """
    phi(alpha): expand alpha in phi's basis and apply phi linearly.

    Raises:
        SpaceMismatch: alpha lives on another space
    """
    if alpha.space != phi.space:
        raise SpaceMismatch(f"Function is not defined on the domain of {phi.name}")
    if phi.basis == Basis.CLOSED:
        expansion = decompose_closed(alpha)
    else:
        expansion = decompose_ic_basis(phi.links, alpha)
    total = phi.zero
    for stratum, coefficient in expansion.coefficients.items():
        total = _add(total, _scale(phi.values[stratum], coefficient))
    return total


def closed_value(phi: HomSpec, stratum: StratumId) -> Value:
    """phi(1_{V closure}), evaluated through the ic basis when phi is given there"""
    phi.space.require(stratum)
    if phi.basis == Basis.CLOSED:
        return phi.values[stratum]
    return evaluate(phi, closed_indicator(phi.space, stratum))


def ic_value(phi: HomSpec, links: LinkSystem, stratum: StratumId) -> Value:
    """phi(ic_{V closure})"""
    links.space.require(stratum)
    if phi.basis == Basis.IC and phi.links == links:
        return phi.values[stratum]
    return evaluate(phi, ic_function(links, stratum))


def hat_value(phi: HomSpec, stratum: StratumId) -> Value:
    """
    phi-hat(V closure) = phi(1_{V closure}) - sum_{W<V} phi-hat(W closure).

    Raises:
        UnknownStratum
    """
    space = phi.space
    space.require(stratum)
    table: Dict[StratumId, Value] = {}
    for current in space.strata:
        if current not in space.below[stratum]:
            continue
        value = closed_value(phi, current)
        for lower in space.strictly_below(current):
            value = _add(value, _scale(table[lower], -1))
        table[current] = value
    return table[stratum]


def ichat_value(links: LinkSystem, phi: HomSpec, stratum: StratumId) -> Value:
    """
    phi-ic-hat(V closure) = phi(ic_{V closure}) - sum_{W<V} phi-ic-hat(W closure) * cone(W, V).

    Raises:
        MissingLinkData
    """
    space = links.space
    if phi.space != space:
        raise SpaceMismatch("Homomorphism and link system live on different spaces")
    space.require(stratum)
    links.require_complete(space.below[stratum])
    table: Dict[StratumId, Value] = {}
    for current in space.strata:
        if current not in space.below[stratum]:
            continue
        value = ic_value(phi, links, current)
        for lower in space.strictly_below(current):
            weight = links.value(lower, current)
            if weight:
                value = _add(value, _scale(table[lower], -weight))
        table[current] = value
    return table[stratum]


def chi_hom(space: StratPoset) -> HomSpec:
    """chi, with chi(1_{V closure}) = sum_{W<=V} chi_c(W)"""
    values = {s: euler_closed(space, down_set(space, s)) for s in space.strata}
    return HomSpec(space=space, basis=Basis.CLOSED, values=values, zero=0, name="chi")


def ichi_hom(links: LinkSystem) -> HomSpec:
    """chi given on the ic basis: chi(ic_{V closure}) = Ichi(V closure)."""
    values = {s: euler(ic_function(links, s)) for s in links.space.strata}
    return HomSpec(space=links.space, basis=Basis.IC, values=values, zero=0, links=links, name="chi")


def universal_hom(space: StratPoset) -> HomSpec:
    values = {s: formal.symbol(formal.CLOSED, s) for s in space.strata}
    return HomSpec(space=space, basis=Basis.CLOSED, values=values, zero=formal.zero(formal.CLOSED), name="c*")


def ic_universal_hom(links: LinkSystem) -> HomSpec:
    values = {s: formal.symbol(formal.IC, s) for s in links.space.strata}
    return HomSpec(
        space=links.space, basis=Basis.IC, values=values, zero=formal.zero(formal.IC), links=links, name="c*",
    )


def closed_weights(space: StratPoset) -> Dict[StratumId, int]:
    """Degree of each closed symbol: chi of the closure"""
    return dict(chi_hom(space).values)


def ic_weights(links: LinkSystem) -> Dict[StratumId, int]:
    """Degree of each ic symbol: Ichi of the closure"""
    return dict(ichi_hom(links).values)


def degree(cls: FormalClass, space: StratPoset, links: Optional[LinkSystem] = None) -> int:
    """
    Push a universal class to a point: closed symbols go to chi of the
    closure, ic symbols to Ichi of the closure.
    """
    if cls.family == formal.IC:
        if links is None:
            raise MissingLinkData([])
        return formal.degree(cls, ic_weights(links))
    return formal.degree(cls, closed_weights(space))


def hat_expansion(phi: HomSpec, beta: ConstrFn) -> Tuple[Value, List[Term]]:
    """
    phi(beta) assembled from the dense hat decomposition of beta:
    beta(S) phi(1_Y) + sum_{V<S} (beta(V) - beta(S)) phi-hat(V closure).

    Raises:
        NoDenseStratum
    """
    if beta.space != phi.space:
        raise SpaceMismatch(f"Function is not defined on the domain of {phi.name}")
    space = phi.space
    dense = space.require_dense()
    top = beta.values[dense]
    whole = closed_value(phi, dense)
    right = _scale(whole, top)
    terms = [Term(dense, f"{phi.name}(Y)", top, whole)]
    for stratum in space.strictly_below(dense):
        coefficient = checked(beta.values[stratum] - top)
        value = hat_value(phi, stratum)
        right = _add(right, _scale(value, coefficient))
        terms.append(Term(stratum, f"{phi.name}-hat(V)", coefficient, value))
    return right, terms


def ic_hat_expansion(phi: HomSpec, links: LinkSystem, beta: ConstrFn) -> Tuple[Value, List[Term]]:
    """
    phi(beta) assembled from the dense ic decomposition of beta:
    beta(S) phi(ic_Y) + sum_{V<S} (beta(V) - beta(S) cone(V, S)) phi-ic-hat(V closure).

    Raises:
        NoDenseStratum, MissingLinkData
    """
    if beta.space != links.space or phi.space != links.space:
        raise SpaceMismatch("Function, homomorphism and link system must share one space")
    space = links.space
    dense = space.require_dense()
    links.require_complete()
    top = beta.values[dense]
    whole = ic_value(phi, links, dense)
    right = _scale(whole, top)
    terms = [Term(dense, f"{phi.name}(ic_Y)", top, whole)]
    for stratum in space.strictly_below(dense):
        coefficient = checked(beta.values[stratum] - checked_mul(top, links.value(stratum, dense)))
        value = ichat_value(links, phi, stratum)
        right = _add(right, _scale(value, coefficient))
        terms.append(Term(stratum, f"{phi.name}-ic-hat(V)", coefficient, value))
    return right, terms
