"""Link systems, intersection-cohomology functions and the IC basis"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .arith import checked, checked_mul, checked_sum
from .errors import InputError, InvalidCodim, LinkDataConflict, MissingLinkData, SpaceMismatch
from .functions import Basis, BasisCoefficients, ConstrFn, euler, zero
from .matrix import TriangularMatrix, invert_unipotent
from .poset import StratPoset, StratumId, closure_subspace, restrict_poset
from .reports import FormulaReport, Term, make_report

logger = logging.getLogger(__name__)

Pair = Tuple[StratumId, StratumId]


def cone_euler(link_betti: Sequence[int], codim: int) -> int:
    """
    Euler characteristic of the intersection cohomology of the open cone on a link.

    The cone keeps the link's intersection cohomology in degrees below the
    complex codimension and kills the rest: sum_{j < codim} (-1)^j b_j.

    Args:
        link_betti: IH Betti numbers b_0, b_1, ... of the (2*codim - 1)-dimensional link
        codim: Complex codimension of the lower stratum in the closure of the upper one

    Raises:
        InvalidCodim: codim < 1
    """
    if isinstance(codim, bool) or not isinstance(codim, int) or codim < 1:
        raise InvalidCodim(codim)
    if any(b < 0 for b in link_betti):
        raise InputError(f"Betti numbers must be nonnegative, got {list(link_betti)}")
    return checked_sum((-1) ** j * b for j, b in enumerate(link_betti) if j < codim)


@dataclass(frozen=True, eq=False)
class LinkSystem:
    """
    For each pair W < V the Euler characteristic of IH of the open cone on the
    link of W in the closure of V. The value on the diagonal is 1.

    A system may be partial; operations that need a missing pair raise
    MissingLinkData.
    """
    space: StratPoset
    cone: Dict[Pair, int]
    betti: Dict[Pair, Tuple[int, ...]] = field(default_factory=dict)

    def value(self, lower: StratumId, upper: StratumId) -> int:
        if lower == upper:
            self.space.require(lower)
            return 1
        if not self.space.lt(lower, upper):
            return 0
        try:
            return self.cone[(lower, upper)]
        except KeyError:
            raise MissingLinkData([(lower, upper)]) from None

    def missing_pairs(self, strata: Optional[Iterable[StratumId]] = None) -> List[Pair]:
        chosen = set(strata) if strata is not None else None
        return [
            pair for pair in self.space.comparable_pairs()
            if pair not in self.cone and (chosen is None or (pair[0] in chosen and pair[1] in chosen))
        ]

    def is_complete(self) -> bool:
        return not self.missing_pairs()

    def require_complete(self, strata: Optional[Iterable[StratumId]] = None) -> None:
        missing = self.missing_pairs(strata)
        if missing:
            raise MissingLinkData(missing)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinkSystem):
            return NotImplemented
        return self.space == other.space and self.cone == other.cone

    def __hash__(self) -> int:
        return hash((self.space, tuple(sorted(self.cone.items()))))


def build_link_system(
    space: StratPoset,
    cone_values: Optional[Mapping[Pair, int]] = None,
    betti: Optional[Mapping[Pair, Sequence[int]]] = None,
) -> LinkSystem:
    """
    Build a link system from direct cone values and/or link IH Betti lists.

    Raises:
        InputError: a pair is not comparable
        LinkDataConflict: both encodings are present for a pair and disagree
    """
    cone: Dict[Pair, int] = {}
    betti_lists: Dict[Pair, Tuple[int, ...]] = {}
    for (lower, upper), values in (betti or {}).items():
        _require_pair(space, lower, upper)
        codim = space.complex_dim[upper] - space.complex_dim[lower]
        betti_lists[(lower, upper)] = tuple(int(b) for b in values)
        cone[(lower, upper)] = cone_euler(betti_lists[(lower, upper)], codim)
    for (lower, upper), value in (cone_values or {}).items():
        _require_pair(space, lower, upper)
        value = checked(int(value))
        if (lower, upper) in cone and cone[(lower, upper)] != value:
            raise LinkDataConflict(lower, upper, value, cone[(lower, upper)])
        cone[(lower, upper)] = value
    links = LinkSystem(space=space, cone=cone, betti=betti_lists)
    missing = links.missing_pairs()
    if missing:
        logger.debug(f"Link system on {space.name or 'space'} is partial: {len(missing)} pairs missing")
    return links


def _require_pair(space: StratPoset, lower: StratumId, upper: StratumId) -> None:
    space.require(lower)
    space.require(upper)
    if not space.lt(lower, upper):
        raise InputError(f"Link data given for ({lower}, {upper}) but {lower!r} is not below {upper!r}")


def restrict_links(links: LinkSystem, stratum: StratumId) -> LinkSystem:
    """The induced link system on the closure of V."""
    sub = closure_subspace(links.space, stratum)
    return LinkSystem(
        space=sub,
        cone={p: v for p, v in links.cone.items() if p[0] in sub and p[1] in sub},
        betti={p: v for p, v in links.betti.items() if p[0] in sub and p[1] in sub},
    )


def ic_function(links: LinkSystem, stratum: StratumId) -> ConstrFn:
    """ic of the closure of V: 1 on V, the cone value on each W < V, 0 off the closure."""
    space = links.space
    space.require(stratum)
    closure = space.below[stratum]
    return ConstrFn(space, {s: (links.value(s, stratum) if s in closure else 0) for s in space.strata})


def ic_euler(links: LinkSystem) -> int:
    """Intersection homology Euler characteristic of the whole space"""
    return euler(ic_function(links, links.space.require_dense()))


def ic_total(links: LinkSystem) -> ConstrFn:
    """
    ic of a pure-dimensional space: the sum of ic over the closures of its
    maximal strata.

    Raises:
        InputError: the maximal strata have different dimensions
    """
    space = links.space
    maxima = [s for s in space.strata if len(space.above[s]) == 1]
    dims = {space.complex_dim[s] for s in maxima}
    if len(dims) > 1:
        raise InputError(f"{space.name or 'space'} is not pure dimensional: maximal strata have dimensions {sorted(dims)}")
    total = zero(space)
    for stratum in maxima:
        total = total + ic_function(links, stratum)
    return total


def ic_transition_matrix(links: LinkSystem, below_dense: bool = False) -> TriangularMatrix:
    """
    a_{W,V} = cone value of (W, V), diagonal 1.

    Args:
        below_dense: drop the dense stratum, as in the K-level recursion
    """
    space = links.space
    if below_dense:
        dense = space.require_dense()
        space = restrict_poset(space, [s for s in space.strata if s != dense])
    links.require_complete(space.strata)
    entries = {}
    for pair in space.comparable_pairs():
        value = links.cone[pair]
        if value:
            entries[pair] = value
    return TriangularMatrix(poset=space, off_diagonal=entries)


def _ic_hat_table(links: LinkSystem, top: StratumId) -> Dict[StratumId, Dict[StratumId, int]]:
    space = links.space
    table: Dict[StratumId, Dict[StratumId, int]] = {}
    for stratum in space.strata:
        if stratum not in space.below[top]:
            continue
        expansion = {stratum: 1}
        for lower in space.strictly_below(stratum):
            weight = links.value(lower, stratum)
            if not weight:
                continue
            for key, value in table[lower].items():
                expansion[key] = checked(expansion.get(key, 0) - checked_mul(value, weight))
        table[stratum] = {k: v for k, v in expansion.items() if v}
    return table


def hat_ic(links: LinkSystem, stratum: StratumId) -> BasisCoefficients:
    """
    Expansion of the ic-hat element of V over the ic functions:
    hat(V) = ic_V - sum_{W<V} hat(W) * cone(W, V).
    """
    links.space.require(stratum)
    return BasisCoefficients(links.space, Basis.IC, _ic_hat_table(links, stratum)[stratum], links)


def ic_hat_function(links: LinkSystem, stratum: StratumId) -> ConstrFn:
    return hat_ic(links, stratum).recompose()


def decompose_ic_basis(links: LinkSystem, alpha: ConstrFn) -> BasisCoefficients:
    """Coefficients of alpha over the ic functions (the inverse transition applied to alpha)."""
    if alpha.space != links.space:
        raise SpaceMismatch("Function and link system live on different spaces")
    inverse = invert_unipotent(ic_transition_matrix(links))
    space = links.space
    coefficients: Dict[StratumId, int] = {}
    for lower in space.strata:
        total = checked_sum(
            checked_mul(inverse.entry(lower, upper), alpha.values[upper]) for upper in space.above[lower]
        )
        if total:
            coefficients[lower] = total
    return BasisCoefficients(space, Basis.IC, coefficients, links)


def decompose_ic(links: LinkSystem, alpha: ConstrFn) -> BasisCoefficients:
    """
    alpha = alpha(S) * ic_Y + sum_{V<S} (alpha(V) - alpha(S) * cone(V, S)) * hat(V).

    Raises:
        NoDenseStratum, MissingLinkData
    """
    if alpha.space != links.space:
        raise SpaceMismatch("Function and link system live on different spaces")
    space = links.space
    dense = space.require_dense()
    top = alpha.values[dense]
    coefficients = {dense: top}
    for stratum in space.strictly_below(dense):
        coefficients[stratum] = checked(alpha.values[stratum] - checked_mul(top, links.value(stratum, dense)))
    return BasisCoefficients(space, Basis.IC_DENSE, coefficients, links)


def recompose_ic(coefficients: BasisCoefficients) -> ConstrFn:
    links = coefficients.links
    if links is None:
        raise MissingLinkData([])
    space = coefficients.space
    total = zero(space)
    if coefficients.basis == Basis.IC:
        for s, c in coefficients.coefficients.items():
            total = total + c * ic_function(links, s)
        return total
    dense = space.require_dense()
    for s, c in coefficients.coefficients.items():
        element = ic_function(links, s) if s == dense else ic_hat_function(links, s)
        total = total + c * element
    return total


def verify_ic_decomposition(links: LinkSystem, alpha: ConstrFn) -> FormulaReport:
    """Check the ic-basis decomposition of alpha by recomposing it pointwise."""
    decomposition = decompose_ic(links, alpha)
    dense = links.space.require_dense()
    terms = [Term(dense, "ic_Y", decomposition.coefficients[dense], ic_function(links, dense))]
    for stratum in links.space.strictly_below(dense):
        terms.append(Term(stratum, "ic-hat(V)", decomposition.coefficients[stratum], ic_hat_function(links, stratum)))
    return make_report(
        "eq11",
        alpha,
        decomposition.recompose(),
        terms,
    )


@dataclass(frozen=True, eq=False)
class KClass:
    """
    sum_V [IC'_V] * L(V) in the submodule freely generated by the IC' classes,
    with K_0(pt) identified with the integers by Euler characteristic.
    """
    space: StratPoset
    coefficients: Dict[StratumId, int]

    def coefficient(self, stratum: StratumId) -> int:
        return self.coefficients.get(self.space.require(stratum), 0)

    def __add__(self, other: "KClass") -> "KClass":
        if other.space != self.space:
            raise SpaceMismatch("K-classes live on different spaces")
        keys = set(self.coefficients) | set(other.coefficients)
        return KClass(self.space, {k: checked(self.coefficients.get(k, 0) + other.coefficients.get(k, 0)) for k in keys})

    def __mul__(self, scalar: int) -> "KClass":
        return KClass(self.space, {k: checked_mul(v, scalar) for k, v in self.coefficients.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KClass):
            return NotImplemented
        mine = {k: v for k, v in self.coefficients.items() if v}
        theirs = {k: v for k, v in other.coefficients.items() if v}
        return self.space == other.space and mine == theirs

    def __hash__(self) -> int:
        return hash((self.space, tuple(sorted((k, v) for k, v in self.coefficients.items() if v))))

    def to_dict(self) -> Dict[str, int]:
        return {s: self.coefficients.get(s, 0) for s in self.space.strata}


def k_stalk(cls: KClass, links: LinkSystem, stratum: StratumId) -> int:
    """Stalk at a point of W: L(W) + sum_{V>W} cone(W, V) L(V)."""
    space = links.space
    space.require(stratum)
    total = cls.coefficient(stratum)
    for upper in space.strictly_above(stratum):
        coefficient = cls.coefficient(upper)
        if coefficient:
            total = checked(total + checked_mul(links.value(stratum, upper), coefficient))
    return total


def k_stalks(cls: KClass, links: LinkSystem) -> Dict[StratumId, int]:
    return {s: k_stalk(cls, links, s) for s in links.space.strata}


def k_decompose(stalks: Mapping[StratumId, int], links: LinkSystem) -> KClass:
    """
    Recover the coefficients L(V) of a class from its stalks at one point per stratum.

    L(S) is the stalk at the dense stratum; for W != S the corrected stalks
    L'(W) = stalk(W) - cone(W, S) stalk(S) solve L' = A L over the strata
    below S, with A the ic transition matrix there, inverted recursively.

    Raises:
        NoDenseStratum, MissingLinkData
    """
    space = links.space
    dense = space.require_dense()
    missing = [s for s in space.strata if s not in stalks]
    if missing:
        raise InputError(f"Stalk data missing for strata {missing}")
    for s in stalks:
        space.require(s)
    top = checked(int(stalks[dense]))
    corrected = {
        s: checked(int(stalks[s]) - checked_mul(links.value(s, dense), top))
        for s in space.strata if s != dense
    }
    coefficients = {dense: top}
    if corrected:
        inverse = invert_unipotent(ic_transition_matrix(links, below_dense=True))
        sub = inverse.poset
        for lower in sub.strata:
            coefficients[lower] = checked_sum(
                checked_mul(inverse.entry(lower, upper), corrected[upper]) for upper in sub.above[lower]
            )
    return KClass(space, coefficients)


def hat_IC_class(links: LinkSystem, stratum: StratumId) -> KClass:
    """The K-level hat class of V, built by the same recursion as hat_ic."""
    return KClass(links.space, dict(hat_ic(links, stratum).coefficients))


def class_function(cls: KClass, links: LinkSystem) -> ConstrFn:
    """Stalkwise Euler characteristic: sum_V L(V) ic_V."""
    total = zero(links.space)
    for stratum, coefficient in cls.coefficients.items():
        if coefficient:
            total = total + coefficient * ic_function(links, stratum)
    return total


def unit_class(links: LinkSystem, stratum: StratumId) -> KClass:
    """[IC'] of the closure of V"""
    return KClass(links.space, {links.space.require(stratum): 1})
