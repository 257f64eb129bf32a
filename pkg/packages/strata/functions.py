"""Constructible functions on a stratification poset and their bases"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Optional, Union

from .arith import checked, checked_mul, checked_sum
from .errors import InputError, SpaceMismatch
from .matrix import invert_unipotent, transition_matrix
from .poset import StratPoset, StratumId, down_set, is_closed
from .reports import FormulaReport, Term, make_report

logger = logging.getLogger(__name__)


class Basis(str, Enum):
    OPEN = "open"
    CLOSED = "closed"
    HAT = "hat"
    IC = "ic"
    # leading coefficient on 1_Y (resp. ic_Y), the rest on hat (resp. ic-hat) elements below
    HAT_DENSE = "hat-dense"
    IC_DENSE = "ic-dense"


@dataclass(frozen=True, eq=False)
class ConstrFn:
    """An integer-valued function constant on each stratum, total on the strata."""
    space: StratPoset
    values: Dict[StratumId, int]

    def at(self, stratum: StratumId) -> int:
        return self.values[self.space.require(stratum)]

    def _check(self, other: "ConstrFn") -> None:
        if other.space != self.space:
            raise SpaceMismatch("Constructible functions live on different spaces")

    def __add__(self, other: Any) -> "ConstrFn":
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, ConstrFn):
            return NotImplemented
        self._check(other)
        return ConstrFn(self.space, {s: checked(self.values[s] + other.values[s]) for s in self.space.strata})

    __radd__ = __add__

    def __neg__(self) -> "ConstrFn":
        return ConstrFn(self.space, {s: -v for s, v in self.values.items()})

    def __sub__(self, other: "ConstrFn") -> "ConstrFn":
        return self + (-other)

    def __mul__(self, other: Any) -> "ConstrFn":
        if isinstance(other, int):
            return ConstrFn(self.space, {s: checked_mul(v, other) for s, v in self.values.items()})
        if isinstance(other, ConstrFn):
            self._check(other)
            return ConstrFn(self.space, {s: checked_mul(self.values[s], other.values[s]) for s in self.space.strata})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConstrFn):
            return NotImplemented
        return self.space == other.space and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.space, tuple(self.values[s] for s in self.space.strata)))

    def __str__(self) -> str:
        return "(" + ", ".join(f"{s} ↦ {self.values[s]}" for s in self.space.strata) + ")"

    def __repr__(self) -> str:
        return f"ConstrFn{self}"

    def to_dict(self) -> Dict[StratumId, int]:
        return {s: self.values[s] for s in self.space.strata}


@dataclass(frozen=True)
class BasisCoefficients:
    """
    Coefficients of a constructible function in one of the bases.

    links is required for the ic-based tags and is the LinkSystem the ic
    functions are built from.
    """
    space: StratPoset
    basis: Basis
    coefficients: Dict[StratumId, int]
    links: Optional[Any] = None

    def recompose(self) -> ConstrFn:
        """Rebuild the function by summing coefficient times basis element."""
        if self.basis in (Basis.IC, Basis.IC_DENSE):
            from .ic import recompose_ic
            return recompose_ic(self)
        space = self.space
        total = zero(space)
        if self.basis == Basis.OPEN:
            for s, c in self.coefficients.items():
                total = total + c * indicator(space, s)
        elif self.basis == Basis.CLOSED:
            for s, c in self.coefficients.items():
                total = total + c * closed_indicator(space, s)
        elif self.basis == Basis.HAT:
            for s, c in self.coefficients.items():
                total = total + c * hat_function(space, s)
        elif self.basis == Basis.HAT_DENSE:
            dense = space.require_dense()
            for s, c in self.coefficients.items():
                element = constant(space, 1) if s == dense else hat_function(space, s)
                total = total + c * element
        return total

    def __add__(self, other: "BasisCoefficients") -> "BasisCoefficients":
        if other.basis != self.basis or other.space != self.space:
            raise SpaceMismatch("Coefficient vectors in different bases or spaces")
        keys = set(self.coefficients) | set(other.coefficients)
        merged = {k: checked(self.coefficients.get(k, 0) + other.coefficients.get(k, 0)) for k in keys}
        return BasisCoefficients(self.space, self.basis, merged, self.links)

    def dense_vector(self) -> List[int]:
        """Coefficients in the canonical order, zeros filled in"""
        return [self.coefficients.get(s, 0) for s in self.space.strata]

    def to_dict(self) -> Dict[str, Any]:
        return {"basis": self.basis.value, "coefficients": dict(zip(self.space.strata, self.dense_vector()))}


def zero(space: StratPoset) -> ConstrFn:
    return ConstrFn(space, {s: 0 for s in space.strata})


def constant(space: StratPoset, value: int) -> ConstrFn:
    return ConstrFn(space, {s: value for s in space.strata})


def from_values(space: StratPoset, values: Mapping[StratumId, int]) -> ConstrFn:
    """Total function from sparse values; missing strata are 0."""
    for s in values:
        space.require(s)
    return ConstrFn(space, {s: checked(int(values.get(s, 0))) for s in space.strata})


def indicator(space: StratPoset, stratum: StratumId) -> ConstrFn:
    """1_V: value 1 on V and 0 elsewhere"""
    space.require(stratum)
    return ConstrFn(space, {s: int(s == stratum) for s in space.strata})


def closed_indicator(space: StratPoset, stratum: StratumId) -> ConstrFn:
    """1 on every W <= V and 0 elsewhere"""
    closure = down_set(space, stratum)
    return ConstrFn(space, {s: int(s in closure) for s in space.strata})


def _hat_table(space: StratPoset, top: StratumId) -> Dict[StratumId, Dict[StratumId, int]]:
    """hat(V) = e_V - sum_{W<V} hat(W) in the closed basis, for all V <= top"""
    table: Dict[StratumId, Dict[StratumId, int]] = {}
    for stratum in space.strata:
        if stratum not in space.below[top]:
            continue
        expansion = {stratum: 1}
        for lower in space.strictly_below(stratum):
            for key, value in table[lower].items():
                expansion[key] = checked(expansion.get(key, 0) - value)
        table[stratum] = {k: v for k, v in expansion.items() if v}
    return table


def hat_closed(space: StratPoset, stratum: StratumId) -> BasisCoefficients:
    """Expansion of the hat element of V over the closed indicators."""
    space.require(stratum)
    return BasisCoefficients(space, Basis.CLOSED, _hat_table(space, stratum)[stratum])


def hat_function(space: StratPoset, stratum: StratumId) -> ConstrFn:
    """The hat element of V as a pointwise function (equals 1_V)."""
    return hat_closed(space, stratum).recompose()


def decompose_open(alpha: ConstrFn) -> BasisCoefficients:
    return BasisCoefficients(alpha.space, Basis.OPEN, {s: v for s, v in alpha.values.items() if v})


def decompose_closed(alpha: ConstrFn) -> BasisCoefficients:
    """Coefficients over closed indicators: c_W = sum_{V >= W} a'_{W,V} alpha(V)."""
    space = alpha.space
    inverse = invert_unipotent(transition_matrix(space))
    coefficients: Dict[StratumId, int] = {}
    for lower in space.strata:
        total = checked_sum(
            checked_mul(inverse.entry(lower, upper), alpha.values[upper])
            for upper in space.above[lower]
        )
        if total:
            coefficients[lower] = total
    return BasisCoefficients(space, Basis.CLOSED, coefficients)


def decompose_hat(alpha: ConstrFn) -> BasisCoefficients:
    """alpha = sum_V alpha(V) * hat(V)"""
    return BasisCoefficients(alpha.space, Basis.HAT, dict(alpha.values))


def decompose_hat_dense(alpha: ConstrFn) -> BasisCoefficients:
    """
    alpha = alpha(S) * 1_Y + sum_{V<S} (alpha(V) - alpha(S)) * hat(V).

    Raises:
        NoDenseStratum: the space has no dense stratum
    """
    space = alpha.space
    dense = space.require_dense()
    top = alpha.values[dense]
    coefficients = {dense: top}
    for stratum in space.strictly_below(dense):
        coefficients[stratum] = checked(alpha.values[stratum] - top)
    return BasisCoefficients(space, Basis.HAT_DENSE, coefficients)


def euler(alpha: ConstrFn) -> int:
    """chi(alpha) = sum_V alpha(V) chi_c(V); chi = chi_c for complex varieties."""
    return checked_sum(checked_mul(alpha.values[s], alpha.space.chi_c[s]) for s in alpha.space.strata)


def euler_closed(space: StratPoset, subset: Iterable[StratumId]) -> int:
    """chi of a closed union of strata"""
    chosen = list(subset)
    if not is_closed(space, chosen):
        raise InputError(f"Strata {sorted(chosen)} do not form a closed subset")
    return checked_sum(space.chi_c[s] for s in set(chosen))


def restrict(alpha: ConstrFn, subset: Iterable[StratumId]) -> ConstrFn:
    chosen = {alpha.space.require(s) for s in subset}
    return ConstrFn(alpha.space, {s: (v if s in chosen else 0) for s, v in alpha.values.items()})


def verify_additivity(space: StratPoset, closed_subset: Iterable[StratumId]) -> FormulaReport:
    """chi(Y) = chi(Z) + chi_c(Y minus Z) for a closed union of strata Z."""
    chosen = set(closed_subset)
    whole = euler(constant(space, 1))
    closed_part = euler_closed(space, chosen)
    terms: List[Term] = [Term("|".join(sorted(chosen)) or "-", "chi(Z)", 1, closed_part)]
    open_part = 0
    for stratum in space.strata:
        if stratum not in chosen:
            terms.append(Term(stratum, "chi_c(open stratum)", 1, space.chi_c[stratum]))
            open_part = checked(open_part + space.chi_c[stratum])
    return make_report(
        "additivity",
        whole,
        checked(closed_part + open_part),
        terms,
    )


def as_function(space: StratPoset, value: Union[ConstrFn, Mapping[StratumId, int], None]) -> ConstrFn:
    """Coerce None (meaning 1 on every stratum), a mapping, or a function."""
    if value is None:
        return constant(space, 1)
    if isinstance(value, ConstrFn):
        if value.space != space:
            raise SpaceMismatch("Function is not defined on this space")
        return value
    return from_values(space, value)
